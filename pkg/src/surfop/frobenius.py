"""Frobenius algebras and the tensor-network evaluation of decorated
graphs.

A finite-dimensional algebra with an invariant trace pairing turns
every Assoc-decorated graph into a number: vertices contribute traces
of products taken in the cyclic order of the decoration, edges
contract the copropagator (the inverse of the trace pairing), and legs
either receive explicit insertions or stay open as tensor slots.  The
value only depends on the envelope class of the graph, which is the
consistency the tests pin down.

Everything is exact over the rationals.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .assoc import label_key
from .operads import Report


def _fracs(row):
    return tuple(Fraction(x) for x in row)


def _invert(mat):
    """Inverse of a square Fraction matrix by Gauss-Jordan, or None."""
    n = len(mat)
    aug = [list(mat[r]) + [Fraction(int(c == r)) for c in range(n)]
           for r in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [tuple(row[n:]) for row in aug]


class FrobeniusAlgebra:
    """Structure constants plus a trace functional, all rational.

    mult[i][j] is the coordinate vector of the product of basis
    elements i and j; trace is the functional's coordinate row.  The
    pairing is always the trace form <a, b> = trace(ab).
    """

    __slots__ = ("name", "dim", "mult", "trace", "_pairing",
                 "_copropagator", "_unit")

    def __init__(self, mult, trace, name="algebra"):
        self.name = name
        self.dim = len(trace)
        self.mult = tuple(tuple(_fracs(col) for col in row) for row in mult)
        self.trace = _fracs(trace)
        if len(self.mult) != self.dim or any(
                len(row) != self.dim or any(len(v) != self.dim for v in row)
                for row in self.mult):
            raise ValueError("structure constants must be dim^3")
        self._pairing = None
        self._copropagator = None
        self._unit = None

    def multiply(self, x, y):
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        out[k] += f * c
        return tuple(out)

    def trace_of(self, x):
        return sum(c * t for c, t in zip(x, self.trace))

    def word_trace(self, vectors):
        """trace of the product of the vectors, left to right; the empty
        word traces the unit."""
        if not vectors:
            return self.trace_of(self.unit())
        acc = vectors[0]
        for v in vectors[1:]:
            acc = self.multiply(acc, v)
        return self.trace_of(acc)

    def basis_vector(self, i):
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def pairing(self):
        if self._pairing is None:
            self._pairing = tuple(
                tuple(self.trace_of(self.mult[i][j])
                      for j in range(self.dim))
                for i in range(self.dim))
        return self._pairing

    def copropagator(self):
        """Inverse of the pairing as a matrix; the tensor placed on
        every contracted edge."""
        if self._copropagator is None:
            inv = _invert([list(r) for r in self.pairing()])
            if inv is None:
                raise ValueError("trace pairing of %s is degenerate"
                                 % self.name)
            self._copropagator = tuple(inv)
        return self._copropagator

    def unit(self):
        """The two-sided unit.  The trace determines the only possible
        candidate through the pairing; validate_frobenius checks it
        multiplies as a unit."""
        if self._unit is None:
            delta = self.copropagator()
            self._unit = tuple(
                sum(delta[i][j] * self.trace[i] for i in range(self.dim))
                for j in range(self.dim))
        return self._unit

    def __repr__(self):
        return "FrobeniusAlgebra(%s, dim=%d)" % (self.name, self.dim)


def ground_field():
    return FrobeniusAlgebra([[[1]]], [1], name="ground field")


def matrix_algebra(n=2):
    """n-by-n matrices with the matrix trace; basis E(a,b) at index
    a*n + b."""
    d = n * n
    mult = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        mult[a * n + b][c * n + e][a * n + e] = 1
    trace = [1 if a == b else 0 for a in range(n) for b in range(n)]
    return FrobeniusAlgebra(mult, trace, name="M%d" % n)


def group_algebra_z2():
    """Rational group algebra on {1, g}, trace picking the identity
    coefficient."""
    mult = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    return FrobeniusAlgebra(mult, [1, 0], name="Q[Z/2]")


def reference_algebras():
    return (ground_field(), matrix_algebra(2), group_algebra_z2())


def validate_frobenius(a):
    """Exhaustive check of the axioms over basis triples: associativity,
    trace symmetry, pairing invariance and invertibility, the
    copropagator inverting the pairing, and the unit laws."""
    checks = 0
    d = a.dim
    basis = [a.basis_vector(i) for i in range(d)]
    for i, j, k in itertools.product(range(d), repeat=3):
        checks += 1
        left = a.multiply(a.multiply(basis[i], basis[j]), basis[k])
        right = a.multiply(basis[i], a.multiply(basis[j], basis[k]))
        if left != right:
            return Report("frobenius axioms of %s" % a.name, False, checks,
                          "associativity fails at (%d, %d, %d)" % (i, j, k))
    g = a.pairing()
    for i, j in itertools.product(range(d), repeat=2):
        checks += 1
        if g[i][j] != g[j][i]:
            return Report("frobenius axioms of %s" % a.name, False, checks,
                          "trace is not symmetric at (%d, %d)" % (i, j))
    for i, j, k in itertools.product(range(d), repeat=3):
        checks += 1
        left = a.trace_of(a.multiply(a.multiply(basis[i], basis[j]),
                                     basis[k]))
        right = a.trace_of(a.multiply(basis[i], a.multiply(basis[j],
                                                           basis[k])))
        if left != right:
            return Report("frobenius axioms of %s" % a.name, False, checks,
                          "pairing invariance fails at (%d, %d, %d)"
                          % (i, j, k))
    try:
        delta = a.copropagator()
    except ValueError:
        return Report("frobenius axioms of %s" % a.name, False, checks + 1,
                      "trace pairing is degenerate")
    for i, j in itertools.product(range(d), repeat=2):
        checks += 1
        dot = sum(delta[i][k] * g[k][j] for k in range(d))
        if dot != (1 if i == j else 0):
            return Report("frobenius axioms of %s" % a.name, False, checks,
                          "copropagator does not invert the pairing at "
                          "(%d, %d)" % (i, j))
    u = a.unit()
    for i in range(d):
        checks += 1
        if a.multiply(u, basis[i]) != basis[i] \
                or a.multiply(basis[i], u) != basis[i]:
            return Report("frobenius axioms of %s" % a.name, False, checks,
                          "unit law fails on basis element %d" % i)
    return Report("frobenius axioms of %s" % a.name, True, checks)


class EndElement:
    """A multilinear functional on labeled tensor factors of the
    algebra, stored densely over the basis.

    Axes are kept sorted by label; coeffs is row-major in that order."""

    __slots__ = ("labels", "dim", "coeffs")

    def __init__(self, labels, dim, coeffs):
        order = sorted(range(len(labels)),
                       key=lambda a: label_key(labels[a]))
        self.labels = tuple(labels[a] for a in order)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("axis labels must be distinct")
        self.dim = dim
        coeffs = tuple(coeffs)
        if len(coeffs) != dim ** len(labels):
            raise ValueError("need dim^axes coefficients")
        if order == list(range(len(labels))):
            self.coeffs = coeffs
        else:
            # permute the row-major array so axis a of the result is
            # axis order[a] of the input
            k = len(labels)
            out = [None] * len(coeffs)
            for idx in itertools.product(range(dim), repeat=k):
                src = 0
                for a in range(k):
                    src = src * dim + idx[order[a]]
                dst = 0
                for a in range(k):
                    dst = dst * dim + idx[a]
                out[src] = coeffs[dst]
            self.coeffs = tuple(out)

    @classmethod
    def from_function(cls, labels, dim, fn):
        """fn maps a basis-index assignment (aligned with sorted labels)
        to a Fraction."""
        labels = tuple(sorted(labels, key=label_key))
        coeffs = [fn(idx) for idx in
                  itertools.product(range(dim), repeat=len(labels))]
        return cls(labels, dim, coeffs)

    def _axis(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError("no axis %r" % (label,))

    def scalar(self):
        if self.labels:
            raise ValueError("functional still has open axes %r"
                             % (self.labels,))
        return self.coeffs[0]

    def relabel(self, mapping):
        return EndElement(tuple(mapping.get(l, l) for l in self.labels),
                          self.dim, self.coeffs)

    def tensor(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if set(self.labels) & set(other.labels):
            raise ValueError("axis labels collide")
        k2 = len(other.labels)
        coeffs = []
        for c1 in self.coeffs:
            if c1:
                coeffs.extend(c1 * c2 for c2 in other.coeffs)
            else:
                coeffs.extend([Fraction(0)] * (self.dim ** k2))
        return EndElement(self.labels + other.labels, self.dim, coeffs)

    def apply(self, label, vector):
        """Contract one axis with a coordinate vector."""
        ax = self._axis(label)
        k = len(self.labels)
        stride = self.dim ** (k - 1 - ax)
        block = stride * self.dim
        out = []
        for base in range(0, len(self.coeffs), block):
            for off in range(stride):
                s = Fraction(0)
                for i, vi in enumerate(vector):
                    if vi:
                        s += vi * self.coeffs[base + i * stride + off]
                out.append(s)
        return EndElement(self.labels[:ax] + self.labels[ax + 1:],
                          self.dim, out)

    def contract(self, label1, label2, delta):
        """Contract two axes against the copropagator matrix."""
        a1 = self._axis(label1)
        a2 = self._axis(label2)
        if a1 == a2:
            raise ValueError("cannot contract an axis with itself")
        if a1 > a2:
            a1, a2 = a2, a1
        k = len(self.labels)
        s1 = self.dim ** (k - 1 - a1)
        s2 = self.dim ** (k - 1 - a2)
        keep = [a for a in range(k) if a not in (a1, a2)]
        strides = [self.dim ** (k - 1 - a) for a in keep]
        out = []
        for idx in itertools.product(range(self.dim), repeat=len(keep)):
            base = sum(i * s for i, s in zip(idx, strides))
            s = Fraction(0)
            for i in range(self.dim):
                row = delta[i]
                for j in range(self.dim):
                    if row[j]:
                        s += row[j] * self.coeffs[base + i * s1 + j * s2]
            out.append(s)
        return EndElement(tuple(self.labels[a] for a in keep), self.dim,
                          out)

    def __eq__(self, other):
        return (isinstance(other, EndElement)
                and (self.labels, self.dim, self.coeffs)
                == (other.labels, other.dim, other.coeffs))

    def __hash__(self):
        return hash((self.labels, self.dim, self.coeffs))

    def __repr__(self):
        return "EndElement(axes=%r, dim=%d)" % (list(self.labels), self.dim)


def assoc_to_end(a):
    """The cyclic-operad map sending a cyclic word to the trace of the
    product in that order.

    The returned function takes the word plus an optional dict of fixed
    slots (label -> coordinate vector); fixed slots are substituted and
    the functional keeps only the free ones."""
    dim = a.dim
    mult = a.mult

    def times_basis(x, j):
        out = [Fraction(0)] * dim
        for i, xi in enumerate(x):
            if xi:
                for k, c in enumerate(mult[i][j]):
                    if c:
                        out[k] += xi * c
        return out

    def to_end(word, fixed=None):
        fixed = fixed or {}
        free_sorted = sorted((l for l in word if l not in fixed),
                             key=label_key)
        k = len(free_sorted)
        stride = {l: dim ** (k - 1 - p) for p, l in enumerate(free_sorted)}
        coeffs = [Fraction(0)] * (dim ** k)

        # depth-first over the word so partial products are shared
        # between assignments agreeing on a prefix
        def walk(pos, acc, flat):
            if pos == len(word):
                coeffs[flat] = a.trace_of(a.unit() if acc is None else acc)
                return
            l = word[pos]
            if l in fixed:
                walk(pos + 1,
                     fixed[l] if acc is None else a.multiply(acc, fixed[l]),
                     flat)
            else:
                s = stride[l]
                for j in range(dim):
                    nxt = a.basis_vector(j) if acc is None \
                        else times_basis(acc, j)
                    walk(pos + 1, nxt, flat + j * s)

        walk(0, None, 0)
        return EndElement(tuple(free_sorted), dim, coeffs)

    return to_end


def end_structure_map(graph, inputs, delta):
    """Contract the copropagator across every edge of the graph,
    starting from one functional per vertex indexed by its free
    half-edges; the result is indexed by the remaining (tail) axes.

    Edge order does not matter; that is a tested property, not an
    assumption."""
    factors = list(inputs)
    home = {}
    for f_idx, f in enumerate(factors):
        for l in f.labels:
            if l in home:
                raise ValueError("axis %r appears twice" % (l,))
            home[l] = f_idx
    for h1, h2 in graph.edges():
        i1 = home[h1]
        i2 = home[h2]
        if i1 != i2:
            merged = factors[i1].tensor(factors[i2])
            factors[i1] = merged
            factors[i2] = None
            for l in merged.labels:
                home[l] = i1
        out = factors[i1].contract(h1, h2, delta)
        factors[i1] = out
        for l in out.labels:
            home[l] = i1
    alive = [f for f in factors if f is not None]
    total = alive[0]
    for f in alive[1:]:
        total = total.tensor(f)
    return total


def evaluate_surface(a, decorated, insertions=None, open_labels=()):
    """Value of a decorated graph under the algebra.

    Every leg takes its insertion (default: the unit) except those in
    open_labels, which stay free; the result is a Fraction when nothing
    stays open and an EndElement over the open leg labels otherwise.
    The value depends only on the envelope class of the graph."""
    insertions = dict(insertions or {})
    open_set = set(open_labels)
    unknown = (set(insertions) | open_set) - set(decorated.tails.values())
    if unknown:
        raise ValueError("no such legs: %r" % (sorted(unknown,
                                                      key=label_key),))
    to_end = assoc_to_end(a)
    fixed = {}
    for h, outer in decorated.tails.items():
        if outer not in open_set:
            fixed[h] = _fracs(insertions.get(outer, a.unit()))
    g = decorated.graph
    inputs = [to_end(decorated.decorations[v],
                     {h: fixed[h] for h in g.fiber(v) if h in fixed})
              for v in range(g.n_vertices)]
    out = end_structure_map(g, inputs, a.copropagator())
    out = out.relabel({h: decorated.tails[h] for h in out.labels})
    if open_set:
        return out
    return out.scalar()
