"""The oriented ribbon-graph chain complex of a fixed surface type.

Generators are iso-classes of connected ribbon graphs with the given
genus, boundary cycle count, and labeled legs, every vertex trivalent
or better, graded by degree #H - 3#V (the dimension of the orbi-cell
the class names, also top - E for E the edge count).  A class whose
automorphism group reverses the orientation (vertex order plus vertex
cuts) vanishes rationally and is excluded from the basis.  The
differential expands a vertex into an edge in all ways and lowers the
degree by one; signs come from split_terms plus canonical transport.

Boundary cycles are unlabeled by default; the labeled mode refines
classes by a labeling of the cycles and is the one whose homology
matches moduli of curves with labeled marked points.  The brute-force
permutation-pair census at the bottom is an independent oracle for the
enumeration and for orbifold Euler characteristics.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .ainf import split_terms
from .canonical import (automorphism_count, canonical_form,
                        is_orientation_killed, transport_sign)
from .enumerate import cycle_labelings, ribbon_classes
from .graphs import Graph, RibbonGraph
from .homology import SparseRationalMatrix, betti


class ModuliType:
    """Surface type of a moduli problem: genus, number of boundary
    cycles, leg labels, and whether the cycles themselves are labeled
    (with 0..n-1).  Stability means some ribbon graph realizes the
    type: 4g + 2n + #legs >= 5."""

    __slots__ = ("genus", "n_cycles", "tails", "labeled_cycles")

    def __init__(self, genus, n_cycles, tails=(), labeled_cycles=False):
        if genus < 0 or n_cycles < 1:
            raise ValueError("need genus >= 0 and at least one cycle")
        tails = tuple(tails)
        if len(set(tails)) != len(tails):
            raise ValueError("leg labels must be distinct")
        self.genus = genus
        self.n_cycles = n_cycles
        self.tails = tails
        self.labeled_cycles = bool(labeled_cycles)

    def is_stable(self):
        return 4 * self.genus + 2 * self.n_cycles + len(self.tails) >= 5

    def min_edges(self):
        return 2 * self.genus + self.n_cycles - 1

    def max_edges(self):
        """Trivalent edge count 6g + 3n - 6 + #legs."""
        return 6 * self.genus + 3 * self.n_cycles - 6 + len(self.tails)

    def top_degree(self):
        """Degree of the one-vertex classes, the deepest cells."""
        return self.max_edges() - self.min_edges()

    def degree_of_edges(self, n_edges):
        return self.max_edges() - n_edges

    def __eq__(self, other):
        return (isinstance(other, ModuliType)
                and (self.genus, self.n_cycles, self.tails,
                     self.labeled_cycles)
                == (other.genus, other.n_cycles, other.tails,
                    other.labeled_cycles))

    def __hash__(self):
        return hash((self.genus, self.n_cycles, self.tails,
                     self.labeled_cycles))

    def __repr__(self):
        extra = ", labeled" if self.labeled_cycles else ""
        return "ModuliType(g=%d, n=%d, legs=%r%s)" % (
            self.genus, self.n_cycles, list(self.tails), extra)


class ComplexGenerator:
    """A basis element: canonical representative with its reference
    orientation (vertices in index order, rotations cut at the minimal
    half-edge), plus the cycle labeling in labeled mode."""

    __slots__ = ("rg", "cycle_labels", "code", "degree")

    def __init__(self, rg, cycle_labels, code):
        self.rg = rg
        self.cycle_labels = cycle_labels
        self.code = code
        self.degree = rg.degree()

    def n_edges(self):
        return len(self.rg.graph.edges())

    def automorphism_count(self):
        return automorphism_count(self.rg, cycle_labels=self.cycle_labels)

    def __eq__(self, other):
        return (isinstance(other, ComplexGenerator)
                and self.code == other.code)

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return "ComplexGenerator(degree=%d, edges=%d)" % (
            self.degree, self.n_edges())


def _raw_classes(t, max_edges=None):
    """Iso-classes of the type before orientation-killing, as
    ComplexGenerators (canonical representatives)."""
    if not t.is_stable():
        raise ValueError("unstable type %r has no ribbon graphs" % (t,))
    cap = t.max_edges() if max_edges is None else min(max_edges,
                                                      t.max_edges())
    out = []
    for rep in ribbon_classes(t.genus, t.n_cycles, t.tails, max_edges=cap):
        if t.labeled_cycles:
            for cl in cycle_labelings(rep, range(t.n_cycles)):
                cf = canonical_form(rep, cycle_labels=cl)
                out.append(ComplexGenerator(cf.graph, cf.cycle_labels,
                                            cf.code))
        else:
            cf = canonical_form(rep)
            out.append(ComplexGenerator(cf.graph, None, cf.code))
    out.sort(key=lambda g: (g.degree, g.code))
    return out


def _graded_basis(t, max_edges=None):
    """(alive, killed): alive maps degree -> ordered generator list for
    every degree 0..top, killed is the set of excluded codes."""
    alive = {k: [] for k in range(t.top_degree() + 1)}
    killed = set()
    for gen in _raw_classes(t, max_edges):
        if is_orientation_killed(gen.rg, cycle_labels=gen.cycle_labels):
            killed.add(gen.code)
        else:
            alive[gen.degree].append(gen)
    return alive, killed


def enumerate_generators(t, min_degree=0, max_degree=None):
    """Graded basis of the complex: {degree: [ComplexGenerator]} with
    orientation-killed classes removed.

    Degrees outside [min_degree, max_degree] are omitted; since degree
    falls as edges grow, min_degree also caps the enumeration work.
    """
    cap = None
    if min_degree > 0:
        cap = t.max_edges() - min_degree
    alive, _ = _graded_basis(t, max_edges=cap)
    return {k: gens for k, gens in alive.items()
            if k >= min_degree and (max_degree is None or k <= max_degree)}


def class_census(t, max_edges=None):
    """{edge count: class count} before orientation-killing; the side
    the brute-force oracle must reproduce."""
    census = {}
    for gen in _raw_classes(t, max_edges):
        e = gen.n_edges()
        census[e] = census.get(e, 0) + 1
    return census


def _half_edge_labels(rg, cycle_labels):
    lab = {}
    for idx, cyc in enumerate(rg.boundary_cycles()):
        for h in cyc:
            lab[h] = cycle_labels[idx]
    return lab


def _child_cycle_labels(parent_rg, parent_labels, child):
    """Transfer a boundary-cycle labeling through one vertex split.

    Splitting is inverse to contracting the fresh edge, and contraction
    preserves faces, so each child cycle inherits the label of the
    parent cycle through any shared (old) half-edge.
    """
    if parent_labels is None:
        return None
    old = _half_edge_labels(parent_rg, parent_labels)
    out = {}
    for idx, cyc in enumerate(child.boundary_cycles()):
        lab = next(old[h] for h in cyc if h in old)
        out[idx] = lab
    return out


def boundary_matrices(t, basis=None, killed=None):
    """Boundary matrices of the complex, index k mapping degree k+1 to
    degree k, entries the signed vertex-split counts.

    basis and killed may be passed in (the two halves of
    _graded_basis) to avoid re-enumerating; otherwise both are built
    here.
    """
    if basis is None:
        basis, killed = _graded_basis(t)
    degrees = sorted(basis)
    index = {k: {gen.code: i for i, gen in enumerate(basis[k])}
             for k in degrees}
    mats = []
    for k in degrees[1:]:
        entries = {}
        for col, gen in enumerate(basis[k]):
            for child, sign in split_terms(gen.rg):
                cl = _child_cycle_labels(gen.rg, gen.cycle_labels, child)
                cf = canonical_form(child, cycle_labels=cl)
                row = index[k - 1].get(cf.code)
                if row is None:
                    # a split of a type-t graph is a type-t graph, so a
                    # miss must be an orientation-killed class
                    if killed is not None and cf.code not in killed:
                        raise AssertionError(
                            "split produced an unknown class")
                    continue
                total = entries.get((row, col), 0) + \
                    sign * transport_sign(child, cf.hmap, cf.graph)
                entries[(row, col)] = total
        mats.append(SparseRationalMatrix(
            len(basis[k - 1]), len(basis[k]),
            {pos: v for pos, v in entries.items() if v}))
    return mats


def moduli_homology(t, rank_fn=None):
    """HomologyProfile of the complex over exact rationals.

    betti[k] is the rational Betti number in cell degree k; with
    labeled cycles these are the Betti numbers of the moduli of curves
    of that type.
    """
    alive, killed = _graded_basis(t)
    mats = boundary_matrices(t, basis=alive, killed=killed)
    dims = [len(alive[k]) for k in sorted(alive)]
    kwargs = {} if rank_fn is None else {"rank_fn": rank_fn}
    return betti(mats, dims=dims, **kwargs)


def orbifold_euler(t):
    """Orbifold Euler characteristic: every class before
    orientation-killing contributes (-1)^degree / #automorphisms."""
    total = Fraction(0)
    for gen in _raw_classes(t):
        total += Fraction((-1) ** gen.degree, gen.automorphism_count())
    return total


@lru_cache(maxsize=None)
def bernoulli(m):
    """Bernoulli number B_m (B_1 = -1/2 convention) via the defining
    recurrence."""
    if m == 0:
        return Fraction(1)
    total = Fraction(0)
    for k in range(m):
        total += comb(m + 1, k) * bernoulli(k)
    return -total / (m + 1)


def harer_zagier(genus, n):
    """Closed-form orbifold Euler characteristic of the moduli of
    genus-g curves with n labeled marked points."""
    if n < 1 or genus < 0 or (genus == 0 and n < 3):
        raise ValueError("need n >= 1 marked points and stability")
    if genus == 0:
        return Fraction((-1) ** (n - 3) * factorial(n - 3))
    sign = (-1) ** n
    shape = Fraction(factorial(2 * genus - 3 + n),
                     factorial(2 * genus - 2))
    return sign * shape * bernoulli(2 * genus) / (2 * genus)


# -- brute-force oracle -----------------------------------------------------

def _min_part_permutations(n, least):
    """All permutations of range(n) whose cycles all have length >=
    least, yielded as tuples."""
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        ok = True
        for s in range(n):
            if seen[s]:
                continue
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                length += 1
            if length < least:
                ok = False
                break
        if ok:
            yield perm


def _conjugate(perm, g):
    out = [0] * len(perm)
    for x, px in enumerate(perm):
        out[g[x]] = g[px]
    return tuple(out)


def _pairing_centralizer_generators(n_edges):
    """Generators of the centralizer of (01)(23)...: swaps within a
    pair and swaps of adjacent pairs."""
    n = 2 * n_edges
    gens = []
    for i in range(n_edges):
        g = list(range(n))
        g[2 * i], g[2 * i + 1] = g[2 * i + 1], g[2 * i]
        gens.append(tuple(g))
    for i in range(n_edges - 1):
        g = list(range(n))
        g[2 * i], g[2 * i + 2] = g[2 * i + 2], g[2 * i]
        g[2 * i + 1], g[2 * i + 3] = g[2 * i + 3], g[2 * i + 1]
        gens.append(tuple(g))
    return gens


def _ribbon_from_rotation(perm):
    """RibbonGraph with rotation perm and the standard pairing."""
    n = len(perm)
    seen = [False] * n
    attach = [0] * n
    v = 0
    for s in range(n):
        if seen[s]:
            continue
        x = s
        while not seen[x]:
            seen[x] = True
            attach[x] = v
            x = perm[x]
        v += 1
    sigma = [x + 1 if x % 2 == 0 else x - 1 for x in range(n)]
    return RibbonGraph(Graph(tuple(attach), sigma, v), perm)


def oracle_census(max_edges):
    """Brute-force class counts {(genus, cycles, edges): count} for all
    connected leg-free types, independent of the canonical-form
    pipeline: the pairing is pinned to (01)(23)..., rotations sweep all
    permutations with every cycle >= 3 long, and classes are orbits
    under the pairing's centralizer (conjugation is the only freedom
    left once the pairing is fixed)."""
    census = {}
    for n_edges in range(1, max_edges + 1):
        gens = _pairing_centralizer_generators(n_edges)
        visited = set()
        for rho in _min_part_permutations(2 * n_edges, 3):
            key = bytes(rho)
            if key in visited:
                continue
            orbit = [rho]
            visited.add(key)
            front = [rho]
            while front:
                cur = front.pop()
                for g in gens:
                    nxt = _conjugate(cur, g)
                    k = bytes(nxt)
                    if k not in visited:
                        visited.add(k)
                        orbit.append(nxt)
                        front.append(nxt)
            rg = _ribbon_from_rotation(rho)
            if rg.graph.component_count() != 1:
                continue
            (g, b), = rg.genus_boundary()
            key = (g, b, n_edges)
            census[key] = census.get(key, 0) + 1
    return census


def oracle_enumerate(t, max_edges):
    """Brute-force count of type-t classes with at most max_edges
    edges, before orientation-killing.  Leg-free unlabeled types only;
    must match class_census totals."""
    if t.tails or t.labeled_cycles:
        raise ValueError("the oracle covers leg-free unlabeled types")
    census = oracle_census(max_edges)
    return sum(count for (g, b, e), count in census.items()
               if (g, b) == (t.genus, t.n_cycles))
