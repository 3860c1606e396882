"""Axiom checkers for cyclic and modular set operads, the free modular
operad of decorated graphs, and the universal evaluation map.

An operad here is any object providing

    elements(labels)       finite list of elements on that label set
    labels_of(x)           frozenset of slot labels of x
    relabel(x, mapping)    push x along a bijection of labels
    compose(x, i, y, j)    glue slot i of x to slot j of y

and, for modular operads, additionally

    self_glue(x, i, j)     glue two slots of the same element.

The checkers sweep the axioms over every element and slot choice drawn
from disjoint label pools and stop at the first failure.  The cyclic
checker bounds every label set in play, inputs and composites alike, by
size_bound.  The modular checker instead bounds each input factor by
factor_bound and lets composites grow as the laws dictate, because for
graph-like operads the interesting growth is in the glued structure,
not the label count; its size_bound caps only the single-element
families (group action, self-gluing).  Permutation equivariance runs
over all permutations of label sets up to full_perm_bound and over a
generating set (one transposition, one full cycle) beyond; combined
with the group-action family this still pins equivariance for the
whole symmetric group.  Both checkers also accept a weight function on
elements plus a budget: a configuration is skipped when the weights of
its inputs plus one per self-gluing exceed the budget.  That is how
the sweep stays affordable on operads whose elements carry genus:
weight them by construction depth.
"""

from __future__ import annotations

import itertools

from .assoc import label_key
from .enumerate import forget_rotation_classes, ribbon_classes
from .graphs import Graph, RibbonGraph


class Report:
    """Outcome of an axiom sweep: ok flag, number of checks performed,
    and a human-readable first counterexample when not ok."""

    __slots__ = ("name", "ok", "checks", "counterexample")

    def __init__(self, name, ok, checks, counterexample=None):
        self.name = name
        self.ok = ok
        self.checks = checks
        self.counterexample = counterexample

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "Report(%s: ok, %d checks)" % (self.name, self.checks)
        return "Report(%s: FAILED after %d checks: %s)" % (
            self.name, self.checks, self.counterexample)


def _pool(prefix, size):
    return tuple("%s%d" % (prefix, k) for k in range(size))


def _perm_maps(labels, full):
    """Permutations of a label set as dicts: all of them, or a
    generating set (identity, first transposition, full cycle)."""
    labels = tuple(labels)
    if full:
        for p in itertools.permutations(labels):
            yield dict(zip(labels, p))
        return
    yield {a: a for a in labels}
    if len(labels) >= 2:
        swapped = (labels[1], labels[0]) + labels[2:]
        yield dict(zip(labels, swapped))
    if len(labels) >= 3:
        yield dict(zip(labels, labels[1:] + labels[:1]))


class _Sweep:
    """Bookkeeping shared by the check_* drivers."""

    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.failure = None

    def expect(self, lhs, rhs, describe):
        self.checks += 1
        if lhs != rhs:
            self.failure = "%s: %r != %r" % (describe(), lhs, rhs)
            return False
        return True

    def report(self):
        return Report(self.name, self.failure is None, self.checks,
                      self.failure)


def _action_family(P, sweep, size_bound, full_perm_bound):
    """relabel is a group action: identity, composition, and a
    round-trip through fresh labels."""
    for n in range(3, size_bound + 1):
        labels = _pool("a", n)
        ident = {a: a for a in labels}
        fresh = {a: "f_" + a for a in labels}
        back = {v: k for k, v in fresh.items()}
        perms = list(_perm_maps(labels, n <= full_perm_bound))
        for x in P.elements(labels):
            if not sweep.expect(P.relabel(x, ident), x,
                                lambda: "relabel by identity moved %r" % (x,)):
                return
            if not sweep.expect(P.relabel(P.relabel(x, fresh), back), x,
                                lambda: "fresh-label round trip moved %r"
                                % (x,)):
                return
            for f in perms:
                for g in perms:
                    gf = {a: g[f[a]] for a in labels}
                    if not sweep.expect(
                            P.relabel(P.relabel(x, f), g),
                            P.relabel(x, gf),
                            lambda: "action axiom on %r via %r then %r"
                            % (x, f, g)):
                        return


def _weight_of(weight, *xs):
    return sum(weight(x) for x in xs) if weight else 0


def _equivariance_family(P, sweep, size_pairs, full_perm_bound,
                         weight, max_weight):
    for si, sj in size_pairs:
        I = _pool("a", si)
        J = _pool("b", sj)
        perms_i = list(_perm_maps(I, si <= full_perm_bound))
        perms_j = list(_perm_maps(J, sj <= full_perm_bound))
        for x in P.elements(I):
            for y in P.elements(J):
                if weight and _weight_of(weight, x, y) > max_weight:
                    continue
                for i in I:
                    for j in J:
                        z = P.compose(x, i, y, j)
                        want = (frozenset(I) - {i}) | (frozenset(J) - {j})
                        if not sweep.expect(
                                frozenset(P.labels_of(z)), want,
                                lambda: "labels of %r o %r" % (x, y)):
                            return
                        for f in perms_i:
                            for g in perms_j:
                                m = {a: f[a] for a in I if a != i}
                                m.update((b, g[b]) for b in J if b != j)
                                if not sweep.expect(
                                        P.relabel(z, m),
                                        P.compose(P.relabel(x, f), f[i],
                                                  P.relabel(y, g), g[j]),
                                        lambda: "equivariance of "
                                        "%r o_{%s,%s} %r under %r, %r"
                                        % (x, i, j, y, f, g)):
                                    return


def _associativity_family(P, sweep, size_triples, weight, max_weight):
    """Both shapes.  Sequential: composing z into the y-part of x o y.
    Parallel: composing y and z into two different slots of x."""
    for si, sj, sk in size_triples:
        I, J, K = _pool("a", si), _pool("b", sj), _pool("c", sk)
        for x, y, z in itertools.product(
                P.elements(I), P.elements(J), P.elements(K)):
            if weight and _weight_of(weight, x, y, z) > max_weight:
                continue
            for i in I:
                for j in J:
                    for k in K:
                        for j2 in J:
                            if j2 == j:
                                continue
                            if not sweep.expect(
                                    P.compose(P.compose(x, i, y, j),
                                              j2, z, k),
                                    P.compose(x, i,
                                              P.compose(y, j2, z, k), j),
                                    lambda: "sequential associativity"
                                    " x=%r i=%s y=%r j=%s j'=%s z=%r k=%s"
                                    % (x, i, y, j, j2, z, k)):
                                return
                        for i2 in I:
                            if i2 == i:
                                continue
                            if not sweep.expect(
                                    P.compose(P.compose(x, i, y, j),
                                              i2, z, k),
                                    P.compose(P.compose(x, i2, z, k),
                                              i, y, j),
                                    lambda: "parallel associativity"
                                    " x=%r i=%s i'=%s y=%r j=%s z=%r k=%s"
                                    % (x, i, i2, y, j, z, k)):
                                return


def check_cyclic_axioms(P, size_bound=6, full_perm_bound=4,
                        weight=None, max_weight=None):
    """Sweep the cyclic operad axioms with every label set in play,
    inputs and composites alike, bounded by size_bound.  Returns a
    Report."""
    sweep = _Sweep("cyclic axioms of %s" % getattr(P, "name", P))
    pairs = [(si, sj)
             for si in range(3, size_bound)
             for sj in range(3, size_bound + 3 - si)]
    triples = [(si, sj, sk)
               for si in range(3, size_bound - 1)
               for sj in range(3, size_bound - 1)
               for sk in range(3, size_bound + 5 - si - sj)]
    _action_family(P, sweep, size_bound, full_perm_bound)
    if sweep.failure is None:
        _equivariance_family(P, sweep, pairs, full_perm_bound,
                             weight, max_weight)
    if sweep.failure is None:
        _associativity_family(P, sweep, triples, weight, max_weight)
    return sweep.report()


def _self_glue_family(Q, sweep, size_bound, full_perm_bound,
                      weight, max_weight):
    """Symmetry and equivariance of self-gluing, commutation of two
    self-gluings, and both interchanges with composition."""
    for n in range(3, size_bound + 1):
        I = _pool("a", n)
        perms = list(_perm_maps(I, n <= full_perm_bound))
        for x in Q.elements(I):
            if weight and weight(x) + 1 > max_weight:
                continue
            for i, j in itertools.combinations(I, 2):
                glued = Q.self_glue(x, i, j)
                if not sweep.expect(
                        glued, Q.self_glue(x, j, i),
                        lambda: "self_glue symmetry on %r at %s,%s"
                        % (x, i, j)):
                    return
                for f in perms:
                    m = {a: f[a] for a in I if a not in (i, j)}
                    if not sweep.expect(
                            Q.relabel(glued, m),
                            Q.self_glue(Q.relabel(x, f), f[i], f[j]),
                            lambda: "self_glue equivariance on %r at %s,%s "
                            "under %r" % (x, i, j, f)):
                        return
            if n >= 4 and not (weight and weight(x) + 2 > max_weight):
                for i, j, k, l in itertools.permutations(I, 4):
                    if i > j or k > l or i > k:
                        continue
                    if not sweep.expect(
                            Q.self_glue(Q.self_glue(x, i, j), k, l),
                            Q.self_glue(Q.self_glue(x, k, l), i, j),
                            lambda: "self_glue commutation on %r at "
                            "%s,%s and %s,%s" % (x, i, j, k, l)):
                        return


def _glue_compose_family(Q, sweep, max_factor, weight, max_weight):
    """Interchange of self-gluing with composition, both placements.
    Factor label sets range up to max_factor; 3 already exercises both
    laws, and the weight budget governs the rest."""
    for si in range(3, max_factor + 1):
        for sj in range(3, max_factor + 1):
            I, J = _pool("a", si), _pool("b", sj)
            for x in Q.elements(I):
                for y in Q.elements(J):
                    if weight and _weight_of(weight, x, y) + 1 > max_weight:
                        continue
                    for i in I:
                        for j in J:
                            z = Q.compose(x, i, y, j)
                            # gluing across the two factors: either pair
                            # may be composed first
                            for a in I:
                                if a == i:
                                    continue
                                for b in J:
                                    if b == j:
                                        continue
                                    if not sweep.expect(
                                            Q.self_glue(z, a, b),
                                            Q.self_glue(
                                                Q.compose(x, a, y, b), i, j),
                                            lambda: "compose/glue interchange"
                                            " x=%r y=%r (%s,%s) vs (%s,%s)"
                                            % (x, y, i, j, a, b)):
                                        return
                            # gluing inside the x factor commutes with
                            # composing at a third slot
                            for a, b in itertools.combinations(I, 2):
                                if i in (a, b):
                                    continue
                                if not sweep.expect(
                                        Q.self_glue(z, a, b),
                                        Q.compose(Q.self_glue(x, a, b),
                                                  i, y, j),
                                        lambda: "glue-inside interchange"
                                        " x=%r y=%r glue %s,%s compose %s,%s"
                                        % (x, y, a, b, i, j)):
                                    return


def check_modular_axioms(Q, size_bound=4, factor_bound=3,
                         full_perm_bound=4, weight=None, max_weight=None):
    """Sweep the modular operad axioms: the cyclic families plus
    self-gluing symmetry, equivariance, commutation, and both
    interchange laws with composition.

    size_bound caps the label sets of the single-element families
    (group action, self-gluing; commutation of two gluings needs 4
    labels, hence the default).  factor_bound caps each input factor of
    the composition families, with composites free to grow.
    weight/max_weight, when given, bound the total construction depth
    of each configuration, counting one per self-gluing.
    """
    sweep = _Sweep("modular axioms of %s" % getattr(Q, "name", Q))
    pairs = [(si, sj)
             for si in range(3, factor_bound + 1)
             for sj in range(3, factor_bound + 1)]
    triples = [(si, sj, sk) for si, sj in pairs
               for sk in range(3, factor_bound + 1)]
    _action_family(Q, sweep, size_bound, full_perm_bound)
    if sweep.failure is None:
        _equivariance_family(Q, sweep, pairs, full_perm_bound,
                             weight, max_weight)
    if sweep.failure is None:
        _associativity_family(Q, sweep, triples, weight, max_weight)
    if sweep.failure is None:
        _self_glue_family(Q, sweep, size_bound, full_perm_bound,
                          weight, max_weight)
    if sweep.failure is None:
        _glue_compose_family(Q, sweep, factor_bound, weight, max_weight)
    return sweep.report()


# -- free modular operad ---------------------------------------------------

class DecoratedGraph:
    """A connected graph whose vertices carry operad elements.

    The decoration of vertex v is an element on the label set fiber(v),
    the raw half-edge indices.  Tails additionally carry outer labels
    in the tails dict (half-edge index -> label); those outer labels
    are the slots of the decorated graph as an operad element.
    """

    __slots__ = ("graph", "tails", "decorations")

    def __init__(self, graph, tails, decorations):
        self.graph = graph
        self.tails = dict(tails)
        self.decorations = tuple(decorations)

    def problems(self, P=None):
        g = self.graph
        out = g.problems()
        if out:
            return out
        for v in range(g.n_vertices):
            if g.valence(v) < 3:
                out.append("vertex %d has valence < 3" % v)
        if set(self.tails) != set(g.tails()):
            out.append("tail labels must cover exactly the tails")
        if len(set(self.tails.values())) != len(self.tails):
            out.append("tail labels must be distinct")
        if len(self.decorations) != g.n_vertices:
            out.append("need one decoration per vertex")
        elif P is not None:
            for v, dec in enumerate(self.decorations):
                if frozenset(P.labels_of(dec)) != frozenset(g.fiber(v)):
                    out.append("decoration %d is not indexed by the "
                               "half-edges of vertex %d" % (v, v))
        return out

    def __repr__(self):
        return "DecoratedGraph(%d vertices, %d edges, tails %r, %r)" % (
            self.graph.n_vertices, len(self.graph.edges()),
            sorted(self.tails.values(), key=label_key), self.decorations)


def decorated_corolla(P, x):
    """The one-vertex decorated graph presenting a bare operad element."""
    labels = sorted(P.labels_of(x), key=label_key)
    n = len(labels)
    graph = Graph((0,) * n, tuple(range(n)), 1)
    dec = P.relabel(x, {lab: h for h, lab in enumerate(labels)})
    return DecoratedGraph(graph, {h: lab for h, lab in enumerate(labels)},
                          (dec,))


def decorated_to_ribbon(X):
    """Rebuild the ribbon graph of a graph decorated by cyclic orders."""
    rotation = [None] * X.graph.n_half_edges
    for cyc in X.decorations:
        cyc = tuple(cyc)
        for k, h in enumerate(cyc):
            rotation[h] = cyc[(k + 1) % len(cyc)]
    if any(r is None for r in rotation):
        raise ValueError("decorations do not cover the half-edges")
    return RibbonGraph(X.graph, rotation, X.tails)


def ribbon_to_decorated(rg):
    """Present a ribbon graph as an Assoc-decorated graph."""
    decs = tuple(rg.cyclic_order(v) for v in range(rg.n_vertices))
    return DecoratedGraph(rg.graph, rg.tails, decs)


def _plain_classes(outer_labels, max_edges, max_loop_rank):
    """Connected plain-graph classes (valences >= 3) with the given
    tails and at most max_edges edges, as (Graph, tails, autos)."""
    pool = []
    for g in range(max_edges // 2 + 2):
        for b in range(1, max_edges + 2 - 2 * g):
            rank = 2 * g + b - 1  # loop rank is constant on the type
            if max_loop_rank is not None and rank > max_loop_rank:
                continue
            for rep in ribbon_classes(g, b, outer_labels,
                                      max_edges=max_edges):
                pool.append(rep)
    return forget_rotation_classes(pool)


def free_modular(P, outer_labels, max_edges, max_loop_rank=None,
                 max_classes=None):
    """Iso-classes of connected P-decorated graphs with the given outer
    tail labels and at most max_edges edges.

    max_loop_rank optionally caps the graph's first Betti number, the
    genus contribution of the graph itself.  Classes are deduplicated
    by letting the plain-graph automorphisms act on decoration tuples.
    Raises RuntimeError when max_classes would be exceeded.
    """
    out = []
    for graph, tails, autos in _plain_classes(tuple(outer_labels),
                                              max_edges, max_loop_rank):
        fibers = graph.fibers()
        per_vertex = [list(P.elements(frozenset(f))) for f in fibers]
        if not all(per_vertex):
            continue
        vmaps = []
        for phi in autos:
            vmaps.append(tuple(graph.attach[phi[f[0]]] for f in fibers))
        seen = set()
        for decs in itertools.product(*per_vertex):
            key = tuple(map(repr, decs))
            if key in seen:
                continue
            orbit = set()
            for phi, vmap in zip(autos, vmaps):
                moved = [None] * graph.n_vertices
                for v, dec in enumerate(decs):
                    moved[vmap[v]] = P.relabel(
                        dec, {h: phi[h] for h in fibers[v]})
                orbit.add(tuple(map(repr, moved)))
            seen.update(orbit)
            out.append(DecoratedGraph(graph, tails, decs))
            if max_classes is not None and len(out) > max_classes:
                raise RuntimeError("more than %d decorated classes"
                                   % max_classes)
    return out


# -- universal property ----------------------------------------------------

def universal_map(p_map, Q):
    """The evaluator Mod(P) -> Q induced by a map of cyclic operads
    p_map: P -> Q (elementwise, preserving labels).

    Returns evaluate(X, edge_order=None): push every decoration of the
    connected DecoratedGraph X through p_map, then weld the edges with
    Q.compose across components of the partial gluing and Q.self_glue
    within one, finally renaming the half-edge slots to X's outer
    labels.  Q's axioms make the result independent of edge_order; the
    parameter exists so tests can shuffle it.
    """

    def evaluate(X, edge_order=None):
        g = X.graph
        if g.component_count() > 1:
            raise ValueError("evaluation needs a connected graph")
        vals = {v: p_map(dec) for v, dec in enumerate(X.decorations)}
        root = list(range(g.n_vertices))

        def find(v):
            while root[v] != v:
                root[v] = root[root[v]]
                v = root[v]
            return v

        edges = list(g.edges()) if edge_order is None else list(edge_order)
        for a, b in edges:
            ra, rb = find(g.attach[a]), find(g.attach[b])
            if ra == rb:
                vals[ra] = Q.self_glue(vals[ra], a, b)
            else:
                merged = Q.compose(vals[ra], a, vals[rb], b)
                root[rb] = ra
                vals[ra] = merged
                del vals[rb]
        val, = vals.values()
        return Q.relabel(val, dict(X.tails))

    return evaluate
