"""Enumeration of ribbon graph isomorphism classes.

Strategy: every connected ribbon graph contracts a spanning tree down to
a one-vertex graph, so every class is reachable from a one-vertex class
by vertex splittings (each split adds one edge and one vertex and is
inverse to contracting the fresh edge).  One-vertex graphs are chord
diagrams: fix the rotation to be the standard cycle and vary the
involution.  The closure of the chord-diagram seeds under all splits,
deduplicated by canonical form, is the full list of classes with the
given invariants; it terminates because splitting strictly lowers the
degree #H - 3#V, which is bounded below by zero.

This generator is deliberately different from the brute-force
permutation-pair oracle in ribbon_complex; the two are compared in the
acceptance tests.
"""

from __future__ import annotations

import itertools

from .canonical import canonical_code
from .graphs import Graph, RibbonGraph


def perfect_matchings(points):
    """All perfect matchings of a list of points (pair lists)."""
    points = list(points)
    if not points:
        yield []
        return
    if len(points) % 2:
        raise ValueError("odd point set has no perfect matching")
    first, rest = points[0], points[1:]
    for k, second in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for sub in perfect_matchings(remaining):
            yield [(first, second)] + sub


def one_vertex_classes(n_edges, tail_labels=()):
    """Iso-classes of one-vertex ribbon graphs with n_edges edges and
    tails carrying the given labels.

    Rotation is the standard cycle on 2E+T half-edges (any one-vertex
    rotation relabels to it); the involution runs over all placements of
    tails and chords.  Unlabeled diagrams are deduplicated first, then
    tail labels are attached in all inequivalent ways.
    """
    tail_labels = tuple(tail_labels)
    t = len(tail_labels)
    h = 2 * n_edges + t
    if h == 0:
        return []
    classes = {}
    rotation = tuple((i + 1) % h for i in range(h))
    for tail_positions in itertools.combinations(range(h), t):
        chord_points = [i for i in range(h) if i not in tail_positions]
        for matching in perfect_matchings(chord_points):
            sigma = list(range(h))
            for a, b in matching:
                sigma[a], sigma[b] = b, a
            rg = RibbonGraph(Graph((0,) * h, sigma, 1), rotation)
            code = canonical_code(rg)
            if code not in classes:
                classes[code] = rg
    if t == 0:
        return list(classes.values())
    labeled = {}
    for rg in classes.values():
        positions = rg.graph.tails()
        for perm in itertools.permutations(tail_labels):
            cand = RibbonGraph(rg.graph, rg.rotation,
                               dict(zip(positions, perm)))
            code = canonical_code(cand)
            if code not in labeled:
                labeled[code] = cand
    return list(labeled.values())


def split_closure(seeds, max_edges=None):
    """All iso-classes reachable from the seeds by vertex splittings.

    Returns {canonical code: representative}.  Splitting stops by itself
    once every vertex is trivalent; max_edges cuts the sweep off early.
    """
    classes = {}
    frontier = []
    for rg in seeds:
        code = canonical_code(rg)
        if code not in classes:
            classes[code] = rg
            frontier.append(rg)
    while frontier:
        nxt = []
        for rg in frontier:
            if max_edges is not None and len(rg.graph.edges()) >= max_edges:
                continue
            for v, run in rg.splits():
                child = rg.split_vertex(v, run)
                code = canonical_code(child)
                if code not in classes:
                    classes[code] = child
                    nxt.append(child)
        frontier = nxt
    return classes


def ribbon_classes(genus, n_cycles, tail_labels=(), max_edges=None):
    """All iso-classes of connected ribbon graphs of the given surface
    invariants (boundary cycles unlabeled), every vertex trivalent or
    better, tails labeled.

    A connected graph with these invariants has E - V = 2g + b - 2, so
    the one-vertex seeds sit at E = 2g + b - 1 and splitting sweeps out
    everything up to the trivalent top at E = 6g + 3b - 6 + #tails,
    or up to max_edges when that is lower.
    """
    e0 = 2 * genus + n_cycles - 1
    if e0 < 0 or 2 * e0 + len(tail_labels) < 3:
        return []
    if max_edges is not None and max_edges < e0:
        return []
    seeds = [rg for rg in one_vertex_classes(e0, tail_labels)
             if rg.genus_boundary() == ((genus, n_cycles),)]
    return list(split_closure(seeds, max_edges).values())


def cycle_labelings(rg, labels):
    """All inequivalent ways to label the boundary cycles of rg with the
    given distinct labels; yields cycle_labels dicts."""
    labels = tuple(labels)
    cycles = rg.boundary_cycles()
    if len(labels) != len(cycles):
        raise ValueError("need exactly one label per boundary cycle")
    seen = set()
    for perm in itertools.permutations(labels):
        cl = dict(enumerate(perm))
        code = canonical_code(rg, cycle_labels=cl)
        if code not in seen:
            seen.add(code)
            yield cl


def forget_rotation_classes(ribbon_reps):
    """Plain-graph iso-classes underlying a list of ribbon classes.

    Returns a list of (Graph, tails dict, automorphism list) triples;
    automorphisms are half-edge maps.  Intended for small inputs; the
    matcher is a plain backtracking search.
    """
    out = []
    for rg in ribbon_reps:
        g, tails = rg.graph, rg.tails
        if any(_plain_isomorphisms_exist(g, tails, g2, t2)
               for g2, t2, _ in out):
            continue
        autos = list(plain_isomorphisms(g, tails, g, tails))
        out.append((g, tails, autos))
    return out


def plain_isomorphisms(g1, tails1, g2, tails2):
    """All isomorphisms of plain graphs (no rotations), as half-edge
    maps.  Tail labels must match.  Backtracking over vertices."""
    if (g1.n_vertices != g2.n_vertices
            or g1.n_half_edges != g2.n_half_edges
            or sorted(map(len, g1.fibers())) != sorted(map(len, g2.fibers()))):
        return
    fibers1, fibers2 = g1.fibers(), g2.fibers()

    def extend_vertices(i, vmap, used):
        if i == g1.n_vertices:
            yield from extend_halves(0, vmap, {})
            return
        for w in range(g2.n_vertices):
            if w in used or len(fibers2[w]) != len(fibers1[i]):
                continue
            yield from extend_vertices(i + 1, vmap + [w], used | {w})

    def extend_halves(v, vmap, hmap):
        if v == g1.n_vertices:
            if _plain_check(g1, tails1, g2, tails2, hmap):
                out = [0] * g1.n_half_edges
                for a, b in hmap.items():
                    out[a] = b
                yield tuple(out)
            return
        f1, f2 = fibers1[v], fibers2[vmap[v]]
        for perm in itertools.permutations(f2):
            ok = True
            trial = dict(hmap)
            for a, b in zip(f1, perm):
                t1 = g1.sigma[a] == a
                t2 = g2.sigma[b] == b
                if t1 != t2 or (t1 and tails1.get(a) != tails2.get(b)):
                    ok = False
                    break
                trial[a] = b
            if ok:
                yield from extend_halves(v + 1, vmap, trial)

    yield from extend_vertices(0, [], frozenset())


def _plain_check(g1, tails1, g2, tails2, hmap):
    for a in range(g1.n_half_edges):
        if hmap[g1.sigma[a]] != g2.sigma[hmap[a]]:
            return False
    return True


def _plain_isomorphisms_exist(g1, tails1, g2, tails2):
    for _ in plain_isomorphisms(g1, tails1, g2, tails2):
        return True
    return False
