"""Independent reference computations for the tests.

Everything here recomputes a quantity the package also computes, by a
visibly different route, so that agreement between the two is evidence
rather than tautology.
"""

import itertools
from fractions import Fraction


def direct_value(a, X, insertions=None):
    """Closed or capped surface value by brute edge coloring.

    Sums over all assignments of basis indices to the two sides of every
    edge, weighting by the copropagator, and takes the cyclic trace of
    each vertex word.  Exponential in the edge count; fine at desk scale.
    """
    g = X.graph
    delta = a.copropagator()
    fixed = {}
    for h, outer in X.tails.items():
        fixed[h] = (insertions or {}).get(outer, a.unit())
    basis = [a.basis_vector(i) for i in range(a.dim)]
    edges = g.edges()
    total = Fraction(0)
    for colors in itertools.product(range(a.dim), repeat=2 * len(edges)):
        weight = Fraction(1)
        assign = dict(fixed)
        for e, (h1, h2) in enumerate(edges):
            i, j = colors[2 * e], colors[2 * e + 1]
            weight *= delta[i][j]
            assign[h1] = basis[i]
            assign[h2] = basis[j]
        if not weight:
            continue
        for v in range(g.n_vertices):
            weight *= a.word_trace([assign[h] for h in X.decorations[v]])
            if not weight:
                break
        total += weight
    return total


def _bracketings(k):
    """Full binary trees with k ordered leaves, as nested pairs."""
    if k == 1:
        yield 0
        return
    for split in range(1, k):
        for left in _bracketings(split):
            for right in _bracketings(k - split):
                yield (left, right)


def count_trivalent_planar_trees(n_leaves):
    """Trivalent planar trees with n labeled leaves, counted by listing.

    Rooting at the minimal leaf turns such a tree into a planar binary
    tree whose remaining leaves read off in some order, so the objects
    are (bracketing, permutation) pairs; we enumerate them rather than
    multiply closed forms.
    """
    if n_leaves < 3:
        raise ValueError("need at least 3 leaves")
    count = 0
    for _ in itertools.permutations(range(n_leaves - 1)):
        for _ in _bracketings(n_leaves - 1):
            count += 1
    return count


# Pairing-walk census of connected ribbon graph classes with every
# vertex at least trivalent: (genus, boundary cycles, edges) -> count.
# Produced by oracle_census(5) and spot-checked by hand at two and
# three edges; kept frozen here so the cheap unit tests can cross-check
# class_census without re-running the walk.
RIBBON_CENSUS = {
    (0, 3, 2): 1, (0, 3, 3): 2,
    (0, 4, 3): 2, (0, 4, 4): 6, (0, 4, 5): 7,
    (0, 5, 4): 3, (0, 5, 5): 21,
    (0, 6, 5): 6,
    (1, 1, 2): 1, (1, 1, 3): 1,
    (1, 2, 3): 3, (1, 2, 4): 8, (1, 2, 5): 8,
    (1, 3, 4): 11, (1, 3, 5): 72,
    (1, 4, 5): 46,
    (2, 1, 4): 4, (2, 1, 5): 21,
    (2, 2, 5): 53,
}


def brute_isomorphisms(rg1, rg2):
    """Ribbon graph isomorphisms by trying every half-edge bijection.

    Factorial in the half-edge count; only for the smallest graphs.
    """
    n = rg1.n_half_edges
    if n != rg2.n_half_edges or rg1.n_vertices != rg2.n_vertices:
        return []
    out = []
    for perm in itertools.permutations(range(n)):
        vmap = {}
        ok = True
        for h in range(n):
            v, w = rg1.graph.attach[h], rg2.graph.attach[perm[h]]
            if vmap.setdefault(v, w) != w:
                ok = False
                break
            if perm[rg1.graph.sigma[h]] != rg2.graph.sigma[perm[h]]:
                ok = False
                break
            if perm[rg1.rotation[h]] != rg2.rotation[perm[h]]:
                ok = False
                break
        if not ok or len(set(vmap.values())) != len(vmap):
            continue
        if any(rg2.tails.get(perm[t]) != lab
               for t, lab in rg1.tails.items()):
            continue
        out.append(perm)
    return out
