import itertools
import time
from fractions import Fraction

from surfop.assoc import Assoc
from surfop.envelope import envelope_normalize
from surfop.frobenius import (EndElement, assoc_to_end, end_structure_map,
                              evaluate_surface, ground_field,
                              group_algebra_z2, matrix_algebra,
                              reference_algebras, validate_frobenius)
from surfop.graphs import Graph
from surfop.operads import decorated_to_ribbon, free_modular

t0 = time.time()

for a in reference_algebras():
    rep = validate_frobenius(a)
    print(a.name, rep)
    assert rep.ok

# negative control: corner functional on M2 is not symmetric
from surfop.frobenius import FrobeniusAlgebra
bad = FrobeniusAlgebra(matrix_algebra(2).mult, [1, 0, 0, 0], name="bad")
rep = validate_frobenius(bad)
print("negative:", rep.ok, "|", rep.counterexample)
assert not rep.ok and "symmetric" in rep.counterexample

# unit identification
m2 = matrix_algebra(2)
assert m2.unit() == (1, 0, 0, 1)
z2 = group_algebra_z2()
assert z2.unit() == (1, 0)

# direct coloring oracle for closed graphs
def direct_value(a, X, insertions=None):
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

pool = free_modular(Assoc(), (), 3)
print("closed pool:", len(pool))
for a in reference_algebras():
    by_type = {}
    for X in pool:
        val = evaluate_surface(a, X)
        assert val == direct_value(a, X), (a.name, X)
        st = envelope_normalize(decorated_to_ribbon(X)).surface
        by_type.setdefault(st, set()).add(val)
    assert all(len(vals) == 1 for vals in by_type.values()), (a.name, by_type)
    if a.dim == 1:
        assert all(vals == {1} for vals in by_type.values())
    print(a.name, "closed values by type:",
          {str(st): sorted(v.values() if hasattr(v, 'values') else v)
           for st, v in list(by_type.items())[:3]}, "...")
print("closed consistency ok %.1fs" % (time.time() - t0))

# single edge joining two pairing tensors returns the pairing
for a in reference_algebras():
    gr = Graph((0, 0, 1, 1), [0, 2, 1, 3], 2)
    gpair = a.pairing()
    mk = lambda labels: EndElement.from_function(
        labels, a.dim, lambda idx: gpair[idx[0]][idx[1]])
    out = end_structure_map(gr, [mk((0, 1)), mk((2, 3))],
                            a.copropagator())
    expect = EndElement.from_function((0, 3), a.dim,
                                      lambda idx: gpair[idx[0]][idx[1]])
    assert out == expect, a.name
print("pairing inversion ok")

# open legs: functional equality across presentations of one type
t1 = time.time()
pool3 = free_modular(Assoc(), ("a", "b", "c"), 2)
print("3-leg pool <=2 edges:", len(pool3), "%.1fs" % (time.time() - t1))
for a in reference_algebras():
    by_type = {}
    for X in pool3:
        fun = evaluate_surface(a, X, open_labels=("a", "b", "c"))
        st = envelope_normalize(decorated_to_ribbon(X)).surface
        by_type.setdefault(st, set()).add(fun)
    assert all(len(vals) == 1 for vals in by_type.values()), a.name
    print(a.name, "open functional consistent over", len(by_type), "types",
          "%.1fs" % (time.time() - t1))

# edge-order independence of end_structure_map on a random-ish graph
import random
rng = random.Random(3)
for a in reference_algebras():
    for X in rng.sample(pool, 5):
        g = X.graph
        to_end = assoc_to_end(a)
        inputs = [to_end(X.decorations[v]) for v in range(g.n_vertices)]
        base = end_structure_map(g, inputs, a.copropagator())

        class Shuffled:
            def __init__(self, g, order):
                self._g = g
                self._order = order
            def edges(self):
                return self._order
        for _ in range(3):
            order = list(g.edges())
            rng.shuffle(order)
            alt = end_structure_map(Shuffled(g, order),
                                    [to_end(X.decorations[v])
                                     for v in range(g.n_vertices)],
                                    a.copropagator())
            assert alt == base
print("edge order independence ok")
print("total %.1fs" % (time.time() - t0))
