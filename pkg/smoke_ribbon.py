import time
from fractions import Fraction

from surfop.ribbon_complex import (ModuliType, boundary_matrices,
                                   class_census, enumerate_generators,
                                   harer_zagier, moduli_homology,
                                   oracle_census, oracle_enumerate,
                                   orbifold_euler, bernoulli)

t0 = time.time()

# (1,1): one-vertex class killed, theta survives, betti (1, 0)
t11 = ModuliType(1, 1)
gens = enumerate_generators(t11)
assert sorted(gens) == [0, 1], gens
assert len(gens[0]) == 1 and len(gens[1]) == 0, {k: len(v) for k, v in gens.items()}
prof = moduli_homology(t11)
assert prof.betti == (1, 0), prof.betti
assert class_census(t11) == {2: 1, 3: 1}, class_census(t11)
print("(1,1) ok", prof.betti)

# (0,3): ring survives, d(ring) = theta + dumbbell side, betti (1, 0)
t03 = ModuliType(0, 3)
gens = enumerate_generators(t03)
assert len(gens[1]) == 1 and len(gens[0]) == 2, {k: len(v) for k, v in gens.items()}
mats = boundary_matrices(t03)
assert len(mats) == 1 and len(mats[0].triplets()) == 2, mats[0].triplets()
prof = moduli_homology(t03)
assert prof.betti == (1, 0), prof.betti
assert class_census(t03) == {2: 1, 3: 2}, class_census(t03)
print("(0,3) ok", prof.betti, mats[0].triplets())

# labeled (0,4): betti of a thrice-punctured sphere
t04 = ModuliType(0, 4, labeled_cycles=True)
prof = moduli_homology(t04)
assert prof.betti == (1, 2, 0, 0), prof.betti
print("(0,4) labeled ok", prof.betti, "dims", prof.dims, "%.1fs" % (time.time() - t0))

# orbifold Euler vs the closed form
assert bernoulli(2) == Fraction(1, 6) and bernoulli(4) == Fraction(-1, 30)
for (g, n), expect in [((0, 3), 1), ((0, 4), -1), ((0, 5), 2),
                       ((1, 1), Fraction(-1, 12)), ((1, 2), Fraction(1, 12))]:
    hz = harer_zagier(g, n)
    assert hz == expect, (g, n, hz, expect)
for g, n in [(0, 3), (0, 4), (1, 1)]:
    t = ModuliType(g, n, labeled_cycles=True)
    eu = orbifold_euler(t)
    assert eu == harer_zagier(g, n), (g, n, eu, harer_zagier(g, n))
    print("euler (%d,%d) ok" % (g, n), eu, "%.1fs" % (time.time() - t0))

# unlabeled Euler is the labeled one divided by n!
assert orbifold_euler(ModuliType(0, 3)) == Fraction(1, 6)

# brute-force census vs pipeline counts
census = oracle_census(3)
assert census[(1, 1, 2)] == 1 and census[(0, 3, 2)] == 1, census
assert census[(1, 1, 3)] == 1 and census[(0, 3, 3)] == 2, census
assert oracle_enumerate(t11, 3) == 2
assert oracle_enumerate(t03, 3) == 3
for g, n in [(0, 4), (1, 2)]:
    t = ModuliType(g, n)
    cc = class_census(t, max_edges=3)
    assert census.get((g, n, 3), 0) == cc.get(3, 0), (g, n, census, cc)
print("oracle census ok", dict(sorted(census.items())), "%.1fs" % (time.time() - t0))

print("all ribbon smoke ok %.1fs" % (time.time() - t0))
