"""The chain complex of ribbon graph classes, graded by surface type."""

from fractions import Fraction

import pytest

from surfop.ribbon_complex import (
    ModuliType,
    bernoulli,
    boundary_matrices,
    class_census,
    enumerate_generators,
    harer_zagier,
    moduli_homology,
    oracle_census,
    oracle_enumerate,
    orbifold_euler,
)

from oracles import RIBBON_CENSUS


def test_moduli_type_edge_bounds():
    t = ModuliType(1, 2)
    assert t.min_edges() == 3
    assert t.max_edges() == 6
    assert t.top_degree() == 3
    assert t.degree_of_edges(6) == 0
    t = ModuliType(0, 3, tails=("a", "b"))
    assert t.max_edges() == 3 + 2
    assert not ModuliType(0, 2).is_stable()
    assert not ModuliType(0, 1, tails=("a", "b")).is_stable()
    assert ModuliType(0, 1, tails=("a", "b", "c")).is_stable()
    assert ModuliType(1, 1).is_stable()
    with pytest.raises(ValueError):
        ModuliType(-1, 1)
    with pytest.raises(ValueError):
        ModuliType(0, 0)
    with pytest.raises(ValueError):
        ModuliType(0, 3, tails=("a", "a"))


def test_class_census_against_frozen_table():
    by_type = {}
    for (g, b, e), count in RIBBON_CENSUS.items():
        by_type.setdefault((g, b), {})[e] = count
    for (g, b), expected in sorted(by_type.items()):
        got = class_census(ModuliType(g, b), max_edges=5)
        assert got == expected, ((g, b), got, expected)


def test_census_respects_edge_window():
    # no classes outside [min_edges, max_edges]
    for g, b in [(0, 3), (0, 4), (1, 1), (1, 2)]:
        t = ModuliType(g, b)
        cc = class_census(t)
        assert min(cc) >= t.min_edges()
        assert max(cc) <= t.max_edges()
        # every edge count in the window is realized
        assert sorted(cc) == list(range(min(cc), max(cc) + 1))


def test_one_one_complex():
    t = ModuliType(1, 1)
    gens = enumerate_generators(t)
    # the two-edge class dies by orientation, the trivalent one stays
    assert {k: len(v) for k, v in gens.items()} == {0: 1, 1: 0}
    assert class_census(t) == {2: 1, 3: 1}
    prof = moduli_homology(t)
    assert prof.betti == (1, 0)
    assert prof.dims == (1, 0)


def test_zero_three_complex():
    t = ModuliType(0, 3)
    gens = enumerate_generators(t)
    assert {k: len(v) for k, v in gens.items()} == {0: 2, 1: 1}
    mats = boundary_matrices(t)
    assert len(mats) == 1
    # the single degree-1 class maps to both trivalent classes
    trips = mats[0].triplets()
    assert len(trips) == 2
    assert {abs(v) for _, _, v in trips} == {1}
    prof = moduli_homology(t)
    assert prof.betti == (1, 0)
    assert prof.ranks == (0, 1)


def test_labeled_zero_four_betti():
    t = ModuliType(0, 4, labeled_cycles=True)
    prof = moduli_homology(t)
    assert prof.betti == (1, 2, 0, 0)
    assert prof.dims == (64, 144, 99, 20)
    assert prof.ranks == (0, 63, 79, 20)


def test_labeled_census_is_a_multiple():
    # labeling boundary cycles refines each class into at most n! copies
    for g, b in [(0, 3), (1, 2)]:
        plain = class_census(ModuliType(g, b))
        labeled = class_census(ModuliType(g, b, labeled_cycles=True))
        fact = 1
        for k in range(2, b + 1):
            fact *= k
        for e, count in plain.items():
            assert count <= labeled[e] <= count * fact


def test_boundary_squares_to_zero():
    for t in [ModuliType(0, 4), ModuliType(1, 2),
              ModuliType(0, 4, labeled_cycles=True),
              ModuliType(0, 3, tails=("a",)),
              ModuliType(1, 1, tails=("a", "b"))]:
        mats = boundary_matrices(t)
        for k in range(len(mats) - 1):
            assert mats[k].mul(mats[k + 1]).is_zero()


def test_generators_grade_by_edges():
    t = ModuliType(1, 2)
    gens = enumerate_generators(t)
    for deg, basis in gens.items():
        for gen in basis:
            assert gen.degree == deg
            assert t.degree_of_edges(gen.n_edges()) == deg
            assert gen.rg.genus_boundary() == ((1, 2),)
    # top degree is realized by one-vertex graphs only
    for gen in gens[t.top_degree()]:
        assert gen.rg.n_vertices == 1


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(8) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_harer_zagier_values():
    assert harer_zagier(0, 3) == 1
    assert harer_zagier(0, 4) == -1
    assert harer_zagier(0, 5) == 2
    assert harer_zagier(0, 6) == -6
    assert harer_zagier(1, 1) == Fraction(-1, 12)
    assert harer_zagier(1, 2) == Fraction(1, 12)
    assert harer_zagier(2, 1) == Fraction(1, 120)


def test_orbifold_euler_matches_closed_form():
    for g, n in [(0, 3), (0, 4), (1, 1), (1, 2)]:
        t = ModuliType(g, n, labeled_cycles=True)
        assert orbifold_euler(t) == harer_zagier(g, n)


def test_unlabeled_euler_divides_by_symmetry():
    assert orbifold_euler(ModuliType(0, 3)) == Fraction(1, 6)
    assert orbifold_euler(ModuliType(1, 2)) == Fraction(1, 24)


def test_oracle_census_small():
    census = oracle_census(3)
    assert census[(1, 1, 2)] == 1
    assert census[(1, 1, 3)] == 1
    assert census[(0, 3, 2)] == 1
    assert census[(0, 3, 3)] == 2
    assert oracle_enumerate(ModuliType(1, 1), 3) == 2
    assert oracle_enumerate(ModuliType(0, 3), 3) == 3
    for g, b in [(0, 4), (1, 2)]:
        cc = class_census(ModuliType(g, b), max_edges=3)
        assert census.get((g, b, 3), 0) == cc.get(3, 0)


def test_legs_enter_the_count():
    t = ModuliType(0, 1, tails=("a", "b", "c"))
    cc = class_census(t)
    assert sum(cc.values()) > 0
    assert max(cc) == t.max_edges() == 6 * 0 + 3 * 1 - 6 + 3
    for deg, basis in enumerate_generators(t).items():
        for gen in basis:
            assert sorted(gen.rg.tails.values()) == ["a", "b", "c"]
