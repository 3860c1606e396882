"""The splitting differential on ribbon forests."""

import random
from fractions import Fraction

import pytest

from surfop.ainf import (
    AinfGenerator,
    ainf_compose,
    ainf_d,
    ainf_generator_degree,
    ainf_relabel,
    generator,
    vector_degree,
)
from surfop.graphs import Graph, RibbonGraph


def d2(vec):
    return ainf_d(ainf_d(vec))


def test_corolla_degrees():
    for n in range(3, 8):
        labels = tuple("abcdefgh"[:n])
        g = generator(labels)
        assert g.degree == n - 3
        assert ainf_generator_degree(labels) == -g.degree
    with pytest.raises(ValueError):
        ainf_generator_degree(("a", "b"))


def test_generator_is_cyclic():
    assert generator(("a", "b", "c", "d")) == generator(("c", "d", "a", "b"))
    assert generator(("a", "b", "c", "d")) != generator(("a", "c", "b", "d"))


def test_generator_validation():
    # a loop is not a forest
    loop = RibbonGraph(Graph((0, 0, 0), (1, 0, 2)), (1, 2, 0), {2: "a"})
    with pytest.raises(ValueError):
        AinfGenerator.from_graph(loop)
    # a bivalent vertex is not allowed
    path = RibbonGraph(Graph((0, 0), (0, 1)), (1, 0), {0: "a", 1: "b"})
    with pytest.raises(ValueError):
        AinfGenerator.from_graph(path)
    # unlabeled tails are not allowed
    with pytest.raises(ValueError):
        AinfGenerator.from_graph(
            RibbonGraph(Graph((0, 0, 0), (0, 1, 2)), (1, 2, 0)))


def test_d_squared_zero_on_corollas():
    for n in range(4, 9):
        g = generator(tuple("abcdefgh"[:n]))
        assert not d2(g)


def test_d_term_counts():
    # one facet per proper contiguous run avoiding the cut position
    assert len(ainf_d(generator(("a", "b", "c")))) == 0
    assert len(ainf_d(generator(("a", "b", "c", "d")))) == 2
    assert len(ainf_d(generator(("a", "b", "c", "d", "e")))) == 5
    assert len(ainf_d(generator(("a", "b", "c", "d", "e", "f")))) == 9


def test_d_squared_zero_on_forests():
    x = generator(("a", "b", "c", "d", "p"))
    y = generator(("p2", "e", "f", "g"))
    xy = ainf_compose(x, "p", y, "p2")
    assert vector_degree(xy) == x.degree + y.degree
    assert not d2(xy)
    z = generator(("q2", "h", "i", "j", "k"))
    big = ainf_compose(xy, "e", z, "q2")
    assert not d2(big)


def test_d_is_a_derivation():
    cases = [
        (("a", "b", "c", "d", "p"), ("p2", "e", "f", "g")),
        (("a", "p", "b", "c"), ("e", "f", "p2", "g", "h")),
        (("p", "a", "b"), ("e", "p2", "f", "g", "h")),
        (("a", "b", "c", "d", "p"), ("p2", "e", "f", "g", "h")),
    ]
    for ox, oy in cases:
        x = generator(ox)
        y = generator(oy)
        lhs = ainf_d(ainf_compose(x, "p", y, "p2"))
        sx = -1 if x.degree % 2 else 1
        rhs = ainf_compose(ainf_d(x), "p", y, "p2")
        for g, c in ainf_compose(x, "p", ainf_d(y), "p2").items():
            c2 = rhs.get(g, Fraction(0)) + sx * c
            if c2:
                rhs[g] = c2
            else:
                rhs.pop(g, None)
        assert lhs == rhs


def test_relabel_commutes_with_d():
    x = generator(("a", "b", "c", "d", "e", "f"))
    m = dict(zip("abcdef", "uvwxyz"))
    assert ainf_relabel(ainf_d(x), m) == ainf_d(ainf_relabel(x, m))


def test_parallel_associativity_koszul_sign():
    x = generator(("a", "p", "b", "q"))
    y = generator(("p2", "c", "d"))
    z = generator(("q2", "e", "f", "g"))
    one = ainf_compose(ainf_compose(x, "p", y, "p2"), "q", z, "q2")
    two = ainf_compose(ainf_compose(x, "q", z, "q2"), "p", y, "p2")
    sgn = -1 if (y.degree * z.degree) % 2 else 1
    assert one == {g: sgn * c for g, c in two.items()}


def test_sequential_associativity():
    x = generator(("a", "p", "b"))
    y = generator(("p2", "c", "q"))
    z = generator(("q2", "e", "f"))
    one = ainf_compose(ainf_compose(x, "p", y, "p2"), "q", z, "q2")
    two = ainf_compose(x, "p", ainf_compose(y, "q", z, "q2"), "p2")
    assert one == two


def test_compose_rejects_label_collision():
    x = generator(("a", "b", "p"))
    y = generator(("p2", "a", "c"))
    with pytest.raises(ValueError):
        ainf_compose(x, "p", y, "p2")


def test_vector_degree_flags_mixed_terms():
    g3 = generator(("a", "b", "c"))
    g4 = generator(("d", "e", "f", "g"))
    with pytest.raises(ValueError):
        vector_degree({g3: Fraction(1), g4: Fraction(1)})
    assert vector_degree({}) is None


def test_random_graft_derivation():
    rng = random.Random(23)
    letters = [chr(ord("a") + i) for i in range(20)]
    for _ in range(25):
        nx = rng.randint(3, 6)
        ny = rng.randint(3, 6)
        lx = letters[:nx]
        ly = letters[nx:nx + ny]
        rng.shuffle(lx)
        rng.shuffle(ly)
        x = generator(tuple(lx))
        y = generator(tuple(ly))
        i, j = rng.choice(lx), rng.choice(ly)
        lhs = ainf_d(ainf_compose(x, i, y, j))
        sx = -1 if x.degree % 2 else 1
        rhs = ainf_compose(ainf_d(x), i, y, j)
        for g, c in ainf_compose(x, i, ainf_d(y), j).items():
            c2 = rhs.get(g, Fraction(0)) + sx * c
            if c2:
                rhs[g] = c2
            else:
                rhs.pop(g, None)
        assert lhs == rhs
        assert not d2(ainf_compose(x, i, y, j))
