"""Cyclic and modular set operads, the free construction, the envelope."""

import itertools
import random

import pytest

from surfop.assoc import Assoc, Commutative, canonical_cycle, corolla
from surfop.envelope import (
    EnvelopeClass,
    ModAssoc,
    SurfaceType,
    enumerate_surface_types,
    envelope_normalize,
    standard_one_vertex,
    surface_type,
)
from surfop.enumerate import ribbon_classes
from surfop.operads import (
    DecoratedGraph,
    check_cyclic_axioms,
    check_modular_axioms,
    decorated_corolla,
    decorated_to_ribbon,
    free_modular,
    ribbon_to_decorated,
    universal_map,
)


def test_assoc_elements_and_compose():
    a = Assoc()
    els = a.elements(("a", "b", "c", "d"))
    assert len(els) == 6  # (n-1)! cyclic orders
    assert all(x[0] == "a" for x in els)
    assert a.compose(("a", "b", "p"), "p", ("q", "c", "d"), "q") == \
        ("a", "b", "c", "d")
    assert canonical_cycle(("c", "a", "b")) == ("a", "b", "c")


def test_cyclic_axioms_hold_small():
    assert check_cyclic_axioms(Assoc(), size_bound=5).ok
    assert check_cyclic_axioms(Commutative(), size_bound=5).ok


class BrokenCompose(Assoc):
    name = "BrokenCompose"

    def compose(self, x, i, y, j):
        out = super().compose(x, i, y, j)
        if len(out) == 5:
            return canonical_cycle(out[:1] + out[2:] + out[1:2])
        return out


def test_cyclic_axioms_catch_breakage():
    rep = check_cyclic_axioms(BrokenCompose(), size_bound=5)
    assert not rep.ok
    assert rep.counterexample is not None


def test_modular_axioms_hold_small():
    q = ModAssoc(max_genus=1, max_cycles=3, max_edges=3)
    rep = check_modular_axioms(q, size_bound=3,
                               weight=SurfaceType.normal_edges,
                               max_weight=3)
    assert rep.ok
    assert rep.checks > 0


class BrokenGlue(ModAssoc):
    name = "BrokenGlue"

    def self_glue(self, x, i, j):
        st = super().self_glue(x, i, j)
        if i < j:
            return SurfaceType([(g + 1, cyc) for g, cyc in st.components])
        return st


def test_modular_axioms_catch_breakage():
    rep = check_modular_axioms(
        BrokenGlue(max_genus=1, max_cycles=3, max_edges=3), size_bound=3,
        weight=SurfaceType.normal_edges, max_weight=3)
    assert not rep.ok


def test_surface_type_normalization():
    st = SurfaceType([(0, (("b", "c", "a"),)), (1, ((), ("x",)))])
    # words are canonically rotated, cycles and components sorted
    assert st == SurfaceType([(1, (("x",), ())), (0, (("a", "b", "c"),))])
    assert st.labels() == frozenset("abcx")
    assert not st.is_connected()
    assert st.normal_edges() == (0 + 1 - 1) + (2 + 2 - 1)
    with pytest.raises(ValueError):
        SurfaceType([(-1, ((),))])
    with pytest.raises(ValueError):
        SurfaceType([(2, ())])


def test_stability():
    assert not SurfaceType([(0, (("a", "b"),))]).is_stable()
    assert SurfaceType([(0, (("a", "b", "c"),))]).is_stable()
    assert not SurfaceType([(0, ((), ()))]).is_stable()
    assert SurfaceType([(0, (("a",), ()))]).is_stable()
    assert SurfaceType([(1, ((),))]).is_stable()


def test_enumerate_surface_types_counts():
    assert len(enumerate_surface_types((), 1, 2)) == 2
    assert len(enumerate_surface_types(("a",), 1, 2)) == 3
    assert len(enumerate_surface_types(("a", "b", "c"), 0, 1)) == 2
    for st in enumerate_surface_types(("a", "b"), 2, 3):
        assert st.is_stable() and st.is_connected()
        assert st.labels() == frozenset("ab")


def test_standard_one_vertex_round_trip():
    for genus, words in [(0, (("a", "b", "c"),)),
                         (0, (("a",), ("b",))),
                         (1, (("a", "b"),)),
                         (2, ((),)),
                         (1, (("a",), (), ("b", "c")))]:
        rg = standard_one_vertex(genus, words)
        assert rg.n_vertices == 1
        assert surface_type(rg) == SurfaceType([(genus, words)])
        assert rg.graph.n_edges() == 2 * genus + len(words) - 1


def test_modassoc_compose_matches_word_splice():
    # genus-zero one-cycle gluing is the cyclic word splice; the operad
    # computes it on welded representatives instead
    q = ModAssoc()
    a = Assoc()
    rng = random.Random(5)
    letters = [chr(ord("a") + i) for i in range(10)]
    for _ in range(20):
        nx, ny = rng.randint(3, 5), rng.randint(3, 5)
        lx = letters[:nx]
        ly = letters[nx:nx + ny]
        rng.shuffle(lx)
        rng.shuffle(ly)
        x, y = tuple(lx), tuple(ly)
        i, j = rng.choice(lx), rng.choice(ly)
        got = q.compose(SurfaceType([(0, (x,))]), i,
                        SurfaceType([(0, (y,))]), j)
        want = SurfaceType([(0, (a.compose(x, i, y, j),))])
        assert got == want


def test_self_glue_handles_and_splits():
    q = ModAssoc()
    same = q.self_glue(SurfaceType([(0, (("a", "b", "p", "q"),))]), "p", "q")
    assert same == SurfaceType([(0, ((), ("a", "b")))])
    diff = q.self_glue(SurfaceType([(0, (("a", "p"), ("b", "q")))]), "p", "q")
    assert diff == SurfaceType([(1, (("a", "b"),))])
    # a self-gluing climbs the normal edge count by exactly one
    assert same.normal_edges() == 1
    assert diff.normal_edges() == 2


def test_compose_preserves_normal_edge_sum():
    # the welding edge of a two-component gluing is contractible, so
    # composition leaves the loop count alone
    q = ModAssoc()
    rng = random.Random(9)
    pool = enumerate_surface_types(("a", "b", "p"), 1, 2)
    other = enumerate_surface_types(("q", "c"), 1, 2)
    for _ in range(15):
        x = rng.choice(pool)
        y = rng.choice(other)
        out = q.compose(x, "p", y, "q")
        assert out.normal_edges() == x.normal_edges() + y.normal_edges()
        assert out.labels() == frozenset("abc")


def test_free_modular_counts():
    class Binary:
        """One generator on every 3-element label set."""

        name = "Binary"

        def elements(self, labels):
            return [frozenset(labels)] if len(labels) == 3 else []

        def labels_of(self, x):
            return frozenset(x)

        def relabel(self, x, mapping):
            return frozenset(mapping[a] for a in x)

    assert len(free_modular(Binary(), ("a", "b", "c", "d"), 1,
                            max_loop_rank=0)) == 3
    assert len(free_modular(Assoc(), ("a", "b", "c", "d"), 0)) == 6


def test_free_modular_matches_ribbon_classes():
    classes = free_modular(Assoc(), (), 3)
    count = 0
    for g in range(0, 3):
        for b in range(1, 8):
            if 2 * g + b - 1 > 3:
                continue
            for r in ribbon_classes(g, b, max_edges=3):
                if len(r.graph.edges()) <= 3:
                    count += 1
    assert len(classes) == count


def test_envelope_normalize_matches_surface_type():
    pool = free_modular(Assoc(), ("a", "b", "c"), 2)
    assert pool
    for x in pool:
        rg = decorated_to_ribbon(x)
        cls = envelope_normalize(rg)
        assert cls.surface == surface_type(rg)
        assert surface_type(cls.representative) == cls.surface


def test_contraction_is_confluent_small():
    def terminal_types(rg):
        live = [(h1, h2) for h1, h2 in rg.graph.edges()
                if rg.graph.attach[h1] != rg.graph.attach[h2]]
        if not live:
            return {surface_type(rg)}
        out = set()
        for h1, _ in live:
            out |= terminal_types(rg.contract_edge(h1))
        return out

    pool = free_modular(Assoc(), ("a", "b"), 2)
    assert pool
    for x in pool:
        rg = decorated_to_ribbon(x)
        outcomes = terminal_types(rg)
        assert len(outcomes) == 1
        assert outcomes == {envelope_normalize(rg).surface}


def test_universal_map_is_envelope_normalize():
    q = ModAssoc()
    ident = universal_map(lambda x: SurfaceType([(0, (tuple(x),))]), q)
    rng = random.Random(7)
    pool = free_modular(Assoc(), ("a", "b", "c"), 2)
    for x in pool:
        st = ident(x)
        assert st == envelope_normalize(decorated_to_ribbon(x)).surface
        edges = list(x.graph.edges())
        for _ in range(3):
            rng.shuffle(edges)
            assert ident(x, edge_order=edges) == st


def test_universal_map_commuting_triangle():
    q = ModAssoc()
    ident = universal_map(lambda x: SurfaceType([(0, (tuple(x),))]), q)
    a = Assoc()
    for x in a.elements(("a", "b", "c", "d")):
        disc = ident(decorated_corolla(a, x))
        assert disc == SurfaceType([(0, (tuple(x),))])


def test_decorated_ribbon_round_trip():
    pool = free_modular(Assoc(), ("a", "b", "c"), 2)
    for x in pool[:10]:
        rg = decorated_to_ribbon(x)
        back = ribbon_to_decorated(rg)
        assert not back.problems(Assoc())
        assert decorated_to_ribbon(back).rotation == rg.rotation
        assert decorated_to_ribbon(back).tails == rg.tails


def test_decorated_graph_validation():
    a = Assoc()
    x = decorated_corolla(a, ("a", "b", "c"))
    assert not x.problems(a)
    bad = DecoratedGraph(x.graph, {0: "a", 1: "b", 2: "c"}, ())
    assert any("decoration" in p for p in bad.problems())
    bad = DecoratedGraph(x.graph, {0: "a"}, x.decorations)
    assert any("tail" in p for p in bad.problems())


def test_envelope_class_identity():
    st = SurfaceType([(0, (("a", "b", "c"),))])
    assert EnvelopeClass(st) == EnvelopeClass(st)
    assert hash(EnvelopeClass(st)) == hash(EnvelopeClass(st))
    other = SurfaceType([(0, (("a", "c", "b"),))])
    assert EnvelopeClass(st) != EnvelopeClass(other)


def test_corolla_builder_matches_assoc():
    rg = corolla(("a", "b", "c", "d"))
    assert rg.n_vertices == 1
    assert surface_type(rg) == SurfaceType([(0, (("a", "b", "c", "d"),))])
    order = [rg.tails[h] for h in rg.cyclic_order(0)]
    assert canonical_cycle(order) == ("a", "b", "c", "d")
