"""Half-edge graphs: derived sets, insertion composition, ribbon data."""

import pytest

from surfop.graphs import Graph, RibbonGraph, permutation_cycles


def six_vertex_example():
    """Three components: a two-vertex piece with a loop, two parallel
    edges and three tails; an isolated vertex; a three-vertex path with
    a chord."""
    attach = (0, 0, 0, 0, 1, 1, 1, 1, 1, 3, 3, 4, 4, 5, 5)
    sigma = (1, 0, 4, 5, 2, 3, 6, 7, 8, 11, 14, 9, 13, 12, 10)
    return Graph(attach, sigma, 6)


def test_derived_set_counts():
    g = six_vertex_example()
    assert g.component_count() == 3
    assert len(g.tails()) == 3
    assert g.n_vertices == 6
    assert g.n_half_edges == 15
    assert g.valence(0) == 4
    assert g.n_edges() == 6


def test_structural_validation():
    with pytest.raises(ValueError):
        Graph((0, 0), (1, 0, 1))  # sigma length mismatch
    with pytest.raises(ValueError):
        Graph((0, 0, 0), (1, 2, 0))  # a 3-cycle is not an involution
    with pytest.raises(ValueError):
        Graph((0, 5), (1, 0), 2)  # attach out of range
    with pytest.raises(ValueError):
        # rotation orbit does not match the fiber
        RibbonGraph(Graph((0, 0, 1, 1), (1, 0, 3, 2)), (2, 3, 0, 1))
    with pytest.raises(ValueError):
        # labels must cover exactly the tails
        RibbonGraph(Graph((0, 0, 0), (1, 0, 2)), (1, 0, 2), {0: "a"})


def test_edges_and_tails_partition_half_edges():
    g = six_vertex_example()
    covered = set(g.tails())
    for h1, h2 in g.edges():
        covered.add(h1)
        covered.add(h2)
    assert covered == set(range(g.n_half_edges))
    assert 2 * g.n_edges() + len(g.tails()) == g.n_half_edges


def test_tail_components():
    g = six_vertex_example()
    by_comp = g.tail_components()
    # all three tails hang off the component of vertex 1
    assert set(by_comp.values()) == {g.vertex_components()[1]}


def worked_outer():
    """Two vertices u=0, w=1; a tail at u and two parallel u-w edges."""
    return Graph((0, 0, 1, 0, 1), (0, 2, 1, 4, 3), 2)


def worked_inner():
    """Components {p, q} and {r}: p carries tail 0 and an edge to q,
    q carries tails 3 and 4, r carries tails 5, 6 and a loop."""
    attach = (0, 0, 1, 1, 1, 2, 2, 2, 2)
    sigma = (0, 2, 1, 3, 4, 5, 6, 8, 7)
    return Graph(attach, sigma, 3)


def test_worked_composition():
    outer = worked_outer()
    inner = worked_inner()
    tail_map = {0: 0, 3: 1, 4: 3, 5: 2, 6: 4}
    component_map = {0: 0, 1: 1}
    out = outer.compose(inner, tail_map, component_map)
    # the composite keeps inner's nine half-edges and three vertices
    assert out.n_half_edges == 9
    assert out.n_vertices == 3
    assert out.is_connected()
    # outer's tail survives; its edges weld inner tails pairwise
    assert out.tails() == (0,)
    assert set(out.edges()) == {(1, 2), (3, 5), (4, 6), (7, 8)}


def test_composition_rejects_mismatches():
    outer = worked_outer()
    inner = worked_inner()
    good_tails = {0: 0, 3: 1, 4: 3, 5: 2, 6: 4}
    with pytest.raises(ValueError):
        outer.compose(inner, {0: 0, 3: 1, 4: 3, 5: 2}, {0: 0, 1: 1})
    with pytest.raises(ValueError):
        outer.compose(inner, good_tails, {0: 0})
    with pytest.raises(ValueError):
        # tail 5 lives on component {r} but lands on a half-edge of u
        outer.compose(inner, {0: 0, 3: 1, 4: 2, 5: 3, 6: 4}, {0: 0, 1: 1})


def test_composition_identity_laws():
    g = six_vertex_example()
    tails = g.tails()
    tc = g.tail_components()
    # outer identity: the identity graph on the tail attachment map
    ident_out = Graph.identity([tc[t] for t in tails], g.component_count())
    out = ident_out.compose(g, {t: i for i, t in enumerate(tails)},
                            {c: c for c in range(g.component_count())})
    assert out.attach == g.attach and out.sigma == g.sigma
    # inner identity: the identity graph on the vertex attachment map
    ident_in = Graph.identity(g.attach, g.n_vertices)
    out = g.compose(ident_in, {h: h for h in g.half_edges()},
                    {v: v for v in range(g.n_vertices)})
    assert out.attach == g.attach and out.sigma == g.sigma


def test_composition_associativity():
    g1 = Graph((0, 0), (1, 0), 1)               # one vertex, a loop
    g2 = Graph((0, 0, 1, 1), (0, 2, 1, 3), 2)   # an edge and two tails
    g3 = Graph((0, 0, 1, 1, 2, 2, 3, 3),
               (0, 2, 1, 3, 4, 6, 5, 7), 4)     # two such pieces
    m21, c21 = {0: 0, 3: 1}, {0: 0}
    m32, c32 = {0: 0, 3: 1, 4: 2, 7: 3}, {0: 0, 1: 1}

    left = g1.compose(g2, m21, c21).compose(g3, m32, c32)
    comp32 = g2.compose(g3, m32, c32)
    m31 = {t: m21[m32[t]] for t in comp32.tails()}
    right = g1.compose(comp32, m31, {0: 0})
    assert left.attach == right.attach and left.sigma == right.sigma


def test_tensor_is_disjoint_union():
    g = six_vertex_example()
    h = Graph((0, 0), (1, 0), 1)
    t = g.tensor(h)
    assert t.n_half_edges == 17
    assert t.component_count() == 4
    assert t.n_edges() == 7


def test_ribbon_boundary_euler():
    # one vertex, two interleaved loops: a torus with one boundary cycle
    w = RibbonGraph(Graph((0, 0, 0, 0), (2, 3, 0, 1)), (1, 2, 3, 0))
    assert w.genus_boundary() == ((1, 1),)
    assert len(w.boundary_cycles()) == 1
    # the same loops adjacent instead: a sphere with three boundaries
    v = RibbonGraph(Graph((0, 0, 0, 0), (1, 0, 3, 2)), (1, 2, 3, 0))
    assert v.genus_boundary() == ((0, 3),)
    assert len(v.boundary_cycles()) == 3


def test_face_permutation_orbits_cover():
    g = six_vertex_example()
    rot = [0] * g.n_half_edges
    for v in range(g.n_vertices):
        fib = g.fiber(v)
        for i, h in enumerate(fib):
            rot[h] = fib[(i + 1) % len(fib)]
    rg = RibbonGraph(g, rot, {6: "a", 7: "b", 8: "c"})
    seen = set()
    for cyc in rg.boundary_cycles():
        seen.update(cyc)
    assert seen == set(range(g.n_half_edges))
    # each boundary cycle stays within one component
    comp = g.vertex_components()
    for cyc in rg.boundary_cycles():
        assert len({comp[g.attach[h]] for h in cyc}) == 1


def test_glue_tails():
    g = six_vertex_example()
    rot = [0] * g.n_half_edges
    for v in range(g.n_vertices):
        fib = g.fiber(v)
        for i, h in enumerate(fib):
            rot[h] = fib[(i + 1) % len(fib)]
    rg = RibbonGraph(g, rot, {6: "a", 7: "b", 8: "c"})
    glued = rg.glue_tails(6, 7)
    assert glued.graph.n_edges() == g.n_edges() + 1
    assert glued.tails == {8: "c"}
    with pytest.raises(ValueError):
        glued.glue_tails(6, 7)  # no longer tails


def test_contract_split_inverse():
    w = RibbonGraph(Graph((0, 0, 0, 0, 0), (2, 3, 0, 1, 4)),
                    (1, 2, 3, 4, 0), {4: "a"})
    for run_len in (2, 3):
        cyc = w.cyclic_order(0)
        run = cyc[1:1 + run_len]
        child = w.split_vertex(0, run)
        assert child.n_vertices == 2
        assert child.graph.n_edges() == w.graph.n_edges() + 1
        # the fresh edge sits at the last two half-edge indices
        back = child.contract_edge(child.n_half_edges - 2)
        assert back.graph.attach == w.graph.attach
        assert back.graph.sigma == w.graph.sigma
        assert back.rotation == w.rotation
        assert back.tails == w.tails


def test_split_preserves_surface_type():
    w = RibbonGraph(Graph((0, 0, 0, 0, 0), (2, 3, 0, 1, 4)),
                    (1, 2, 3, 4, 0), {4: "a"})
    for v, run in w.splits():
        child = w.split_vertex(v, run)
        assert child.genus_boundary() == w.genus_boundary()
        assert child.degree() == w.degree() - 1
        assert sorted(child.cycle_tail_words()) == \
            sorted(w.cycle_tail_words())


def test_contract_rejects_loops_and_tails():
    theta = RibbonGraph(Graph((0, 0, 0, 1, 1, 1), (3, 4, 5, 0, 1, 2)),
                        (1, 2, 0, 4, 5, 3))
    loop = RibbonGraph(Graph((0, 0, 0), (1, 0, 2)), (1, 2, 0), {2: "a"})
    with pytest.raises(ValueError):
        loop.contract_edge(0)  # contracting a loop collapses a handle
    with pytest.raises(ValueError):
        loop.contract_edge(2)  # a tail has no edge to contract
    got = theta.contract_edge(0)
    assert got.n_vertices == 1
    assert got.genus_boundary() == theta.genus_boundary()


def test_degree_counts_excess_over_trivalent():
    w = RibbonGraph(Graph((0, 0, 0, 0), (2, 3, 0, 1)), (1, 2, 3, 0))
    assert w.degree() == 1
    theta = RibbonGraph(Graph((0, 0, 0, 1, 1, 1), (3, 4, 5, 0, 1, 2)),
                        (1, 2, 0, 4, 5, 3))
    assert theta.degree() == 0


def test_relabel_transports_structure():
    w = RibbonGraph(Graph((0, 0, 0, 0, 0), (2, 3, 0, 1, 4)),
                    (1, 2, 3, 4, 0), {4: "a"})
    hmap = (4, 2, 0, 3, 1)
    out = w.relabel(hmap)
    assert out.genus_boundary() == w.genus_boundary()
    assert out.tails == {1: "a"}
    assert out.sigma[hmap[0]] == hmap[w.sigma[0]]
    assert out.rotation[hmap[3]] == hmap[w.rotation[3]]


def test_permutation_cycles():
    assert permutation_cycles((1, 0, 2)) == ((0, 1), (2,))
    assert permutation_cycles(()) == ()
