"""Canonical forms, isomorphisms and orientation transport.

A connected ribbon graph is traversed from a root half-edge: rotation
and sigma generate everything, and the discovery order gives a dense
relabeling.  The code of a rooted traversal is the relabeled structure
plus tail and boundary-cycle decorations; the canonical form is the
minimum code over roots.  Two graphs are isomorphic iff their canonical
codes agree, and every isomorphism shows up as a root choice, so the
same machinery enumerates automorphisms.

Orientation bookkeeping rides along.  A generator of a graph complex is
a graph together with an ordering of its vertices and, at each vertex, a
linearization of the rotation; we always present these cut at the
minimal half-edge index.  Transporting along an isomorphism costs a
Koszul sign for reordering the vertices (vertex v weighs valence(v)-3)
and a rotation sign (-1)^(r(k-1)) for recutting a k-valent vertex by r
steps.
"""

from __future__ import annotations

from functools import lru_cache

from .assoc import label_key
from .graphs import Graph, RibbonGraph


def _cycle_label_tokens(rg, cycle_labels):
    """Per half-edge token of its boundary cycle's label, or None."""
    if cycle_labels is None:
        return None
    cycles = rg.boundary_cycles()
    if sorted(cycle_labels) != list(range(len(cycles))):
        raise ValueError("cycle_labels must key every boundary cycle index")
    tok = [None] * rg.n_half_edges
    for i, cyc in enumerate(cycles):
        for h in cyc:
            tok[h] = cycle_labels[i]
    return tok


_PLAIN_TOKEN = (("i",), ("-",))


@lru_cache(maxsize=None)
def _tail_token(label):
    return ("t",) + label_key(label)


@lru_cache(maxsize=None)
def _face_token(label):
    return ("f",) + label_key(label)


def _decoration_tokens(rg, face_tok):
    """Per half-edge, the (tail token, face token) suffix of its code
    entry; label_key makes tokens comparable when labels mix types."""
    if not rg.tails and face_tok is None:
        return [_PLAIN_TOKEN] * rg.n_half_edges
    sig = rg.graph.sigma
    dec = []
    for h in range(rg.n_half_edges):
        t_tok = _tail_token(rg.tails[h]) \
            if sig[h] == h and rg.tails else ("i",)
        f_tok = _face_token(face_tok[h]) \
            if face_tok is not None else ("-",)
        dec.append((t_tok, f_tok))
    return dec


def _code_from(rg, root, dec, expect=None):
    """Code of the traversal from root: rotation and sigma generate
    everything, discovery order gives a dense relabeling.

    With expect, bail out at the first entry differing from it (used to
    match traversals against a reference code cheaply)."""
    rot, sig = rg.rotation, rg.graph.sigma
    index = {root: 0}
    order = [root]
    code = []
    i = 0
    while i < len(order):
        h = order[i]
        rh, sh = rot[h], sig[h]
        if rh not in index:
            index[rh] = len(order)
            order.append(rh)
        if sh not in index:
            index[sh] = len(order)
            order.append(sh)
        entry = (index[rh], index[sh]) + dec[h]
        if expect is not None and entry != expect[i]:
            return None, None
        code.append(entry)
        i += 1
    if len(order) != rg.n_half_edges:
        return None, None  # disconnected; caller handles components
    return tuple(code), order


def _first_entry(rot, sig, dec, root):
    """Code entry a traversal from root would produce first."""
    rh, sh = rot[root], sig[root]
    ri = 0 if rh == root else 1
    if sh == root:
        si = 0
    elif sh == rh:
        si = 1
    else:
        si = ri + 1
    return (ri, si) + dec[root]


def _best_code(rg, dec):
    """Minimal traversal code over all roots, with its order.

    Only roots whose first entry is minimal can win, and entries are
    compared as they are produced so losing roots abort after a short
    prefix; the result is identical to minimizing _code_from over
    roots."""
    rot, sig = rg.rotation, rg.graph.sigma
    n = rg.n_half_edges
    first = [_first_entry(rot, sig, dec, root) for root in range(n)]
    lead = min(first)
    best = None
    best_order = None
    for root in range(n):
        if first[root] != lead:
            continue
        index = {root: 0}
        order = [root]
        code = []
        better = best is None
        worse = False
        i = 0
        while i < len(order):
            h = order[i]
            rh, sh = rot[h], sig[h]
            if rh not in index:
                index[rh] = len(order)
                order.append(rh)
            if sh not in index:
                index[sh] = len(order)
                order.append(sh)
            entry = (index[rh], index[sh]) + dec[h]
            if not better:
                ref = best[i]
                if entry > ref:
                    worse = True
                    break
                if entry < ref:
                    better = True
            code.append(entry)
            i += 1
        if worse:
            continue
        if len(order) != n:
            raise ValueError("best-code traversal needs a connected graph")
        if better:
            best = code
            best_order = order
    return tuple(best), best_order


class CanonicalForm:
    """Result of canonicalization.

    code: hashable total invariant (equal iff isomorphic, decorations
          included).
    hmap: tuple, hmap[h] = canonical index of half-edge h.
    vmap: tuple, vmap[v] = canonical index of vertex v.
    graph: the relabeled RibbonGraph (canonical representative).
    cycle_labels: relabeled cycle_labels dict, or None.
    """

    __slots__ = ("code", "hmap", "vmap", "graph", "cycle_labels")

    def __init__(self, code, hmap, vmap, graph, cycle_labels):
        self.code = code
        self.hmap = hmap
        self.vmap = vmap
        self.graph = graph
        self.cycle_labels = cycle_labels


def _coded(rg, dec):
    """(code, order) of a connected graph, cached on the instance so a
    dedup sweep and a later canonical_form on the keeper share one
    traversal."""
    cache = rg._ccache
    if cache is not None and cache[0] == dec:
        return cache[1], cache[2]
    code, order = _best_code(rg, dec)
    rg._ccache = (dec, code, order)
    return code, order


def canonical_form(rg, cycle_labels=None):
    """Canonicalize a ribbon graph, connected or not.

    cycle_labels optionally labels the boundary cycles (dict index ->
    label, indices as produced by boundary_cycles).  Labels and tail
    decorations are respected by isomorphism.  Isolated vertices are not
    supported here; complexes never contain them.
    """
    g = rg.graph
    if not all(g.fibers()):
        raise ValueError("canonical form does not support isolated vertices")
    face_tok = _cycle_label_tokens(rg, cycle_labels)
    comp = g.vertex_components()
    n_comp = (max(comp) + 1) if comp else 0
    if n_comp <= 1:
        if g.n_half_edges == 0:
            return CanonicalForm((), (), (), rg, cycle_labels)
        code, order = _coded(rg, _decoration_tokens(rg, face_tok))
        hmap = [0] * g.n_half_edges
        for new, old in enumerate(order):
            hmap[old] = new
        vseen = {}
        for old in order:
            v = g.attach[old]
            if v not in vseen:
                vseen[v] = len(vseen)
        vmap = tuple(vseen[v] for v in range(g.n_vertices))
        relabeled = rg.relabel(hmap, vmap)
        new_labels = None
        if cycle_labels is not None:
            new_labels = _push_cycle_labels(rg, relabeled, hmap, cycle_labels)
        return CanonicalForm(code, tuple(hmap), vmap, relabeled, new_labels)

    # disconnected: canonicalize components, sort by code, concatenate
    parts = []
    for c in range(n_comp):
        sub, hback, vback = _component_with_maps(rg, comp, c)
        sub_labels = None
        if cycle_labels is not None:
            sub_labels = _restrict_cycle_labels(rg, sub, hback, cycle_labels)
        parts.append((canonical_form(sub, sub_labels), hback, vback))
    parts.sort(key=lambda p: p[0].code)
    hmap = [0] * g.n_half_edges
    vmap = [0] * g.n_vertices
    hoff = voff = 0
    code = []
    for cf, hback, vback in parts:
        code.append(cf.code)
        for local_old, global_old in enumerate(hback):
            hmap[global_old] = cf.hmap[local_old] + hoff
        for local_old, global_old in enumerate(vback):
            vmap[global_old] = cf.vmap[local_old] + voff
        hoff += len(hback)
        voff += len(vback)
    relabeled = rg.relabel(hmap, vmap)
    new_labels = None
    if cycle_labels is not None:
        new_labels = _push_cycle_labels(rg, relabeled, hmap, cycle_labels)
    return CanonicalForm(tuple(code), tuple(hmap), tuple(vmap), relabeled,
                         new_labels)


def canonical_code(rg, cycle_labels=None):
    """The code alone, skipping the representative; same value as
    canonical_form(rg, cycle_labels).code.  Deduplication sweeps call
    this on every candidate and build the full form only for keepers."""
    g = rg.graph
    if g.n_half_edges and max(g.vertex_components()) == 0:
        face_tok = _cycle_label_tokens(rg, cycle_labels)
        code, _ = _coded(rg, _decoration_tokens(rg, face_tok))
        return code
    return canonical_form(rg, cycle_labels).code


def _component_with_maps(rg, comp, c):
    """Component c as a RibbonGraph plus maps local index -> global."""
    g = rg.graph
    vback = [v for v in range(g.n_vertices) if comp[v] == c]
    vmap = {v: i for i, v in enumerate(vback)}
    hback = [h for h in range(g.n_half_edges) if comp[g.attach[h]] == c]
    hmap = {h: i for i, h in enumerate(hback)}
    attach = [vmap[g.attach[h]] for h in hback]
    sigma = [hmap[g.sigma[h]] for h in hback]
    rot = [hmap[rg.rotation[h]] for h in hback]
    tails = {hmap[t]: lab for t, lab in rg.tails.items() if t in hmap}
    return RibbonGraph(Graph(attach, sigma, len(vback), check=False), rot,
                       tails, check=False), hback, vback


def _restrict_cycle_labels(rg, sub, hback, cycle_labels):
    """Labels of the cycles of a component, in the component's indexing."""
    global_cycles = rg.boundary_cycles()
    label_of_half = {}
    for i, cyc in enumerate(global_cycles):
        for h in cyc:
            label_of_half[h] = cycle_labels[i]
    out = {}
    for j, cyc in enumerate(sub.boundary_cycles()):
        out[j] = label_of_half[hback[cyc[0]]]
    return out


def _push_cycle_labels(rg, relabeled, hmap, cycle_labels):
    """Cycle labels for the relabeled graph."""
    label_of_half = {}
    for i, cyc in enumerate(rg.boundary_cycles()):
        for h in cyc:
            label_of_half[hmap[h]] = cycle_labels[i]
    out = {}
    for j, cyc in enumerate(relabeled.boundary_cycles()):
        out[j] = label_of_half[cyc[0]]
    return out


def isomorphisms(rg1, rg2, cycle_labels1=None, cycle_labels2=None):
    """All isomorphisms rg1 -> rg2 as half-edge maps (tuples).

    An isomorphism of connected graphs is pinned by the image of one
    half-edge, so they all arise by matching rg1's reference traversal
    against traversals of rg2 from every root.  Disconnected graphs
    match components in every code-compatible way.
    """
    g1, g2 = rg1.graph, rg2.graph
    if g1.n_half_edges != g2.n_half_edges or \
            g1.n_vertices != g2.n_vertices:
        return
    if g1.component_count() <= 1 and g2.component_count() <= 1:
        if g1.n_half_edges == 0:
            yield ()
            return
        dec1 = _decoration_tokens(rg1, _cycle_label_tokens(rg1,
                                                           cycle_labels1))
        if rg2 is rg1 and cycle_labels2 is cycle_labels1:
            dec2 = dec1
        else:
            dec2 = _decoration_tokens(rg2, _cycle_label_tokens(rg2,
                                                               cycle_labels2))
        code1, order1 = _code_from(rg1, 0, dec1)
        rot2, sig2 = rg2.rotation, rg2.graph.sigma
        lead = code1[0]
        for root in range(g2.n_half_edges):
            if _first_entry(rot2, sig2, dec2, root) != lead:
                continue
            code2, order2 = _code_from(rg2, root, dec2, expect=code1)
            if code2 is not None:
                f = [0] * g1.n_half_edges
                for a, b in zip(order1, order2):
                    f[a] = b
                yield tuple(f)
        return
    # disconnected case: recurse over component matchings
    comp1 = g1.vertex_components()
    comp2 = g2.vertex_components()
    n1, n2 = g1.component_count(), g2.component_count()
    if n1 != n2:
        return
    subs1 = []
    for c in range(n1):
        sub, hback, _ = _component_with_maps(rg1, comp1, c)
        lab = None if cycle_labels1 is None else \
            _restrict_cycle_labels(rg1, sub, hback, cycle_labels1)
        subs1.append((sub, hback, lab))
    subs2 = []
    for c in range(n2):
        sub, hback, _ = _component_with_maps(rg2, comp2, c)
        lab = None if cycle_labels2 is None else \
            _restrict_cycle_labels(rg2, sub, hback, cycle_labels2)
        subs2.append((sub, hback, lab))

    def extend(i, used, partial):
        if i == n1:
            yield tuple(partial)
            return
        sub1, hback1, lab1 = subs1[i]
        for j in range(n2):
            if j in used:
                continue
            sub2, hback2, lab2 = subs2[j]
            for f in isomorphisms(sub1, sub2, lab1, lab2):
                nxt = list(partial)
                for a_local, b_local in enumerate(f):
                    nxt[hback1[a_local]] = hback2[b_local]
                yield from extend(i + 1, used | {j}, nxt)

    yield from extend(0, frozenset(), [0] * g1.n_half_edges)


def automorphisms(rg, cycle_labels=None):
    return isomorphisms(rg, rg, cycle_labels, cycle_labels)


def automorphism_count(rg, cycle_labels=None):
    return sum(1 for _ in automorphisms(rg, cycle_labels=cycle_labels))


# -- orientation transport ------------------------------------------------

def rotation_sign(k, r):
    """Sign of recutting a k-valent vertex's linearization by r steps."""
    return -1 if (r * (k - 1)) % 2 else 1


def koszul_sign(perm, odd):
    """Sign of sorting perm when element i carries parity odd[i].

    Swapping two elements costs -1 exactly when both are odd, so the
    sign counts inversions between odd pairs.
    """
    s = 1
    n = len(perm)
    for i in range(n):
        if not odd[perm[i]]:
            continue
        for j in range(i + 1, n):
            if odd[perm[j]] and perm[i] > perm[j]:
                s = -s
    return s


def vertex_map_of(rg_from, hmap, rg_to):
    """The vertex bijection induced by a half-edge isomorphism."""
    vmap = [None] * rg_from.n_vertices
    for h in range(rg_from.n_half_edges):
        vmap[rg_from.graph.attach[h]] = rg_to.graph.attach[hmap[h]]
    return tuple(vmap)


def transport_sign(rg_from, hmap, rg_to):
    """Orientation sign of carrying the reference presentation of
    rg_from (vertices in index order, rotations cut at minimal half-edge)
    onto the reference presentation of rg_to along hmap.
    """
    vmap = vertex_map_of(rg_from, hmap, rg_to)
    odd = [rg_to.graph.valence(v) % 2 == 0 for v in range(rg_to.n_vertices)]
    # valence-3 is odd iff valence is even
    sign = koszul_sign(vmap, odd)
    for v in range(rg_from.n_vertices):
        fib = rg_from.graph.fiber(v)
        if not fib:
            continue
        image_of_min = hmap[min(fib)]
        cyc = rg_to.cyclic_order(vmap[v])
        r = cyc.index(image_of_min)
        sign *= rotation_sign(len(cyc), r)
    return sign


def is_orientation_killed(rg, cycle_labels=None):
    """True when some automorphism reverses the orientation, forcing the
    generator to vanish rationally."""
    ident = tuple(range(rg.n_half_edges))
    for f in automorphisms(rg, cycle_labels=cycle_labels):
        if f == ident:
            # identity transport is always +1
            continue
        if transport_sign(rg, f, rg) < 0:
            return True
    return False
