"""Graphs built from half-edges.

A graph here is a finite set of half-edges H = {0..h-1}, a finite set of
vertices V = {0..v-1}, an attachment map H -> V and an involution sigma
on H.  Two-element sigma-orbits are internal edges, fixed points are
tails.  So #H = 2#E + #T always.  Isolated vertices (empty fiber) are
legal, and so is the empty graph.

A ribbon graph adds a rotation: a permutation of H whose orbits are
exactly the attachment fibers.  The rotation turns each fiber into a
cyclic order, read counterclockwise.  Boundary cycles are the orbits of
face = rotation o sigma.

Vertex insertion (compose) is the operation that makes these graphs the
morphisms of an operad-like structure: an inner graph whose connected
components are matched with the vertices of an outer graph is plugged in,
and the outer gluing involution chains through the inner tails.

>>> theta = Graph((0, 0, 0, 1, 1, 1), (3, 4, 5, 0, 1, 2))
>>> theta.edges()
((0, 3), (1, 4), (2, 5))
>>> theta.tails()
()
>>> theta.component_count()
1
"""

from __future__ import annotations

import itertools


class Graph:
    """Half-edge graph: attachment map plus involution.

    attach[h] is the vertex carrying half-edge h, sigma[h] is the other
    half of h's edge (sigma[h] == h for a tail).  n_vertices may exceed
    max(attach)+1 to allow isolated vertices.
    """

    __slots__ = ("attach", "sigma", "n_vertices", "_fibers", "_components")

    def __init__(self, attach, sigma, n_vertices=None, check=True):
        self.attach = tuple(attach)
        self.sigma = tuple(sigma)
        if n_vertices is None:
            n_vertices = max(self.attach) + 1 if self.attach else 0
        self.n_vertices = n_vertices
        self._fibers = None
        self._components = None
        if check:
            # check=False is for internal builders whose output is
            # structurally valid by construction
            problems = self.problems()
            if problems:
                raise ValueError("; ".join(problems))

    def problems(self):
        """List of structural defects, empty when the graph is valid."""
        out = []
        h = len(self.attach)
        if len(self.sigma) != h:
            out.append("sigma and attach have different lengths")
            return out
        if any(not (0 <= v < self.n_vertices) for v in self.attach):
            out.append("attachment targets a missing vertex")
        if sorted(set(self.sigma)) != list(range(h)):
            out.append("sigma is not a permutation")
            return out
        if any(self.sigma[self.sigma[x]] != x for x in range(h)):
            out.append("sigma is not an involution")
        return out

    @property
    def n_half_edges(self):
        return len(self.attach)

    def half_edges(self):
        return range(len(self.attach))

    def vertices(self):
        return range(self.n_vertices)

    def fiber(self, v):
        """Half-edges attached to vertex v, in index order."""
        return tuple(h for h in self.half_edges() if self.attach[h] == v)

    def fibers(self):
        if self._fibers is None:
            out = [[] for _ in range(self.n_vertices)]
            for h, v in enumerate(self.attach):
                out[v].append(h)
            self._fibers = [tuple(f) for f in out]
        return self._fibers

    def valence(self, v):
        return sum(1 for a in self.attach if a == v)

    def edges(self):
        """Internal edges as sorted pairs (h, sigma[h]) with h < sigma[h]."""
        return tuple(
            (h, self.sigma[h]) for h in self.half_edges() if h < self.sigma[h]
        )

    def tails(self):
        return tuple(h for h in self.half_edges() if self.sigma[h] == h)

    def n_edges(self):
        return sum(1 for h in self.half_edges() if h < self.sigma[h])

    # -- connectivity ----------------------------------------------------

    def vertex_components(self):
        """Union-find partition of vertices by internal edges.

        Returns a list c with c[v] = component index, components numbered
        0,1,.. in order of their smallest vertex.
        """
        if self._components is not None:
            return self._components
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for h1, h2 in self.edges():
            a, b = find(self.attach[h1]), find(self.attach[h2])
            if a != b:
                parent[max(a, b)] = min(a, b)
        index = {}
        out = []
        for v in range(self.n_vertices):
            r = find(v)
            if r not in index:
                index[r] = len(index)
            out.append(index[r])
        self._components = out
        return out

    def component_count(self):
        return len(set(self.vertex_components())) if self.n_vertices else 0

    def is_connected(self):
        return self.component_count() <= 1

    def tail_components(self):
        """Map tail -> component index."""
        comp = self.vertex_components()
        return {t: comp[self.attach[t]] for t in self.tails()}

    def is_forest(self):
        """No cycles: every component satisfies #V - #E = 1."""
        return self.n_vertices - self.n_edges() == self.component_count()

    # -- constructions ---------------------------------------------------

    def tensor(self, other):
        """Disjoint union; half-edge and vertex indices of other shift up."""
        hs, vs = len(self.attach), self.n_vertices
        attach = self.attach + tuple(v + vs for v in other.attach)
        sigma = self.sigma + tuple(x + hs for x in other.sigma)
        return Graph(attach, sigma, vs + other.n_vertices, check=False)

    @staticmethod
    def identity(attach, n_vertices=None):
        """Identity graph on an attachment map: sigma = id, no edges."""
        return Graph(attach, range(len(tuple(attach))), n_vertices)

    def compose(self, inner, tail_map, component_map):
        """Insert `inner` into self by identifying inner components with
        self's vertices and inner tails with self's half-edges.

        tail_map: dict tail-of-inner -> half-edge-of-self, a bijection.
        component_map: dict component-index-of-inner -> vertex-of-self,
        a bijection compatible with tail_map.

        The result keeps inner's vertices and half-edges.  Inner tails
        stop being tails when the outer involution pairs them: a pair of
        outer half-edges (x, sigma x) welds the corresponding inner tails
        into a new edge.  Outer tails stay tails.
        """
        tails = inner.tails()
        if sorted(tail_map) != sorted(tails):
            raise ValueError("tail_map keys must be exactly the inner tails")
        if sorted(tail_map.values()) != list(self.half_edges()):
            raise ValueError("tail_map must hit every outer half-edge once")
        comp = inner.vertex_components()
        n_comp = len(set(comp))
        if sorted(component_map) != list(range(n_comp)):
            raise ValueError("component_map keys must be the inner components")
        if sorted(component_map.values()) != list(self.vertices()):
            raise ValueError("component_map must hit every outer vertex once")
        for t in tails:
            if component_map[comp[inner.attach[t]]] != self.attach[tail_map[t]]:
                raise ValueError(
                    "tail %d lands on outer vertex %d but its component is "
                    "matched with outer vertex %d"
                    % (t, self.attach[tail_map[t]],
                       component_map[comp[inner.attach[t]]])
                )
        inv = {v: t for t, v in tail_map.items()}
        sigma = list(inner.sigma)
        for t in tails:
            x = tail_map[t]
            if self.sigma[x] != x:
                sigma[t] = inv[self.sigma[x]]
        return Graph(inner.attach, sigma, inner.n_vertices)


class RibbonGraph:
    """Graph plus rotation, with optional tail labels.

    rotation is a permutation of the half-edges whose orbits are the
    attachment fibers; rotation[h] is the next half-edge counterclockwise
    around the vertex of h.  tails maps sigma-fixed half-edges to labels
    (any sortable hashables); unlabeled tails are fine, missing keys stay
    anonymous only if the whole dict is empty, so we require every tail
    labeled or none.

    >>> # one vertex, two interleaved loops: rotation (a, b, a*, b*)
    >>> w = RibbonGraph(Graph((0, 0, 0, 0), (2, 3, 0, 1)), (1, 2, 3, 0))
    >>> w.boundary_cycles()
    ((0, 3, 2, 1),)
    >>> w.genus_boundary()
    ((1, 1),)
    """

    __slots__ = ("graph", "rotation", "tails", "_ccache")

    def __init__(self, graph, rotation, tails=None, check=True):
        self.graph = graph
        self.rotation = tuple(rotation)
        self.tails = dict(tails) if tails else {}
        self._ccache = None
        if check:
            problems = self.problems()
            if problems:
                raise ValueError("; ".join(problems))

    def problems(self):
        g = self.graph
        out = []
        if len(self.rotation) != g.n_half_edges:
            out.append("rotation and attach have different lengths")
            return out
        if sorted(set(self.rotation)) != list(range(g.n_half_edges)):
            out.append("rotation is not a permutation")
            return out
        seen = [False] * g.n_half_edges
        for v, fib in enumerate(g.fibers()):
            if not fib:
                continue
            h = fib[0]
            orbit = [h]
            x = self.rotation[h]
            while x != h:
                orbit.append(x)
                x = self.rotation[x]
            if sorted(orbit) != list(fib):
                out.append("rotation orbit at vertex %d is not its fiber" % v)
            for y in orbit:
                seen[y] = True
        if not all(seen):
            out.append("rotation misses some half-edges")
        tail_set = set(g.tails())
        if self.tails:
            if set(self.tails) != tail_set:
                out.append("tail labels must cover exactly the tails")
            if len(set(self.tails.values())) != len(self.tails):
                out.append("tail labels must be distinct")
        return out

    # convenience proxies
    @property
    def attach(self):
        return self.graph.attach

    @property
    def sigma(self):
        return self.graph.sigma

    @property
    def n_vertices(self):
        return self.graph.n_vertices

    @property
    def n_half_edges(self):
        return self.graph.n_half_edges

    def cyclic_order(self, v):
        """Fiber of v as a tuple in rotation order, cut at the smallest
        half-edge index."""
        fib = self.graph.fiber(v)
        if not fib:
            return ()
        h = min(fib)
        out = [h]
        x = self.rotation[h]
        while x != h:
            out.append(x)
            x = self.rotation[x]
        return tuple(out)

    def face_permutation(self):
        """face(h) = rotation[sigma[h]]; orbits are boundary cycles."""
        sig, rot = self.graph.sigma, self.rotation
        return tuple(rot[sig[h]] for h in range(len(rot)))

    def boundary_cycles(self):
        """Orbits of the face permutation, each cut at its smallest
        element, listed in order of smallest element."""
        face = self.face_permutation()
        seen = [False] * len(face)
        cycles = []
        for h in range(len(face)):
            if seen[h]:
                continue
            orbit = [h]
            seen[h] = True
            x = face[h]
            while x != h:
                orbit.append(x)
                seen[x] = True
                x = face[x]
            cycles.append(tuple(orbit))
        return tuple(cycles)

    def cycle_tail_words(self):
        """Per boundary cycle, the cyclic sequence of tail labels it
        visits (in face order).  Unlabeled graphs get half-edge indices."""
        words = []
        for cyc in self.boundary_cycles():
            word = tuple(
                self.tails.get(h, h) for h in cyc if self.graph.sigma[h] == h
            )
            words.append(word)
        return tuple(words)

    def genus_boundary(self):
        """Per connected component (in vertex-component order), the pair
        (genus, number of boundary cycles), from #V - #E = 2 - 2g - b."""
        comp = self.graph.vertex_components()
        n = self.graph.component_count()
        nv = [0] * n
        ne = [0] * n
        nb = [0] * n
        for v in range(self.graph.n_vertices):
            nv[comp[v]] += 1
        for h1, _h2 in self.graph.edges():
            ne[comp[self.graph.attach[h1]]] += 1
        for cyc in self.boundary_cycles():
            nb[comp[self.graph.attach[cyc[0]]]] += 1
        out = []
        for c in range(n):
            twog = 2 - nb[c] - nv[c] + ne[c]
            if twog < 0 or twog % 2:
                raise AssertionError("Euler count is not an even genus")
            out.append((twog // 2, nb[c]))
        return tuple(out)

    def degree(self):
        """#H - 3#V, the excess over trivalence; the cell dimension."""
        return self.graph.n_half_edges - 3 * self.graph.n_vertices

    def relabel(self, hmap, vmap=None):
        """Push the structure through bijections of half-edges/vertices.

        hmap is a sequence with hmap[h] = new index of h; vmap likewise
        for vertices (identity if omitted).  Tail labels follow their
        half-edges.
        """
        g = self.graph
        n = g.n_half_edges
        if vmap is None:
            vmap = list(range(g.n_vertices))
        attach = [0] * n
        sigma = [0] * n
        rot = [0] * n
        for h in range(n):
            attach[hmap[h]] = vmap[g.attach[h]]
            sigma[hmap[h]] = hmap[g.sigma[h]]
            rot[hmap[h]] = hmap[self.rotation[h]]
        tails = {hmap[t]: lab for t, lab in self.tails.items()}
        return RibbonGraph(Graph(attach, sigma, g.n_vertices, check=False),
                           rot, tails, check=False)

    def tensor(self, other):
        hs = self.n_half_edges
        g = self.graph.tensor(other.graph)
        rot = self.rotation + tuple(x + hs for x in other.rotation)
        tails = dict(self.tails)
        for t, lab in other.tails.items():
            tails[t + hs] = lab
        return RibbonGraph(g, rot, tails, check=False)

    def restrict_to_component(self, c):
        """The ribbon subgraph on vertex-component c, reindexed densely."""
        comp = self.graph.vertex_components()
        vkeep = [v for v in range(self.n_vertices) if comp[v] == c]
        vmap = {v: i for i, v in enumerate(vkeep)}
        hkeep = [h for h in range(self.n_half_edges)
                 if comp[self.attach[h]] == c]
        hmap = {h: i for i, h in enumerate(hkeep)}
        attach = [vmap[self.attach[h]] for h in hkeep]
        sigma = [hmap[self.sigma[h]] for h in hkeep]
        rot = [hmap[self.rotation[h]] for h in hkeep]
        tails = {hmap[t]: lab for t, lab in self.tails.items() if t in hmap}
        return RibbonGraph(Graph(attach, sigma, len(vkeep), check=False),
                           rot, tails, check=False)

    def glue_tails(self, h1, h2):
        """Weld two tails into an internal edge.  Their labels vanish
        (the spots stop being marked); everything else is untouched."""
        g = self.graph
        if h1 == h2 or g.sigma[h1] != h1 or g.sigma[h2] != h2:
            raise ValueError("glue_tails needs two distinct tails")
        sigma = list(g.sigma)
        sigma[h1], sigma[h2] = h2, h1
        tails = {t: lab for t, lab in self.tails.items()
                 if t not in (h1, h2)}
        return RibbonGraph(Graph(g.attach, sigma, g.n_vertices, check=False),
                           self.rotation, tails, check=False)

    # -- contraction and splitting ---------------------------------------

    def contract_edge(self, h):
        """Contract the non-loop edge through half-edge h.

        The two endpoint rotations are cut at the contracted halves and
        concatenated, which is exactly how two boundary-traced cyclic
        orders merge.  Surviving half-edges are reindexed densely in the
        old index order; the merged vertex takes the smaller old index.
        """
        g = self.graph
        h2 = g.sigma[h]
        if h2 == h:
            raise ValueError("cannot contract a tail")
        u, v = g.attach[h], g.attach[h2]
        if u == v:
            raise ValueError("cannot contract a loop")
        if u > v:
            u, v, h, h2 = v, u, h2, h
        hkeep = [x for x in range(g.n_half_edges) if x not in (h, h2)]
        hmap = {x: i for i, x in enumerate(hkeep)}
        vmap = {}
        for w in range(g.n_vertices):
            if w == v:
                vmap[w] = u
            elif w > v:
                vmap[w] = w - 1
            else:
                vmap[w] = w
        # merged cyclic order: successors of h around u, then of h2 around v
        def arc(start):
            out = []
            x = self.rotation[start]
            while x != start:
                out.append(x)
                x = self.rotation[x]
            return out

        merged = arc(h) + arc(h2)
        rot = [0] * len(hkeep)
        attach = [0] * len(hkeep)
        for x in hkeep:
            attach[hmap[x]] = vmap[g.attach[x]]
            if g.attach[x] in (u, v):
                continue
            rot[hmap[x]] = hmap[self.rotation[x]]
        if merged:
            for i, x in enumerate(merged):
                rot[hmap[x]] = hmap[merged[(i + 1) % len(merged)]]
        sigma = [hmap[g.sigma[x]] for x in hkeep]
        tails = {hmap[t]: lab for t, lab in self.tails.items()}
        return RibbonGraph(Graph(attach, sigma, g.n_vertices - 1, check=False),
                           rot, tails, check=False)

    def split_vertex(self, v, run):
        """Inverse of contraction: detach a cyclic run of half-edges from
        v onto a fresh vertex joined to v by a fresh edge.

        run must be a contiguous arc of v's rotation, 2 <= len(run) <=
        valence-2.  The fresh half-edges take the next two free indices:
        the one staying on v first, the one on the new vertex second.
        The new vertex takes index n_vertices (appended).

        Returns the new ribbon graph; the fresh edge is its last two
        half-edges, so contracting them recovers self up to nothing at
        all (the indexing round-trips exactly when run sits inside the
        cut-at-minimum linearization, as in splits()).
        """
        g = self.graph
        k = g.valence(v)
        m = len(run)
        if not (2 <= m <= k - 2):
            raise ValueError("run length must be between 2 and valence-2")
        cyc = self.cyclic_order(v)
        pos = {h: i for i, h in enumerate(cyc)}
        if any(h not in pos for h in run):
            raise ValueError("run must consist of half-edges of v")
        i0 = pos[run[0]]
        if any(pos[run[j]] != (i0 + j) % k for j in range(m)):
            raise ValueError("run must be contiguous in rotation order")
        e_out = g.n_half_edges      # stays on v
        e_in = g.n_half_edges + 1   # on the fresh vertex
        new_v = g.n_vertices
        attach = list(g.attach) + [v, new_v]
        for h in run:
            attach[h] = new_v
        sigma = list(g.sigma) + [e_in, e_out]
        rot = list(self.rotation) + [0, 0]
        # v keeps cyc with the run replaced by e_out
        outer = []
        j = (i0 + m) % k
        while j != i0:
            outer.append(cyc[j])
            j = (j + 1) % k
        outer.append(e_out)
        for i, x in enumerate(outer):
            rot[x] = outer[(i + 1) % len(outer)]
        inner = [e_in] + list(run)
        for i, x in enumerate(inner):
            rot[x] = inner[(i + 1) % len(inner)]
        return RibbonGraph(Graph(attach, sigma, g.n_vertices + 1, check=False),
                           rot, dict(self.tails), check=False)

    def splits(self, v=None):
        """All vertex splittings, one per unordered facet.

        For each vertex, linearize its rotation cut at the minimal
        half-edge index and take every contiguous run of length 2 to
        valence-2 that avoids position 0.  Taking a run or its complement
        lands on the same splitting, so skipping the minimum enumerates
        each exactly once.  Yields (vertex, run) pairs; feed them to
        split_vertex.
        """
        vs = range(self.n_vertices) if v is None else (v,)
        for w in vs:
            cyc = self.cyclic_order(w)
            k = len(cyc)
            for m in range(2, k - 1):
                for i in range(1, k - m + 1):
                    yield w, tuple(cyc[i:i + m])


def permutation_cycles(perm):
    """Cycles of a dense permutation, each cut at its smallest element."""
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        orbit = [i]
        seen[i] = True
        x = perm[i]
        while x != i:
            orbit.append(x)
            seen[x] = True
            x = perm[x]
        out.append(tuple(orbit))
    return tuple(out)


def cyclic_orders_of(items):
    """All cyclic orders on items, as tuples cut at items[0]."""
    items = list(items)
    if not items:
        return ((),)
    first, rest = items[0], items[1:]
    return tuple((first,) + p for p in itertools.permutations(rest))
