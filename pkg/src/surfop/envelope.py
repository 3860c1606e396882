"""The modular envelope of the associative operad, concretely.

A decorated graph for Assoc is a ribbon graph with labeled tails.  Its
envelope class remembers exactly the topology of the thickened surface:
per connected component the genus, the number of boundary cycles, and
the cyclic order of tail labels along each cycle.  That data is the
SurfaceType.  Two decorated graphs present the same element of the
envelope iff their SurfaceTypes agree; contraction of internal non-loop
edges never changes the type, which is what makes the normalization
below well defined.

One warning, learned the hard way: iterated contraction alone does not
produce unique normal forms.  A one-vertex diagram of three pairwise
nested chords and one of three short chords are both terminal for the
rewrite and have the same SurfaceType, yet they are not isomorphic.
The class is therefore keyed by the type, and the canonical
representative is rebuilt from the type by standard_one_vertex rather
than taken from whatever the rewrite happened to stop at.
"""

from __future__ import annotations

from functools import lru_cache

from .assoc import canonical_cycle, label_key
from .graphs import Graph, RibbonGraph


def _word_key(word):
    return (len(word), tuple(label_key(x) for x in word))


class SurfaceType:
    """Multiset of surface components, each (genus, boundary cycle words).

    components is a sorted tuple of (genus, cycles) with cycles a sorted
    tuple of cyclic words (tuples of tail labels, canonically rotated;
    empty tuple for a bare boundary cycle).  Boundary cycles themselves
    are unlabeled; tails pin them down where it matters.
    """

    __slots__ = ("components", "_hash")

    def __init__(self, components):
        normalized = []
        for genus, cycles in components:
            if genus < 0:
                raise ValueError("negative genus")
            cyc = tuple(sorted((canonical_cycle(w) for w in cycles),
                               key=_word_key))
            if not cyc:
                raise ValueError("a surface component needs a boundary")
            normalized.append((genus, cyc))
        normalized.sort(key=lambda c: (c[0], tuple(map(_word_key, c[1])),
                                       len(c[1])))
        self.components = tuple(normalized)
        # types are memo keys everywhere; hashing the nested tuples over
        # and over dominates lookups without this
        self._hash = hash(self.components)

    def __eq__(self, other):
        return (isinstance(other, SurfaceType)
                and self.components == other.components)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "SurfaceType(%r)" % (self.components,)

    def labels(self):
        out = []
        for _, cycles in self.components:
            for w in cycles:
                out.extend(w)
        return frozenset(out)

    def is_connected(self):
        return len(self.components) == 1

    def is_stable(self):
        """Every component admits a decorated-graph presentation: a disc
        needs three marked points, an annulus one, and so on."""
        for genus, cycles in self.components:
            t = sum(len(w) for w in cycles)
            if 4 * genus + 2 * len(cycles) + t - 4 <= 0:
                return False
        return True

    def normal_edges(self):
        """Edge count of the standard one-vertex-per-component
        representative: 2g + b - 1 per component.  Each gluing adds one
        edge, so this grades the modular operad by construction depth."""
        return sum(2 * g + len(cycles) - 1 for g, cycles in self.components)


def surface_type(rg):
    """SurfaceType of a ribbon graph with labeled tails."""
    comp = rg.graph.vertex_components()
    n = rg.graph.component_count()
    genera = [gb[0] for gb in rg.genus_boundary()]
    cycles = [[] for _ in range(n)]
    for cyc in rg.boundary_cycles():
        c = comp[rg.graph.attach[cyc[0]]]
        word = tuple(rg.tails[h] for h in cyc if rg.graph.sigma[h] == h)
        cycles[c].append(word)
    if rg.graph.tails() and not rg.tails:
        raise ValueError("surface_type needs labeled tails")
    return SurfaceType([(genera[c], cycles[c]) for c in range(n)])


def standard_one_vertex(genus, words):
    """The standard one-vertex ribbon graph of a connected surface type.

    Rotation word: genus interleaved handle pairs a b a* b*, then one
    short loop per extra boundary cycle with that cycle's tails tucked
    inside the loop, then the first cycle's tails.  The construction is
    verified by recomputation before returning.
    """
    words = [tuple(w) for w in words]
    b = len(words)
    if b < 1:
        raise ValueError("need at least one boundary cycle")
    seq = []
    sigma_pairs = []
    for k in range(genus):
        i = len(seq)
        seq.extend([("a", k), ("b", k), ("A", k), ("B", k)])
        sigma_pairs.append((i, i + 2))
        sigma_pairs.append((i + 1, i + 3))
    for j in range(1, b):
        i = len(seq)
        seq.append(("l", j))
        for lab in words[j]:
            seq.append(("t", lab))
        seq.append(("L", j))
        sigma_pairs.append((i, i + 1 + len(words[j])))
    for lab in words[0]:
        seq.append(("t", lab))
    h = len(seq)
    sigma = list(range(h))
    for i, j in sigma_pairs:
        sigma[i], sigma[j] = j, i
    rotation = [(i + 1) % h for i in range(h)]
    tails = {i: tok[1] for i, tok in enumerate(seq) if tok[0] == "t"}
    rg = RibbonGraph(Graph((0,) * h, sigma, 1), rotation, tails)
    got = surface_type(rg)
    want = SurfaceType([(genus, words)])
    assert got == want, "construction produced %r, wanted %r" % (got, want)
    return rg


@lru_cache(maxsize=None)
def standard_representative(stype):
    """Disjoint union of standard one-vertex forms, one per component.

    Cached: the axiom checkers rebuild the same representatives many
    times, and nothing downstream mutates them.
    """
    rep = None
    for genus, cycles in stype.components:
        part = standard_one_vertex(genus, cycles)
        rep = part if rep is None else rep.tensor(part)
    if rep is None:
        raise ValueError("empty surface type has no representative")
    return rep


class EnvelopeClass:
    """An element of the modular envelope of Assoc.

    Equality and hashing go through the SurfaceType; the representative
    is the standard one-vertex-per-component decorated graph rebuilt
    from the type.
    """

    __slots__ = ("surface", "_rep")

    def __init__(self, surface):
        self.surface = surface
        self._rep = None

    @property
    def representative(self):
        if self._rep is None:
            self._rep = standard_representative(self.surface)
        return self._rep

    def __eq__(self, other):
        return (isinstance(other, EnvelopeClass)
                and self.surface == other.surface)

    def __hash__(self):
        return hash(self.surface)

    def __repr__(self):
        return "EnvelopeClass(%r)" % (self.surface,)


def decorated_graph_check(rg):
    """Validity of a decorated graph for Assoc: every vertex at least
    trivalent, every tail labeled."""
    problems = []
    for v in range(rg.graph.n_vertices):
        if rg.graph.valence(v) < 3:
            problems.append("vertex %d has valence < 3" % v)
    if rg.graph.tails() and not rg.tails:
        problems.append("tails must be labeled")
    return problems


def envelope_normalize(rg):
    """Contract internal non-loop edges until only loops remain, then
    return the EnvelopeClass.

    Any contraction order works; each step merges two cyclic orders by
    the Assoc splice, and the SurfaceType never moves.  The returned
    class is keyed by the type (see the module docstring for why the
    terminal graph itself is not a usable key).
    """
    problems = decorated_graph_check(rg)
    if problems:
        raise ValueError("; ".join(problems))
    before = surface_type(rg)
    current = rg
    while True:
        for h1, h2 in current.graph.edges():
            if current.graph.attach[h1] != current.graph.attach[h2]:
                current = current.contract_edge(h1)
                break
        else:
            break
    after = surface_type(current)
    assert after == before, "contraction changed the surface type"
    return EnvelopeClass(after)


def envelope_invariants(cls):
    """The complete invariant of an envelope class."""
    return cls.surface


def enumerate_surface_types(labels, max_genus, max_cycles):
    """All stable connected SurfaceTypes with the given tail labels and
    caps on genus and boundary-cycle count."""
    labels = sorted(labels, key=label_key)
    out = set()
    for g in range(max_genus + 1):
        for b in range(1, max_cycles + 1):
            for assignment in _assignments(labels, b):
                for words in _cyclic_arrangements(assignment):
                    st = SurfaceType([(g, words)])
                    if st.is_stable():
                        out.add(st)
    return sorted(out, key=lambda s: s.components)


def _assignments(labels, b):
    """Ways to distribute labels over b unordered pots (pots may stay
    empty); yields lists of label lists."""
    if not labels:
        yield [[] for _ in range(b)]
        return
    first, rest = labels[0], labels[1:]
    for sub in _assignments(rest, b):
        seen = set()
        for i in range(b):
            out = [list(p) for p in sub]
            out[i].append(first)
            # pots are unordered: dedup by the multiset after insertion
            key = tuple(sorted(tuple(map(label_key, p)) for p in out))
            if key in seen:
                continue
            seen.add(key)
            yield out


def _cyclic_arrangements(pots):
    """All choices of cyclic order inside each pot."""
    from itertools import permutations, product
    per_pot = []
    for pot in pots:
        if len(pot) <= 1:
            per_pot.append([tuple(pot)])
        else:
            first, rest = pot[0], pot[1:]
            per_pot.append([(first,) + p for p in permutations(rest)])
    for combo in product(*per_pot):
        yield combo


class ModAssoc:
    """Mod(Assoc) in set-operad form: stable connected surface types.

    Gluing is computed on representatives, never by a formula: build the
    standard decorated graphs, weld the named tails, and read the type
    back off.  elements() needs finite tables, so the constructor takes
    caps; compose and self_glue themselves are uncapped.
    """

    name = "Mod(Assoc)"

    def __init__(self, max_genus=1, max_cycles=3, max_edges=None):
        self.max_genus = max_genus
        self.max_cycles = max_cycles
        self.max_edges = max_edges
        # axiom sweeps revisit the same glued pairs thousands of times
        self._compose_memo = {}
        self._glue_memo = {}
        self._relabel_memo = {}

    def elements(self, labels):
        out = enumerate_surface_types(labels, self.max_genus,
                                      self.max_cycles)
        if self.max_edges is not None:
            out = [s for s in out if s.normal_edges() <= self.max_edges]
        return out

    def labels_of(self, x):
        return x.labels()

    def relabel(self, x, mapping):
        key = (x, frozenset(mapping.items()))
        hit = self._relabel_memo.get(key)
        if hit is None:
            hit = self._relabel_memo[key] = SurfaceType([
                (g, tuple(tuple(mapping[a] for a in w) for w in cycles))
                for g, cycles in x.components])
        return hit

    def _rep_with_tail(self, x):
        rep = standard_representative(x)
        by_label = {lab: t for t, lab in rep.tails.items()}
        return rep, by_label

    def compose(self, x, i, y, j):
        key = (x, i, y, j)
        hit = self._compose_memo.get(key)
        if hit is not None:
            return hit
        if set(x.labels()) & set(y.labels()):
            raise ValueError("label sets must be disjoint")
        # strip the label names first so renamings of the same gluing
        # share one core computation
        mx = {a: k for k, a in enumerate(sorted(x.labels(), key=label_key))}
        my = {b: k + len(mx)
              for k, b in enumerate(sorted(y.labels(), key=label_key))}
        ckey = (self.relabel(x, mx), mx[i], self.relabel(y, my), my[j])
        core = self._compose_memo.get(ckey)
        if core is None:
            rx, bx = self._rep_with_tail(ckey[0])
            ry, by = self._rep_with_tail(ckey[2])
            glued = rx.tensor(ry).glue_tails(bx[ckey[1]],
                                             by[ckey[3]] + rx.n_half_edges)
            core = surface_type(glued)
            if not core.is_connected():
                raise AssertionError(
                    "gluing two connected types disconnected")
            self._compose_memo[ckey] = core
        back = {v: a for a, v in mx.items()}
        back.update((v, b) for b, v in my.items())
        st = self.relabel(core, back)
        self._compose_memo[key] = st
        return st

    def self_glue(self, x, i1, i2):
        key = (x, i1, i2)
        hit = self._glue_memo.get(key)
        if hit is not None:
            return hit
        m = {a: k for k, a in enumerate(sorted(x.labels(), key=label_key))}
        ckey = (self.relabel(x, m), m[i1], m[i2])
        core = self._glue_memo.get(ckey)
        if core is None:
            rep, by = self._rep_with_tail(ckey[0])
            glued = rep.glue_tails(by[ckey[1]], by[ckey[2]])
            core = surface_type(glued)
            self._glue_memo[ckey] = core
        st = self.relabel(core, {v: a for a, v in m.items()})
        self._glue_memo[key] = st
        return st
