"""The A-infinity structure: ribbon forests with a splitting differential.

Generators on a label set I are ribbon forests whose tails carry the
labels, every vertex at least trivalent.  A single corolla with cyclic
order c is the basic generator; grafting corollas builds the rest.  The
degree of a generator is #H - 3#V, the excess over trivalence, which is
also the dimension of the cell it names; the differential splits one
vertex in all ways and has degree -1.

Orientation convention (the one that matches the geometry): a generator
is presented with its vertices in index order, each rotation linearized
at the minimal half-edge index.  Reordering vertices costs the Koszul
sign in which a vertex of valence k weighs k - 3, and recutting a
k-valent rotation by r steps costs (-1)^(r(k-1)).  The sign of a facet
produced by detaching the run at positions i..i+m-1 (in the cut
linearization, never containing position 0) is (-1)^(i + m(k-i-m)).
These three rules are forced, up to harmless per-arity rescalings, by
d о d = 0 together with the homology of the small moduli spaces; see
the ribbon complex tests.

Degree bookkeeping note: the corolla generator on I sits in cell degree
|I| - 3.  ainf_generator_degree returns 3 - |I|, the placement degree
of the dual convention in which corollas of high arity sit low; it is
the negative of the cell degree and is provided because both
conventions circulate.  Everything else in this module speaks cell
degrees.
"""

from __future__ import annotations

from fractions import Fraction

from .assoc import canonical_cycle, corolla
from .canonical import canonical_form, transport_sign
from .graphs import RibbonGraph


def ainf_generator_degree(labels):
    """Placement degree 3 - #I of the generator on I (see module note)."""
    n = len(labels)
    if n < 3:
        raise ValueError("generators need at least 3 labels")
    return 3 - n


def split_terms(rg):
    """Signed facets of a reference-presented generator.

    Yields (child, sign) pairs where child is the ribbon graph after one
    vertex splitting, presented in reference form (vertex index order,
    minimal cuts), and sign collects four factors:

      prefix   (-1)^(sum of weights of earlier vertices), the product
               rule of cellular boundaries;
      facet    (-1)^(i + m(k-i-m)) for the run at positions i..i+m-1;
      place    moving the fresh vertex from the end of the vertex order
               to the slot right after its parent;
      recut    rotating the fresh vertex's linearization from starting
               at the fresh half-edge to starting at its minimum.
    """
    weights = [rg.graph.valence(v) - 3 for v in range(rg.n_vertices)]
    suffix_parity = [0] * (rg.n_vertices + 1)
    for v in range(rg.n_vertices - 1, -1, -1):
        suffix_parity[v] = (suffix_parity[v + 1] + weights[v]) % 2
    prefix_parity = 0
    for v in range(rg.n_vertices):
        k = rg.graph.valence(v)
        cyc = rg.cyclic_order(v)
        for m in range(2, k - 1):
            w_in = m - 2
            for i in range(1, k - m + 1):
                run = cyc[i:i + m]
                child = rg.split_vertex(v, run)
                sign = 1
                if prefix_parity:
                    sign = -sign
                if (i + m * (k - i - m)) % 2:
                    sign = -sign
                if (w_in % 2) and suffix_parity[v + 1]:
                    sign = -sign
                r = 1 + run.index(min(run))
                if (r * m) % 2:
                    sign = -sign
                yield child, sign
        prefix_parity = (prefix_parity + weights[v]) % 2


class AinfGenerator:
    """A basis element: canonical ribbon forest with labeled tails.

    Forests with all tails labeled have no automorphisms, so the
    canonical representative carries a well-defined orientation and
    every presentation normalizes to it with an unambiguous sign.
    """

    __slots__ = ("rg", "code", "degree")

    def __init__(self, rg, code):
        self.rg = rg
        self.code = code
        self.degree = rg.degree()

    @staticmethod
    def from_graph(rg):
        """Normalize a presented forest; returns (generator, sign)."""
        if not rg.graph.is_forest():
            raise ValueError("A-infinity generators are forests")
        if any(rg.graph.valence(v) < 3 for v in range(rg.n_vertices)):
            raise ValueError("vertices must be at least trivalent")
        if rg.graph.tails() and not rg.tails:
            raise ValueError("tails must be labeled")
        cf = canonical_form(rg)
        sign = transport_sign(rg, cf.hmap, cf.graph)
        return AinfGenerator(cf.graph, cf.code), sign

    def labels(self):
        return frozenset(self.rg.tails.values())

    def __eq__(self, other):
        return isinstance(other, AinfGenerator) and self.code == other.code

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        words = []
        for v in range(self.rg.n_vertices):
            cyc = self.rg.cyclic_order(v)
            words.append("(" + ",".join(
                str(self.rg.tails.get(h, "e%d" % h)) for h in cyc) + ")")
        return "AinfGenerator[%s]" % " ".join(words)


def generator(cyclic_order):
    """The corolla generator on a cyclic order of labels.

    The order is a cycle, so any rotation of it names the same
    generator; we normalize to the minimal-label cut before building.
    """
    gen, sign = AinfGenerator.from_graph(corolla(canonical_cycle(cyclic_order)))
    # with the minimal label first, the traversal from half-edge 0 is
    # already the minimal code, so normalization cannot recut
    assert sign == 1
    return gen


def vector(*pairs):
    """Build a vector {generator: coefficient}, dropping zeros."""
    out = {}
    for gen, coeff in pairs:
        c = out.get(gen, Fraction(0)) + Fraction(coeff)
        if c:
            out[gen] = c
        elif gen in out:
            del out[gen]
    return out


def add_term(out, gen, coeff):
    c = out.get(gen, Fraction(0)) + coeff
    if c:
        out[gen] = c
    elif gen in out:
        del out[gen]


def ainf_d(x):
    """Differential: split every vertex in every way, with signs.

    Accepts a generator or a vector; returns a vector.
    """
    if isinstance(x, AinfGenerator):
        x = {x: Fraction(1)}
    out = {}
    for gen, coeff in x.items():
        for child, presign in split_terms(gen.rg):
            g2, s2 = AinfGenerator.from_graph(child)
            add_term(out, g2, coeff * presign * s2)
    return out


def ainf_compose(x, i, y, j):
    """Graft along tails labeled i (in x) and j (in y).

    On generators returns a vector with one term; extends bilinearly to
    vectors.  The vertex order of the graft is x's vertices then y's,
    with no sign, matching the product orientation of the two cells.
    """
    if isinstance(x, AinfGenerator):
        x = {x: Fraction(1)}
    if isinstance(y, AinfGenerator):
        y = {y: Fraction(1)}
    out = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            if set(gx.rg.tails.values()) & set(gy.rg.tails.values()):
                raise ValueError("label sets must be disjoint")
            both = gx.rg.tensor(gy.rg)
            by_label = {lab: t for t, lab in both.tails.items()}
            glued = both.glue_tails(by_label[i], by_label[j])
            gen, sign = AinfGenerator.from_graph(glued)
            add_term(out, gen, cx * cy * sign)
    return out


def ainf_relabel(x, mapping):
    """Push a generator or vector through a relabeling of tails."""
    if isinstance(x, AinfGenerator):
        x = {x: Fraction(1)}
    out = {}
    for gen, coeff in x.items():
        rg = gen.rg
        relabeled = RibbonGraph(
            rg.graph, rg.rotation,
            {t: mapping[lab] for t, lab in rg.tails.items()})
        g2, s2 = AinfGenerator.from_graph(relabeled)
        add_term(out, g2, coeff * s2)
    return out


def vector_degree(vec):
    degs = {gen.degree for gen in vec}
    if len(degs) > 1:
        raise ValueError("inhomogeneous vector")
    return degs.pop() if degs else None
