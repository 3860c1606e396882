"""The associative cyclic operad, in set-operad form.

An element on a finite label set I (|I| >= 3) is a cyclic order on I,
stored as a tuple rotated so the smallest label comes first.  Grafting
two cyclic orders along chosen labels concatenates them the way the
boundary of two glued polygons is traced: cut each cycle at the glued
label, drop it, and splice.

Labels can be ints or strings (mixed is fine); they sort by type first.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import RibbonGraph


@lru_cache(maxsize=None)
def label_key(label):
    """Total order on labels across types."""
    if isinstance(label, bool):
        return (2, str(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    return (3, repr(label))


def canonical_cycle(seq):
    """Rotate a cyclic tuple so its label_key-smallest entry is first."""
    seq = tuple(seq)
    if not seq:
        return seq
    i = min(range(len(seq)), key=lambda j: label_key(seq[j]))
    return seq[i:] + seq[:i]


class Assoc:
    """Cyclic orders with splice composition.  No self-gluing: this is a
    cyclic operad, the modular structure lives in its envelope."""

    name = "Assoc"

    def elements(self, labels):
        labels = sorted(labels, key=label_key)
        if len(labels) < 3:
            return []
        first, rest = labels[0], labels[1:]
        out = []
        from itertools import permutations
        for p in permutations(rest):
            out.append((first,) + p)
        return out

    def labels_of(self, x):
        return frozenset(x)

    def relabel(self, x, mapping):
        return canonical_cycle(mapping[a] for a in x)

    def compose(self, x, i, y, j):
        if i not in x or j not in y:
            raise ValueError("glued labels must belong to the elements")
        if set(x) & set(y):
            raise ValueError("label sets must be disjoint")
        xi = x.index(i)
        yj = y.index(j)
        spliced = x[xi + 1:] + x[:xi] + y[yj + 1:] + y[:yj]
        return canonical_cycle(spliced)


class Commutative:
    """One element per label set; everything composes to the union."""

    name = "Commutative"

    def elements(self, labels):
        return [frozenset(labels)] if len(labels) >= 3 else []

    def labels_of(self, x):
        return frozenset(x)

    def relabel(self, x, mapping):
        return frozenset(mapping[a] for a in x)

    def compose(self, x, i, y, j):
        if set(x) & set(y):
            raise ValueError("label sets must be disjoint")
        return frozenset((x - {i}) | (y - {j}))


def assoc_structure_map(forest):
    """Composite of a ribbon forest's vertex cyclic orders, one cyclic
    order per component, computed by tracing boundary cycles.

    The forest must be a RibbonGraph whose underlying graph is a forest
    with labeled tails.  Each tree component has exactly one boundary
    cycle; the tail labels along it, in face order, are the iterated
    Assoc composition of the vertex decorations.  Components are
    reported in order of their smallest vertex.
    """
    if not forest.graph.is_forest():
        raise ValueError("structure map needs a forest")
    if not forest.tails and forest.graph.tails():
        raise ValueError("structure map needs labeled tails")
    comp = forest.graph.vertex_components()
    n = forest.graph.component_count()
    words = [None] * n
    for cyc in forest.boundary_cycles():
        c = comp[forest.graph.attach[cyc[0]]]
        if words[c] is not None:
            raise AssertionError("a tree component with two boundary cycles")
        word = tuple(forest.tails[h] for h in cyc
                     if forest.graph.sigma[h] == h)
        words[c] = canonical_cycle(word)
    return tuple(words)


def corolla(cyclic_order):
    """One vertex, tails only, rotation realizing the cyclic order.

    The half-edge at index t carries the t-th label of the canonical
    rotation of cyclic_order.
    """
    cyc = canonical_cycle(cyclic_order)
    n = len(cyc)
    if n < 3:
        raise ValueError("corollas need at least 3 tails")
    from .graphs import Graph
    rot = tuple((t + 1) % n for t in range(n))
    tails = {t: cyc[t] for t in range(n)}
    return RibbonGraph(Graph((0,) * n, range(n)), rot, tails)
