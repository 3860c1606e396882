import random
import time

from surfop.assoc import Assoc, Commutative, canonical_cycle
from surfop.envelope import ModAssoc, SurfaceType, envelope_normalize
from surfop.enumerate import ribbon_classes
from surfop.operads import (check_cyclic_axioms, check_modular_axioms,
                            decorated_corolla, decorated_to_ribbon,
                            free_modular, ribbon_to_decorated, universal_map)

t0 = time.time()
rep = check_cyclic_axioms(Assoc(), size_bound=6)
print("Assoc @6:", rep, "%.1fs" % (time.time() - t0))
assert rep.ok

t0 = time.time()
rep = check_cyclic_axioms(Commutative(), size_bound=6)
print("Commutative @6:", rep, "%.1fs" % (time.time() - t0))
assert rep.ok


class BrokenCompose(Assoc):
    name = "BrokenCompose"

    def compose(self, x, i, y, j):
        out = super().compose(x, i, y, j)
        if len(out) == 6:
            return canonical_cycle(out[:1] + out[2:] + out[1:2])
        return out


rep = check_cyclic_axioms(BrokenCompose(), size_bound=6)
print("negative control:", rep.ok, "|", str(rep.counterexample)[:90])
assert not rep.ok


class BrokenGlue(ModAssoc):
    name = "BrokenGlue"

    def self_glue(self, x, i, j):
        st = super().self_glue(x, i, j)
        if i < j:
            return SurfaceType([(g + 1, cyc) for g, cyc in st.components])
        return st


t0 = time.time()
Q = ModAssoc(max_genus=2, max_cycles=5, max_edges=4)
rep = check_modular_axioms(Q, size_bound=4, weight=SurfaceType.normal_edges,
                           max_weight=4)
dt = time.time() - t0
print("ModAssoc <=4 edges:", rep, "%.1fs" % dt)
assert rep.ok

rep = check_modular_axioms(
    BrokenGlue(max_genus=2, max_cycles=5, max_edges=4), size_bound=4,
    weight=SurfaceType.normal_edges, max_weight=4)
print("negative modular:", rep.ok, "|", str(rep.counterexample)[:90])
assert not rep.ok


class Binary:
    """One generator on every 3-element label set."""

    name = "Binary"

    def elements(self, labels):
        return [frozenset(labels)] if len(labels) == 3 else []

    def labels_of(self, x):
        return frozenset(x)

    def relabel(self, x, mapping):
        return frozenset(mapping[a] for a in x)


# free modular: binary generator, 4 tails, 1 edge, loop rank 0
classes = free_modular(Binary(), ("a", "b", "c", "d"), 1, max_loop_rank=0)
print("binary 4-tail 1-edge classes:", len(classes))
assert len(classes) == 3

# zero edges: corollas decorated by P(I)
classes = free_modular(Assoc(), ("a", "b", "c", "d"), 0)
print("0-edge Assoc corollas:", len(classes))
assert len(classes) == 6  # (4-1)! cyclic orders

# Assoc-decorated graphs <= 3 edges, no tails == ribbon classes <= 3 edges
classes = free_modular(Assoc(), (), 3)
ribbon = set()
for g in range(0, 3):
    for b in range(1, 8):
        if 2 * g + b - 1 > 3:
            continue
        for r in ribbon_classes(g, b):
            if len(r.graph.edges()) <= 3:
                ribbon.add((g, b, r.graph.n_half_edges, id(r)))
count_ribbon = sum(1 for _ in ribbon)
print("free_modular(Assoc) <=3 edges:", len(classes),
      "ribbon classes:", count_ribbon)
assert len(classes) == count_ribbon

# universal map with identity into Mod(Assoc) equals envelope_normalize
Q = ModAssoc()
ident = universal_map(lambda x: SurfaceType([(0, (tuple(x),))]), Q)
rng = random.Random(7)
pool = free_modular(Assoc(), ("a", "b", "c"), 3)
print("decorated pool (3 tails, <=3 edges):", len(pool))
for X in pool:
    st = ident(X)
    env = envelope_normalize(decorated_to_ribbon(X)).surface
    assert st == env, (X, st, env)
    edges = list(X.graph.edges())
    for _ in range(3):
        rng.shuffle(edges)
        assert ident(X, edge_order=edges) == st
print("universal map == envelope_normalize on", len(pool), "graphs, "
      "shuffle-stable")

# commuting triangle: evaluating a corolla returns the p_map image
A = Assoc()
for x in A.elements(("a", "b", "c", "d")):
    X = decorated_corolla(A, x)
    disc = ident(X)
    assert disc == SurfaceType([(0, (tuple(x),))]), (x, disc)
print("commuting triangle ok")

# round trip decorated <-> ribbon
for X in pool[:10]:
    rg = decorated_to_ribbon(X)
    back = ribbon_to_decorated(rg)
    assert decorated_to_ribbon(back).rotation == rg.rotation
print("decorated/ribbon round trip ok")
print("total %.1fs" % (time.time() - t0))
