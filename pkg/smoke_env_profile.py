import time

from surfop.assoc import Assoc
from surfop.envelope import ModAssoc, SurfaceType, envelope_normalize
from surfop.operads import decorated_to_ribbon, free_modular, universal_map

t0 = time.time()
pool3 = free_modular(Assoc(), ("a", "b", "c"), 3)
t_pool3 = time.time() - t0
print("pool <=3 edges:", len(pool3), "%.1fs" % t_pool3)

ident = universal_map(lambda x: SurfaceType([(0, (tuple(x),))]), ModAssoc())
t0 = time.time()
for X in pool3:
    ident(X)
t_ident = time.time() - t0
print("ident over pool3: %.1fs (%.2f ms each)" % (
    t_ident, 1000 * t_ident / len(pool3)))

t0 = time.time()
for X in pool3:
    envelope_normalize(decorated_to_ribbon(X))
t_env = time.time() - t0
print("envelope_normalize over pool3: %.1fs (%.2f ms each)" % (
    t_env, 1000 * t_env / len(pool3)))

t0 = time.time()
pool4 = free_modular(Assoc(), ("a", "b", "c"), 4)
t_pool4 = time.time() - t0
print("pool <=4 edges:", len(pool4), "%.1fs" % t_pool4)
by_edges = {}
for X in pool4:
    e = len(X.graph.edges())
    by_edges[e] = by_edges.get(e, 0) + 1
print("by edge count:", dict(sorted(by_edges.items())))
