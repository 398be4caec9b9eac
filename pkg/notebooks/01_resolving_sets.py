# %% [markdown]
# # Weak total resolving sets on small graphs
#
# A set W of vertices resolves a graph when the distance vectors ("codes")
# to W are pairwise distinct.  It is *weak total* resolving when, in
# addition, every member v of W can be told apart from every outside vertex
# by some member other than v itself.  Equivalently: each outside code
# differs from each inside code in at least two coordinates.
#
# Run with `python3 notebooks/01_resolving_sets.py`.

# %%
import numpy as np

from weaktotal import constructions as C
from weaktotal.resolving import codes, is_resolving_set, is_wtr_set, wtr_violations
from weaktotal.solvers import PairTable, profile

p4 = C.path(4)
W = (0, 1)
print("codes of P4 w.r.t. {0, 1}:", codes(p4, W))
print("resolving:", is_resolving_set(p4, W), " weak total:", is_wtr_set(p4, W))
# 0 (inside) and 2 (outside) differ only in the coordinate of 0 itself
print("violations (v inside, u outside):", wtr_violations(p4, W))
print("the two ends instead:", is_wtr_set(p4, (0, 3)))

# %% [markdown]
# ## The three parameters
#
# `dim` is the smallest resolving set, `dim_wt` the smallest weak total one,
# and `res_wt` the least r such that *every* r-subset is weak total
# resolving.  A few families side by side:

# %%
rows = []
for name, g in [
    ("P6", C.path(6)),
    ("C5", C.cycle(5)),
    ("C6", C.cycle(6)),
    ("K5", C.complete(5)),
    ("K_{1,4}", C.star(4)),
    ("K2+(K1 u K3)", C.join_kr_k1_ks(2, 3)),
    ("two triangles + path", C.double_k3_path(3)),
]:
    p = profile(g)
    rows.append((name, g.n, p.dim, p.dim_wt, p.res_wt, p.randomly_wt_k))
print(f"{'graph':<22}{'n':>3}{'dim':>5}{'dim_wt':>8}{'res_wt':>8}  randomly k")
for r in rows:
    print(f"{r[0]:<22}{r[1]:>3}{r[2]:>5}{r[3]:>8}{r[4]:>8}  {r[5]}")

# %% [markdown]
# Twins (vertices with the same neighbourhood apart from each other) must
# all sit inside every weak total resolving set, which is why K5 needs every
# vertex and the star needs all of its leaves.

# %% [markdown]
# ## res_wt without enumerating subsets
#
# For a pair {u, v} let R(u, v) be the vertices at different distances from
# u and v; it always contains u and v.  The set (V - R(u, v)) + {v} misses
# every resolver of the pair except v, so it is not weak total resolving,
# and every non-WTR set sits inside one of these.  Hence
# res_wt = n + 2 - min |R(u, v)|.

# %%
g = C.cycle(6)
table = PairTable.of(g)
sizes = table.sizes
k = int(np.argmin(sizes))
u, v = int(table.iu[k]), int(table.iv[k])
print(f"smallest resolver set: pair ({u}, {v}) with {sizes[k]} resolvers")
blocker = sorted(set(range(g.n)) - set(np.flatnonzero(table.resolvers[k]).tolist()) | {v})
print("maximal non-WTR set:", blocker, is_wtr_set(g, blocker))
print("res_wt(C6) =", g.n + 2 - sizes.min())
