# %% [markdown]
# # Trees: branches, mu, and where the closed forms stop
#
# In a tree that is not a path, every leaf walks through degree-2 vertices to
# its first vertex of degree at least 3, its owner.  That walk is a branch.
# An owner has a *unique shortest branch* when one branch is strictly
# shorter than all the others; mu counts the owners (with two or more
# branches) that lack one.  The closed form under test is
# dim_wt = (sigma - ex) + mu.

# %%
import networkx as nx

from weaktotal import constructions as C
from weaktotal.graph import build_graph, is_path
from weaktotal.io import parse_graph6, to_graph6
from weaktotal.resolving import is_wtr_set, wtr_violations
from weaktotal.solvers import profile, weak_total_metric_dimension
from weaktotal.trees import construct_wtmb, decompose_tree, tree_reswt_bounds, tree_weak_total_dimension

g = C.spider([1, 2, 3])
td = decompose_tree(g)
for m in td.majors:
    print("owner", m.vertex, "branches", [b.vertices for b in m.branches], "unique shortest:", m.has_unique_shortest)
print("mu =", td.mu, " theta =", td.theta, " formula dim_wt =", tree_weak_total_dimension(td))
print("constructed basis", construct_wtmb(td).members, "brute force", weak_total_metric_dimension(g))

# %% [markdown]
# ## Every unlabelled tree up to 12 vertices
#
# networkx enumerates non-isomorphic trees; the brute-force search is the
# reference.

# %%
for n in range(5, 13):
    total = bad = 0
    first = None
    for t in nx.nonisomorphic_trees(n):
        h = build_graph(list(t.edges), n)
        if is_path(h):
            continue
        total += 1
        if tree_weak_total_dimension(decompose_tree(h)) != weak_total_metric_dimension(h)[0]:
            bad += 1
            first = first or to_graph6(h)
    print(f"n={n:2d}: {total:4d} trees, formula wrong on {bad}", first or "")

# %% [markdown]
# The first disagreement appears at 11 vertices.  A cleaner one on 13
# vertices: two owners, each with a unique shortest branch, so mu = 0 and the
# formula predicts 2.  The constructed pair {4, 12} fails: vertex 4 and the
# outside vertex 2 are both at distance 8 from 12, so only the coordinate of
# 4 itself separates them.

# %%
h = parse_graph6("LK?G_?A?KIW??C")
td = decompose_tree(h)
W = construct_wtmb(td)
print("owners:", [(m.vertex, m.lengths) for m in td.majors], "mu =", td.mu)
print("constructed", W.members, "violations", wtr_violations(h, W))
print("brute force dim_wt", weak_total_metric_dimension(h))

# %% [markdown]
# ## Bounds on res_wt
#
# The upper bound n - theta + 2 survives every tree we tried.  The lower bound
# (sum over branches of l - 1) does not: the spider with legs 2, 2, 3 has
# both bounds equal to 7 while its res_wt is 6.

# %%
s = C.spider([2, 2, 3])
lower, upper = tree_reswt_bounds(decompose_tree(s))
print("bounds", (lower, upper), "res_wt", profile(s).res_wt)
bad = [0, 1, 5, 6, 7]
print(bad, "is a 5-set that is not weak total resolving:", not is_wtr_set(s, bad), wtr_violations(s, bad))
