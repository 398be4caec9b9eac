# %% [markdown]
# # Running the verification suite
#
# Each claim about the parameters is a named checker.  A checker declares
# which graphs it applies to, tests the claim on each, and records up to 20
# counterexamples as graph6 strings so a failure can be replayed alone.

# %%
from weaktotal import constructions as C
from weaktotal.io import parse_graph6
from weaktotal.theorems import CHECKERS, format_table, graph_corpus, run_suite, tree_corpus

print(len(CHECKERS), "checkers, e.g.", sorted(CHECKERS)[:6])

# %% [markdown]
# ## General graphs up to five vertices

# %%
ids = ["lemma1", "ineq1", "thm5", "twins-resn", "res3-classification", "cycle-dimwt-3"]
print(format_table(run_suite(graph_corpus(5), ids)))

# %% [markdown]
# `cycle-dimwt-3` reports a scope note rather than a pass: C4 is a cycle
# whose dim_wt is 4, because its opposite vertices are twins.

# %% [markdown]
# ## Trees up to seven vertices
#
# Every labelled tree (Pruefer enumeration).  The dim_wt closed form holds
# here; the res_wt lower bound already fails.

# %%
reports = run_suite(tree_corpus(7, random_orders=[]), ["dimwt-formula", "thm-reswt-upper", "prop7-lower"])
print(format_table(reports))
bad = reports[-1].counterexamples[0]
print("first counterexample:", bad)

# %% [markdown]
# Replaying the stored graph6 string on its own reproduces the violation.

# %%
(again,) = run_suite([parse_graph6(bad["graph6"])], ["prop7-lower"])
print(again.verdict, again.counterexamples[0]["violation"])

# %% [markdown]
# ## Same thing from the shell
#
#     weaktotal verify --max-n 5 --max-tree-n 7 --tree-count 0 --output table
#     weaktotal verify --family spider -p legs=2,2,3 --theorems prop7-lower
#     weaktotal compute --family double_spider -p r=3 --output table
