"""Necessary conditions for a minimal counterexample, on a few small graphs.

Run: python3 demos/structural_filters.py
"""

from itertools import combinations

from egsearch import filter_report, graph_from_edges

graphs = {
    "K4": graph_from_edges(4, combinations(range(4), 2)),
    "K5": graph_from_edges(5, combinations(range(5), 2)),
    "K3,4": graph_from_edges(7, [(i, 3 + j) for i in range(3) for j in range(4)]),
    "C5": graph_from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),
}

fields = ["min_degree_ok", "edge_minimal", "deg3_dominating", "high_deg_independent", "cubic_fraction_ok"]
print(f"{'graph':6}" + "".join(f"{f:>22}" for f in fields))
for name, g in graphs.items():
    r = filter_report(g)
    print(f"{name:6}" + "".join(f"{str(getattr(r, f)):>22}" for f in fields))

# K3,4 sits exactly on the cubic-fraction boundary: 7 * 4 == 4 * 7.
r = filter_report(graphs["K3,4"])
print(f"K3,4: 7*{r.v3_count} = {7 * r.v3_count}, 4*{r.n} = {4 * r.n}")
print("K5 adjacent high-degree pair:", filter_report(graphs["K5"]).adjacent_high_pair)
