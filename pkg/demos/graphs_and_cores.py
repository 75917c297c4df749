"""Building graphs, graph6 round trips, degree profiles and 3-cores.

Run: python3 demos/graphs_and_cores.py
"""

from itertools import combinations

from egsearch import degree_profile, delete_edge, encode_graph6, graph_from_edges, k_core, parse_graph6

k4 = graph_from_edges(4, combinations(range(4), 2))
print("K4 in graph6:", encode_graph6(k4))
print("decoded back equal:", parse_graph6("C~") == k4)

k34 = graph_from_edges(7, [(i, 3 + j) for i in range(3) for j in range(4)])
p = degree_profile(k34)
print(f"K_3,4 degrees {p.degrees}: {p.v3_count} of degree 3, {p.v_ge4_count} of degree >= 4")

# Removing one edge of K_3,3 leaves two degree-2 vertices; peeling them
# cascades until nothing of minimum degree 3 is left.
k33 = graph_from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)])
print("3-core of K_3,3:", sorted(k_core(k33, 3)))
print("3-core of K_3,3 minus an edge:", sorted(k_core(delete_edge(k33, 0, 3), 3)))
