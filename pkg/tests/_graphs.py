"""Graph builders and random sources shared by the test modules."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from egsearch import Graph, graph_from_edges


def complete(n: int) -> Graph:
    return graph_from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner)


def prism() -> Graph:
    return graph_from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def disjoint_union(*gs: Graph) -> Graph:
    edges, offset = [], 0
    for g in gs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return graph_from_edges(offset, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return graph_from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def atlas(max_n: int = 7) -> list[Graph]:
    """Every graph on 1..max_n vertices (max_n <= 7), one per class."""
    return [from_nx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_n]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return graph_from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_min_degree_3(rng: random.Random, n: int) -> Graph:
    """Random graph with minimum degree >= 3 on ``n >= 4`` vertices.

    Half the draws start dense; the rest start empty and repeatedly attach a
    lowest-degree vertex, which gives near-cubic graphs where the vertices of
    degree >= 4 are often independent.
    """
    adj = [set() for _ in range(n)]
    if rng.random() < 0.5:
        p = rng.uniform(0.15, 0.7)
        for u, v in itertools.combinations(range(n), 2):
            if rng.random() < p:
                adj[u].add(v)
                adj[v].add(u)
    while True:
        low = [v for v in range(n) if len(adj[v]) < 3]
        if not low:
            break
        v = rng.choice(low)
        others = [w for w in range(n) if w != v and w not in adj[v]]
        low_others = [w for w in others if len(adj[w]) < 3]
        w = rng.choice(low_others if low_others and rng.random() < 0.9 else others)
        adj[v].add(w)
        adj[w].add(v)
    return graph_from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def has_proper_subgraph_min_degree_3(g: Graph) -> bool:
    """Literal search over proper subgraphs H of ``g`` for one with δ(H) >= 3.

    A subgraph with δ >= 3 has no isolated vertices, so it is determined by
    its edge set F: either F is a proper subset of E(g), or F = E(g) and
    some vertex of g is left out. Edge sets are visited by the removed set,
    smallest integer first, and the search stops at the first hit.
    """
    edges = g.edges()
    m = len(edges)
    degs = g.degrees()
    if m and all(d == 0 or d >= 3 for d in degs) and 0 in degs:
        return True
    for removed in range(1, 1 << m):
        kept = [e for i, e in enumerate(edges) if not removed >> i & 1]
        if not kept:
            continue
        degs = _degrees_of(g.n, kept)
        if all(d == 0 or d >= 3 for d in degs):
            return True
    return False


def _degrees_of(n, edges):
    degs = [0] * n
    for u, v in edges:
        degs[u] += 1
        degs[v] += 1
    return degs


def labelled_classes(n: int, min_degree: int = 0, max_degree: int | None = None, connected: bool = True) -> set[str]:
    """Certificates of all graphs on ``n`` vertices with degrees in
    ``[min_degree, max_degree]``, found by sweeping every labelled graph.

    Only labellings whose degree sequence is non-increasing are kept (every
    class has one), which keeps the canonicalisation step small.
    """
    import numpy as np

    from egsearch import certificate
    from egsearch.graph_core import is_connected

    pairs = [(u, v) for v in range(n) for u in range(v)]
    total = 1 << len(pairs)
    chunk = 1 << 20
    found = set()
    for start in range(0, total, chunk):
        masks = np.arange(start, min(total, start + chunk), dtype=np.int64)
        degs = np.zeros((n, masks.size), dtype=np.int8)
        for i, (u, v) in enumerate(pairs):
            bit = ((masks >> i) & 1).astype(np.int8)
            degs[u] += bit
            degs[v] += bit
        keep = degs[n - 1] >= min_degree
        if max_degree is not None:
            keep &= degs[0] <= max_degree
        for v in range(n - 1):
            keep &= degs[v] >= degs[v + 1]
        for mask in masks[keep].tolist():
            g = graph_from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
            if connected and not is_connected(g):
                continue
            found.add(certificate(g))
    return found
