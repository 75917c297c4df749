"""Necessary conditions for a minimal counterexample, with witnesses.

Each predicate is defined on every graph, not only on candidates with
minimum degree at least 3, so degenerate inputs can be reported too.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from .graph_core import Graph, iter_bits, k_core_mask

__all__ = [
    "FilterReport",
    "edge_minimal",
    "degree3_dominating",
    "high_degree_independent",
    "cubic_fraction_ok",
    "regularity",
    "filter_report",
]


def edge_minimal(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """True iff no proper subgraph of ``g`` has minimum degree >= 3.

    A proper subgraph either misses an edge ``e`` (then it lies inside
    ``g - e``) or has every edge of ``g`` and misses only isolated vertices
    (then it lies inside ``g - v`` for an isolated ``v``). A subgraph with
    minimum degree >= 3 survives peeling, so it sits inside the 3-core of
    that maximal proper subgraph. Checking the 3-core of each ``g - e`` and
    each ``g - v`` with ``v`` isolated is therefore exact.

    The violation is the lexicographically smallest edge ``(u, v)`` whose
    deletion leaves a nonempty 3-core; if only an isolated vertex works it
    is reported as the 1-tuple ``(v,)``.
    """
    adj = list(g.adj)
    for u, v in g.edges():
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        core = k_core_mask(adj, 3)
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
        if core:
            return False, (u, v)
    isolated = [v for v in range(g.n) if not g.adj[v]]
    if isolated and k_core_mask(g.adj, 3):
        return False, (isolated[0],)
    return True, None


def degree3_dominating(g: Graph) -> tuple[bool, Optional[int]]:
    deg3 = 0
    for v, a in enumerate(g.adj):
        if a.bit_count() == 3:
            deg3 |= 1 << v
    for v, a in enumerate(g.adj):
        if not a & deg3:
            return False, v
    return True, None


def high_degree_independent(g: Graph) -> tuple[bool, Optional[tuple[int, int]]]:
    high = 0
    for v, a in enumerate(g.adj):
        if a.bit_count() >= 4:
            high |= 1 << v
    for u in iter_bits(high):
        later = g.adj[u] & high & ~((1 << (u + 1)) - 1)
        if later:
            return False, (u, (later & -later).bit_length() - 1)
    return True, None


def cubic_fraction_ok(g: Graph) -> bool:
    """At least 4/7 of the vertices have degree exactly 3 (integer test)."""
    v3 = sum(1 for a in g.adj if a.bit_count() == 3)
    return 7 * v3 >= 4 * g.n


def regularity(g: Graph) -> Optional[int]:
    degs = {a.bit_count() for a in g.adj}
    return degs.pop() if len(degs) == 1 else None


@dataclass(frozen=True)
class FilterReport:
    n: int
    min_degree_ok: bool
    edge_minimal: bool
    edge_minimal_violation: Optional[tuple[int, ...]]
    deg3_dominating: bool
    undominated_vertex: Optional[int]
    high_deg_independent: bool
    adjacent_high_pair: Optional[tuple[int, int]]
    cubic_fraction_ok: bool
    v3_count: int
    v_ge4_count: int
    regular_k: Optional[int]
    regular_rejected: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("edge_minimal_violation", "adjacent_high_pair"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d


def filter_report(g: Graph) -> FilterReport:
    """Evaluate every predicate; nothing short-circuits."""
    degs = g.degrees()
    em, em_w = edge_minimal(g)
    dom, dom_w = degree3_dominating(g)
    ind, ind_w = high_degree_independent(g)
    k = regularity(g)
    return FilterReport(
        n=g.n,
        min_degree_ok=bool(degs) and min(degs) >= 3,
        edge_minimal=em,
        edge_minimal_violation=em_w,
        deg3_dominating=dom,
        undominated_vertex=dom_w,
        high_deg_independent=ind,
        adjacent_high_pair=ind_w,
        cubic_fraction_ok=cubic_fraction_ok(g),
        v3_count=sum(1 for d in degs if d == 3),
        v_ge4_count=sum(1 for d in degs if d >= 4),
        regular_k=k,
        regular_rejected=k is not None and k >= 4,
    )
