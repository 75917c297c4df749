"""Exact fixed-length cycle detection with explicit, checkable witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import Graph, connected_components, iter_bits

__all__ = [
    "CycleWitness",
    "DEFAULT_MAX_EXPONENT",
    "has_cycle_of_length",
    "cycle_spectrum_bruteforce",
    "find_power_of_two_cycle",
    "verify_witness",
]

DEFAULT_MAX_EXPONENT = 6


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    length: int

    @classmethod
    def of(cls, vertices) -> "CycleWitness":
        vs = tuple(vertices)
        return cls(vs, len(vs))


def verify_witness(g: Graph, w: CycleWitness) -> bool:
    vs = w.vertices
    L = w.length
    if L < 3 or len(vs) != L or len(set(vs)) != L:
        return False
    if any(not (0 <= v < g.n) for v in vs):
        return False
    return all(g.adjacent(vs[i], vs[(i + 1) % L]) for i in range(L))


def _distances(adj, source: int, alive: int) -> dict[int, int]:
    dist = {source: 0}
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _cycle_through_anchor(adj, s: int, L: int, alive: int) -> Optional[list[int]]:
    """Search for an L-cycle whose smallest vertex is ``s``.

    ``alive`` holds the vertices allowed on the cycle (all > s, plus s).
    A partial path may only continue to vertices whose static distance back
    to ``s`` fits in the remaining edge budget.
    """
    dist = _distances(adj, s, alive)
    far = L // 2
    # Vertices further than L//2 from s can never lie on an L-cycle through s.
    usable = 0
    for v, d in dist.items():
        if d <= far:
            usable |= 1 << v
    # Every cycle vertex needs two neighbours inside the usable set.
    changed = True
    while changed:
        changed = False
        for v in iter_bits(usable):
            if (adj[v] & usable).bit_count() < 2:
                usable &= ~(1 << v)
                changed = True
    if not usable >> s & 1 or usable.bit_count() < L:
        return None
    dist = _distances(adj, s, usable)

    path = [s]
    closing = adj[s] & usable

    def extend(v: int, on_path: int) -> bool:
        k = len(path)  # vertices on path, path[-1] == v
        if k == L:
            # close back to s; the second vertex < last vertex fixes orientation
            return bool(closing >> v & 1) and path[1] < v
        remaining = L - k  # edges still to add before the closing edge
        for w in iter_bits(adj[v] & usable & ~on_path):
            dw = dist.get(w)
            if dw is None or dw > remaining:
                continue
            path.append(w)
            if extend(w, on_path | (1 << w)):
                return True
            path.pop()
        return False

    if extend(s, 1 << s):
        return path
    return None


def has_cycle_of_length(g: Graph, L: int) -> Optional[CycleWitness]:
    """Return a witness for a cycle of length exactly ``L``, or ``None``.

    Each cycle is searched from its smallest vertex, so anchors are tried in
    ascending order and every later search runs on a strictly smaller
    vertex set.
    """
    if L < 3:
        raise ValueError(f"cycle length must be at least 3, got {L}")
    n = g.n
    if L > n:
        return None
    adj = g.adj
    if L == 4:
        return _four_cycle(g)
    full = (1 << n) - 1
    for s in range(n - L + 1):
        alive = full & ~((1 << s) - 1)
        found = _cycle_through_anchor(adj, s, L, alive)
        if found is not None:
            return CycleWitness.of(found)
    return None


def _four_cycle(g: Graph) -> Optional[CycleWitness]:
    # a 4-cycle s-a-w-b with s minimal is two common neighbours a < b of s and w
    adj = g.adj
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        for w in range(s + 1, g.n):
            common = adj[s] & adj[w] & higher
            if common.bit_count() >= 2:
                a = (common & -common).bit_length() - 1
                common ^= 1 << a
                b = (common & -common).bit_length() - 1
                return CycleWitness((s, a, w, b), 4)
    return None


def find_power_of_two_cycle(g: Graph, max_exponent: int = DEFAULT_MAX_EXPONENT) -> Optional[CycleWitness]:
    """Shortest power-of-two cycle (lengths 4, 8, ..., 2**max_exponent).

    Lengths are tried in ascending order; within a length, components are
    tried by smallest vertex. Lengths longer than a component are skipped.
    """
    if max_exponent < 2:
        raise ValueError("max_exponent must be at least 2")
    comps = [c for c in connected_components(g) if len(c) >= 4]
    if not comps:
        return None
    subgraphs = []
    for comp in comps:
        index = {v: i for i, v in enumerate(comp)}
        adj = []
        for v in comp:
            m = 0
            for w in iter_bits(g.adj[v]):
                m |= 1 << index[w]
            adj.append(m)
        subgraphs.append((comp, Graph(len(comp), tuple(adj))))
    for e in range(2, max_exponent + 1):
        L = 1 << e
        for comp, sub in subgraphs:
            if L > sub.n:
                continue
            w = has_cycle_of_length(sub, L)
            if w is not None:
                return CycleWitness(tuple(comp[v] for v in w.vertices), L)
    return None


def cycle_spectrum_bruteforce(g: Graph) -> set[int]:
    """All cycle lengths of ``g`` by exhaustive simple-path extension.

    Exponential; meant as a test oracle on small graphs. Every simple path
    starting at its minimum vertex is extended, and a cycle is recorded
    whenever the endpoint is adjacent back to the start.
    """
    n = g.n
    nbrs = [[w for w in range(n) if g.adjacent(v, w)] for v in range(n)]
    lengths: set[int] = set()

    for start in range(n):
        visited = [False] * n
        visited[start] = True
        stack = [(start, 1, iter(nbrs[start]))]
        while stack:
            v, depth, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                visited[v] = False if v != start else True
                continue
            if nxt == start and depth >= 3:
                lengths.add(depth)
            if nxt > start and not visited[nxt]:
                visited[nxt] = True
                stack.append((nxt, depth + 1, iter(nbrs[nxt])))
    return lengths
