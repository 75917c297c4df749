"""Immutable simple graphs on vertices ``0..n-1`` stored as per-vertex bitsets.

Besides the container itself this module holds the primitives every other
stage builds on: degree profiles, single edge/vertex deletion, k-core
peeling, connected components and the graph6 codec.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Graph",
    "DegreeProfile",
    "GraphError",
    "Graph6Error",
    "MAX_VERTICES",
    "GRAPH6_MAX_N",
    "graph_from_edges",
    "parse_graph6",
    "encode_graph6",
    "degree_profile",
    "delete_edge",
    "delete_vertex",
    "add_edge",
    "k_core",
    "connected_components",
    "is_connected",
    "articulation_points",
    "relabel",
    "iter_bits",
]

MAX_VERTICES = 64
GRAPH6_MAX_N = 62


class GraphError(ValueError):
    """Invalid construction or deletion request."""


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 text."""


def _build_bit_table(width: int) -> tuple[tuple[int, ...], ...]:
    table: list[tuple[int, ...]] = [()]
    for b in range(width):
        table += [t + (b,) for t in table]
    return tuple(table)


_BITS16 = _build_bit_table(16)


def iter_bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask`` in ascending order."""
    if mask < 0x10000:
        return _BITS16[mask]
    out: list[int] = []
    base = 0
    while mask:
        out.extend(b + base for b in _BITS16[mask & 0xFFFF])
        mask >>= 16
        base += 16
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour bitset of ``v``.

    Instances are immutable and hashable, so they can be shared freely
    between worker processes. Use :func:`graph_from_edges` or
    :func:`parse_graph6` rather than the raw constructor, which does not
    validate symmetry.
    """

    n: int
    adj: tuple[int, ...]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    v3_count: int
    v_ge4_count: int
    regular_k: Optional[int]


def graph_from_edges(n: int, edges: Iterable[Sequence[int]], max_vertices: int = MAX_VERTICES) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 0 or n > max_vertices:
        raise GraphError(f"vertex count {n} outside 0..{max_vertices}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# graph6 -------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 word (no header, no newline)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"graph6 single-byte header supports n <= {GRAPH6_MAX_N}, got {n}")
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    adj = g.adj
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            acc = (acc << 1) | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 word. An optional ``>>graph6<<`` prefix is accepted."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 word")
    codes = [ord(c) - 63 for c in s]
    for pos, c in enumerate(codes):
        if not 0 <= c <= 63:
            raise Graph6Error(f"byte {s[pos]!r} at position {pos} outside the graph6 range 63..126")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte graph6 headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(codes) != expected:
        raise Graph6Error(f"graph6 word for n={n} must have {expected} bytes, got {len(codes)}")
    adj = [0] * n
    k = 0
    body = codes[1:]
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 word")
    return Graph(n, tuple(adj))


# degree queries and deletions ---------------------------------------------


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    if not degs:
        return DegreeProfile((), 0, 0, 0, None)
    lo, hi = min(degs), max(degs)
    return DegreeProfile(
        degrees=degs,
        min_degree=lo,
        v3_count=sum(1 for d in degs if d == 3),
        v_ge4_count=sum(1 for d in degs if d >= 4),
        regular_k=lo if lo == hi else None,
    )


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj[u] >> v & 1:
        raise GraphError(f"no edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise GraphError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def _drop_bit(mask: int, v: int) -> int:
    low = mask & ((1 << v) - 1)
    return low | (mask >> (v + 1) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; the remaining vertices keep their relative order."""
    if not 0 <= v < g.n:
        raise GraphError(f"no vertex {v}")
    adj = tuple(_drop_bit(a, v) for i, a in enumerate(g.adj) if i != v)
    return Graph(g.n - 1, adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph in which old vertex ``v`` is called ``perm[v]``."""
    adj = [0] * g.n
    for v in range(g.n):
        m = 0
        for w in iter_bits(g.adj[v]):
            m |= 1 << perm[w]
        adj[perm[v]] = m
    return Graph(g.n, tuple(adj))


# k-core and connectivity --------------------------------------------------


def k_core_mask(adj: Sequence[int], k: int, alive: Optional[int] = None) -> int:
    """Bitset of the k-core of the subgraph induced on ``alive``."""
    if alive is None:
        alive = (1 << len(adj)) - 1
    deg = [0] * len(adj)
    queue = deque()
    for v in iter_bits(alive):
        deg[v] = (adj[v] & alive).bit_count()
        if deg[v] < k:
            queue.append(v)
    removed = 0
    while queue:
        v = queue.popleft()
        if removed >> v & 1:
            continue
        removed |= 1 << v
        for w in iter_bits(adj[v] & alive & ~removed):
            deg[w] -= 1
            if deg[w] == k - 1:
                queue.append(w)
    return alive & ~removed


def k_core(g: Graph, k: int) -> frozenset[int]:
    """Vertex set of the maximal induced subgraph with minimum degree >= k."""
    if k < 0:
        raise GraphError("k must be non-negative")
    return frozenset(iter_bits(k_core_mask(g.adj, k)))


def component_mask(adj: Sequence[int], start: int, alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g.adj, start, remaining)
        comps.append(list(iter_bits(comp)))
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return component_mask(g.adj, 0, full) == full


def articulation_points(adj: Sequence[int], n: int) -> int:
    """Bitset of cut vertices of a graph given by its adjacency bitsets."""
    disc = [-1] * n
    low = [0] * n
    cut = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        stack = [(root, -1, iter_bits(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter_bits(adj[w])))
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if parent == root:
                        root_children += 1
                    elif low[v] >= disc[parent]:
                        cut |= 1 << parent
        if root_children > 1:
            cut |= 1 << root
    return cut
