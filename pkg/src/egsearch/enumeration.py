"""Isomorph-free generation of candidate graphs and graph6 ingestion.

Canonical labelling uses equitable-partition refinement followed by
individualisation backtracking, with automorphism pruning.

The default route for general modes is canonical augmentation by one vertex
at a time: a graph on ``m`` vertices is accepted as a child of ``G - v`` only
if ``v`` is the canonically chosen deletion vertex (a non-cut vertex in the
highest refined cell, ties broken by the rooted canonical certificate).
Because the deleted vertex is never a cut vertex, every intermediate graph is
connected. Cubic graphs default to edge insertion (see below), which is far
faster; augmentation and a filter-everything route stay available for
cross-checks.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, TextIO, Union

from .graph_core import (
    Graph,
    Graph6Error,
    articulation_points,
    component_mask,
    encode_graph6,
    is_connected,
    iter_bits,
    parse_graph6,
)

__all__ = [
    "GeneratorSpec",
    "METHODS",
    "MODES",
    "CanonicalForm",
    "canonical_form",
    "canonical_search",
    "certificate",
    "generate",
    "generate_by_filtering",
    "generate_cubic_by_insertion",
    "IngestError",
    "ingest_graph6",
]

log = logging.getLogger(__name__)

MODES = ("min_degree_3", "cubic_connected", "all_connected")

Cert = tuple  # relabelled adjacency bitsets in canonical vertex order


# refinement ---------------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable.

    ``splitters`` are vertex bitsets to refine against. Fragments of a split
    cell are ordered by neighbour count, and cells hit by one splitter are
    processed from the back, so the result never depends on vertex names.
    """
    n = len(adj)
    cells = list(cells)
    cell_of = [0] * n
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    queue = deque(splitters)
    while queue and len(cells) < n:
        smask = queue.popleft()
        touched = 0
        for v in iter_bits(smask):
            touched |= adj[v]
        hit = sorted({cell_of[v] for v in iter_bits(touched)}, reverse=True)
        split = False
        for i in hit:
            cell = cells[i]
            if len(cell) == 1:
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                c = (adj[v] & smask).bit_count()
                if c in groups:
                    groups[c].append(v)
                else:
                    groups[c] = [v]
            if len(groups) > 1:
                frags = [groups[c] for c in sorted(groups)]
                cells[i:i + 1] = frags
                queue.extend(_mask(f) for f in frags)
                split = True
        if split:
            for i, c in enumerate(cells):
                for v in c:
                    cell_of[v] = i
    return cells


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _vertex_invariants(adj: Sequence[int]) -> list[tuple[int, int, int]]:
    """(degree, triangles, 4-cycles) through each vertex, up to fixed factors."""
    inv = []
    for v, av in enumerate(adj):
        tri = 0
        walks: dict[int, int] = {}
        for w in iter_bits(av):
            aw = adj[w]
            tri += (aw & av).bit_count()
            for u in iter_bits(aw):
                walks[u] = walks.get(u, 0) + 1
        sq = 0
        for u, c in walks.items():
            if u != v:
                sq += c * (c - 1)
        inv.append((av.bit_count(), tri, sq))
    return inv


def _invariant_cells(adj: Sequence[int], key_of: Sequence, exclude: int = -1) -> list[list[int]]:
    by_key: dict = {}
    for v, key in enumerate(key_of):
        if v != exclude:
            by_key.setdefault(key, []).append(v)
    return [by_key[k] for k in sorted(by_key)]


def equitable_partition(adj: Sequence[int], root: Optional[int] = None) -> list[list[int]]:
    """Ordered equitable partition used both for canonical labelling and for
    choosing the deletion vertex during generation.

    Starts from degrees; if refinement leaves a non-singleton cell, it starts
    again from (degree, triangle count, 4-cycle count). Cell order never
    depends on vertex names. With ``root`` given, that vertex is placed in
    its own first cell.
    """
    n = len(adj)
    exclude = -1 if root is None else root
    head = [] if root is None else [[root]]
    cells = head + _invariant_cells(adj, [a.bit_count() for a in adj], exclude)
    cells = _refine(adj, cells, [_mask(c) for c in cells])
    if len(cells) == n:
        return cells
    cells = head + _invariant_cells(adj, _vertex_invariants(adj), exclude)
    return _refine(adj, cells, [_mask(c) for c in cells])


def _leaf_cert(adj: Sequence[int], order: Sequence[int]) -> Cert:
    n = len(order)
    lab = [0] * n
    for i, v in enumerate(order):
        lab[v] = i
    rows = []
    for v in order:
        m = 0
        for w in iter_bits(adj[v]):
            m |= 1 << lab[w]
        rows.append(m)
    return tuple(rows)


class _Search:
    """Backtracking over individualisations, keeping the minimal leaf."""

    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self.n = len(adj)
        self.first_path: Optional[list[int]] = None
        self.first_cert: Optional[Cert] = None
        self.first_order: Optional[list[int]] = None
        self.best_cert: Optional[Cert] = None
        self.best_order: Optional[list[int]] = None
        self.autos: list[list[int]] = []

    def _automorphism(self, order_a: Sequence[int], order_b: Sequence[int]) -> list[int]:
        # both orders give the same relabelled graph: order_a[i] -> order_b[i]
        perm = list(range(self.n))
        for a, b in zip(order_a, order_b):
            perm[a] = b
        return perm

    def _orbit_root(self, parent: list[int], v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def _stabiliser_orbits(self, path: Sequence[int]) -> list[int]:
        parent = list(range(self.n))
        for g in self.autos:
            if all(g[p] == p for p in path):
                for v in range(self.n):
                    a, b = self._orbit_root(parent, v), self._orbit_root(parent, g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return parent

    def run(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = _leaf_cert(self.adj, order)
            if self.first_cert is None:
                self.first_path = list(path)
                self.first_cert = self.best_cert = cert
                self.first_order = self.best_order = order
                return None
            if cert == self.first_cert:
                self.autos.append(self._automorphism(self.first_order, order))
                d = 0
                for a, b in zip(path, self.first_path):
                    if a != b:
                        break
                    d += 1
                return d
            if cert == self.best_cert:
                self.autos.append(self._automorphism(self.best_order, order))
            elif cert < self.best_cert:
                self.best_cert = cert
                self.best_order = order
            return None

        # target: first smallest non-singleton cell
        ti = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (ti < 0 or len(c) < len(cells[ti])):
                ti = i
        target = sorted(cells[ti])
        depth = len(path)
        tried: list[int] = []
        for v in target:
            if tried:
                orbits = self._stabiliser_orbits(path)
                rv = self._orbit_root(orbits, v)
                if any(self._orbit_root(orbits, t) == rv for t in tried):
                    continue
            tried.append(v)
            rest = [w for w in cells[ti] if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            child = _refine(self.adj, child, [1 << v])
            path.append(v)
            r = self.run(child, path)
            path.pop()
            if r is not None and r < depth:
                return r
        return None


def canonical_search(g: Graph, root: Optional[int] = None) -> _Search:
    s = _Search(g.adj)
    if g.n:
        s.run(equitable_partition(g.adj, root), [])
    else:
        s.best_cert, s.best_order = (), []
    return s


@dataclass(frozen=True)
class CanonicalForm:
    graph: Graph
    labeling: tuple[int, ...]  # labeling[v] = canonical label of input vertex v
    certificate: str  # graph6 encoding of ``graph``
    automorphism_generators: tuple[tuple[int, ...], ...]


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical relabelling of ``g``; isomorphic inputs share a certificate."""
    s = canonical_search(g)
    lab = [0] * g.n
    for i, v in enumerate(s.best_order):
        lab[v] = i
    cg = Graph(g.n, s.best_cert)
    return CanonicalForm(cg, tuple(lab), encode_graph6(cg), tuple(tuple(a) for a in s.autos))


def certificate(g: Graph) -> str:
    return canonical_form(g).certificate


def _rooted_cert(adj: Sequence[int], root: int) -> Cert:
    s = _Search(adj)
    s.run(equitable_partition(adj, root), [])
    return s.best_cert


# generation ---------------------------------------------------------------


METHODS = ("auto", "augment", "insertion", "filter")


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    ``method`` picks the route: ``augment`` (canonical augmentation by one
    vertex), ``insertion`` (cubic only: edge insertion into cubic graphs two
    vertices smaller) or ``filter`` (extend every graph of the previous
    order, keep one per certificate). ``auto`` uses insertion for cubic
    graphs and augmentation otherwise. With ``canonical`` set, every emitted
    graph is relabelled to its canonical form.
    """

    n: int
    mode: str = "min_degree_3"
    canonical: bool = False
    method: str = "auto"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.n < 1 or self.n > 62:
            raise ValueError(f"order {self.n} outside 1..62")
        if self.mode in ("min_degree_3", "cubic_connected") and self.n < 4:
            raise ValueError(f"mode {self.mode} needs n >= 4, got {self.n}")
        if self.mode == "cubic_connected" and self.n % 2:
            raise ValueError(f"cubic graphs need an even order, got {self.n}")
        if self.method == "insertion" and self.mode != "cubic_connected":
            raise ValueError("the insertion method only generates cubic graphs")


def _feasible(mode: str, adj: Sequence[int], remaining: int) -> bool:
    """Necessary condition for a generated graph to be an ancestor of a
    target, i.e. to extend to one by adding ``remaining`` vertices."""
    degs = [a.bit_count() for a in adj]
    if mode == "min_degree_3":
        need = 3 - remaining
        return need <= 0 or min(degs) >= need
    if mode == "cubic_connected":
        k = remaining
        deficit = 0
        for d in degs:
            if d > 3 or 3 - d > k:
                return False
            deficit += 3 - d
        if k == 0:
            return True
        spare = 3 * k - deficit  # endpoints left for edges among new vertices
        if spare < 0 or spare % 2 or spare // 2 > k * (k - 1) // 2:
            return False
        # Deleting max-degree vertices from a cubic graph removes an
        # independent set while degree-3 vertices remain.
        if max(degs) == 3 and spare:
            return False
        # a component without deficient vertices could never be joined up
        n = len(adj)
        remaining_mask = (1 << n) - 1
        deficient = _mask(v for v, d in enumerate(degs) if d < 3)
        while remaining_mask:
            start = (remaining_mask & -remaining_mask).bit_length() - 1
            comp = component_mask(adj, start, remaining_mask)
            if not comp & deficient:
                return False
            remaining_mask &= ~comp
        return True
    return True


def _subset_space(mode: str, degs: Sequence[int], child_remaining: int) -> tuple[int, int]:
    """(required, optional) bitsets for the neighbourhood of the new vertex."""
    n = len(degs)
    full = (1 << n) - 1
    if mode == "min_degree_3":
        need = 3 - child_remaining
        required = _mask(v for v, d in enumerate(degs) if d < need)
        return required, full & ~required
    if mode == "cubic_connected":
        return 0, _mask(v for v, d in enumerate(degs) if d < 3)
    return 0, full


# Cubic generation deletes any vertex of the top cell, so intermediates may be
# disconnected; the other modes delete non-cut vertices only and stay connected.
_NONCUT_RULE = {"min_degree_3": True, "all_connected": True, "cubic_connected": False}


def _children(
    parent_adj: tuple[int, ...], parent_autos: Optional[bool], target: int, mode: str
) -> Iterator[tuple[tuple[int, ...], Optional[bool]]]:
    """Canonical children of a parent graph, in a deterministic order.

    Yields ``(adjacency, has_automorphisms)``; the flag is ``None`` when it
    was not determined along the way.
    """
    m = len(parent_adj) + 1
    child_remaining = target - m
    v = m - 1
    vbit = 1 << v
    noncut = _NONCUT_RULE[mode]
    pdegs = [a.bit_count() for a in parent_adj]
    pmax = max(pdegs)
    required, optional = _subset_space(mode, pdegs, child_remaining)

    # children related by a parent automorphism are isomorphic; dedupe only
    # when the parent has some
    if parent_autos is None:
        parent_autos = bool(canonical_search(Graph(m - 1, parent_adj)).autos)
    seen: set = set()

    subsets = []
    sub = 0
    while True:
        S = required | sub
        if (S or not noncut) and (noncut or S.bit_count() >= pmax):
            subsets.append(S)
        sub = (sub - optional) & optional
        if sub == 0:
            break
    subsets.sort(key=lambda s: (s.bit_count(), s))

    for S in subsets:
        size = S.bit_count()
        adj = [a | vbit if S >> u & 1 else a for u, a in enumerate(parent_adj)]
        adj.append(S)
        higher = [u for u in range(v) if adj[u].bit_count() > size]
        cut = None
        if higher:
            # the new vertex must have top degree among deletable vertices
            if not noncut:
                continue
            cut = articulation_points(adj, m)
            if any(not cut >> u & 1 for u in higher):
                continue
        if not _feasible(mode, adj, child_remaining):
            continue
        cells = equitable_partition(adj)
        if noncut:
            if cut is None:
                cut = articulation_points(adj, m)
            cands = next(ok for ok in ([u for u in c if not cut >> u & 1] for c in reversed(cells)) if ok)
        else:
            cands = cells[-1]
        if v not in cands:
            continue
        search = None
        if len(cands) > 1:
            # deletion orbit: that of the candidate with least canonical label
            search = _Search(adj)
            search.run(cells, [])
            pos = {u: i for i, u in enumerate(search.best_order)}
            chosen = min(cands, key=pos.__getitem__)
            if chosen != v and _rooted_cert(adj, chosen) != _rooted_cert(adj, v):
                continue
        if parent_autos:
            if search is None:
                search = _Search(adj)
                search.run(cells, [])
            if search.best_cert in seen:
                continue
            seen.add(search.best_cert)
        if len(cells) == m:
            autos = False
        elif search is not None:
            autos = bool(search.autos)
        else:
            autos = None
        yield tuple(adj), autos


def _descend(adj: tuple[int, ...], autos: Optional[bool], target: int, mode: str) -> Iterator[tuple[int, ...]]:
    if len(adj) == target:
        yield adj
        return
    for child, child_autos in _children(adj, autos, target, mode):
        yield from _descend(child, child_autos, target, mode)


def generate(spec: GeneratorSpec) -> Iterator[Graph]:
    """Stream one graph per isomorphism class matching ``spec``.

    All modes emit connected graphs only. For ``min_degree_3`` this loses
    nothing: a disconnected graph with no power-of-two cycle has a component
    that is itself such a graph on fewer vertices, so an order-minimal
    counterexample is connected.
    """
    method = spec.method
    if method == "auto":
        method = "insertion" if spec.mode == "cubic_connected" else "augment"
    if method == "filter":
        stream = generate_by_filtering(spec)
    elif method == "insertion":
        stream = generate_cubic_by_insertion(spec.n)
    else:
        stream = _augment(spec)
    if spec.canonical:
        stream = (canonical_form(g).graph for g in stream)
    yield from stream


def _augment(spec: GeneratorSpec) -> Iterator[Graph]:
    mode, target = spec.mode, spec.n
    for adj in _descend((0,), False, target, mode):
        if mode == "min_degree_3" and min(a.bit_count() for a in adj) < 3:
            continue
        if mode == "cubic_connected" and any(a.bit_count() != 3 for a in adj):
            continue
        yield Graph(target, adj)


# cubic graphs by edge insertion -------------------------------------------
#
# Reduction of a cubic graph G at an edge xy: delete x and y, then join the
# four loose ends (x's other neighbours x1, x2 and y's y1, y2) by one of the
# three matchings {x1x2, y1y2}, {x1y1, x2y2}, {x1y2, x2y1}. It is valid when
# the result is simple. Every simple cubic graph other than a disjoint union
# of K4s has a valid reduction:
#   * if no edge is valid, inspecting the failing matchings of any edge xy
#     exhibits a diamond (K4 minus an edge) p, {s, t}, q with middle edge st;
#   * for such a diamond, with p' and q' the outside neighbours of p and q,
#     the edge pp' is valid (matching s-p'1, t-p'2) when p' != q', and when
#     p' == q' =: r the edge r r'' to r's third neighbour is valid
#     (matching p-r''1, q-r''2).
# Hence every cubic graph of order m is obtained from some cubic graph of
# order m - 2 (possibly disconnected) by the inverse operation, insertion.


def _edge_reductions(adj: Sequence[int], x: int, y: int) -> list[int]:
    """Valid matching kinds at edge xy: 0 same-side, 1 and 2 crossed."""
    xs = list(iter_bits(adj[x] & ~(1 << y)))
    ys = list(iter_bits(adj[y] & ~(1 << x)))
    x1, x2 = xs
    y1, y2 = ys
    kinds = []
    for kind, pairs in enumerate((((x1, x2), (y1, y2)), ((x1, y1), (x2, y2)), ((x1, y2), (x2, y1)))):
        (p, q), (r, t) = pairs
        if p == q or r == t:
            continue
        if adj[p] >> q & 1 or adj[r] >> t & 1:
            continue
        if {p, q} == {r, t}:
            continue
        kinds.append(kind)
    return kinds


def _edge_cycles(adj: Sequence[int], x: int, y: int) -> tuple[int, int]:
    """Triangles and 4-cycles through edge xy."""
    ax, ay = adj[x], adj[y]
    quad = 0
    for w in iter_bits(ax & ~(1 << y)):
        quad += (adj[w] & ay & ~(1 << x)).bit_count()
    return (ax & ay).bit_count(), quad


def _is_max_reduction(adj: Sequence[int], a: int, b: int, kind: int) -> bool:
    """Whether the reduction at ab is one of maximal key in ``adj``.

    The key is (triangles, 4-cycles, vertex invariants of the ends,
    same-side matching). Crossed matchings share a key, so the test does not
    depend on the labelling. Vertex invariants are only computed on ties.
    """
    if kind != 0 and 0 in _edge_reductions(adj, a, b):
        return False
    mine = _edge_cycles(adj, a, b)
    ties = []
    for x in range(len(adj)):
        for y in iter_bits(adj[x] >> (x + 1) << (x + 1)):
            if x == a and y == b:
                continue
            c = _edge_cycles(adj, x, y)
            if c < mine:
                continue
            kinds = _edge_reductions(adj, x, y)
            if not kinds:
                continue
            if c > mine:
                return False
            ties.append((x, y, 0 in kinds))
    if not ties:
        return True
    inv = _vertex_invariants(adj)

    def tail(x, y, same):
        lo, hi = sorted((inv[x], inv[y]))
        return hi, lo, same

    own = tail(a, b, kind == 0)
    return all(tail(*t) <= own for t in ties)


def _insertions(parent: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], int]]:
    """All children of a cubic graph under edge insertion, with the kind of
    reduction that undoes each one."""
    m = len(parent)
    a, b = m, m + 1
    edges = [(u, v) for u in range(m) for v in iter_bits(parent[u] >> (u + 1) << (u + 1))]
    for i, (u1, v1) in enumerate(edges):
        for u2, v2 in edges[i + 1:]:
            options = [(0, (u1, v1), (u2, v2))]
            if u1 != u2 and v1 != v2:
                options.append((1, (u1, u2), (v1, v2)))
            if u1 != v2 and v1 != u2:
                options.append((2, (u1, v2), (v1, u2)))
            for kind, na, nb in options:
                adj = list(parent) + [0, 0]
                adj[u1] &= ~(1 << v1)
                adj[v1] &= ~(1 << u1)
                adj[u2] &= ~(1 << v2)
                adj[v2] &= ~(1 << u2)
                for w in na:
                    adj[w] |= 1 << a
                    adj[a] |= 1 << w
                for w in nb:
                    adj[w] |= 1 << b
                    adj[b] |= 1 << w
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                yield tuple(adj), kind


def _k4_union(m: int) -> tuple[int, ...]:
    adj = []
    for v in range(m):
        base = v - v % 4
        adj.append(0b1111 << base & ~(1 << v))
    return tuple(adj)


def _cubic_level(previous: Iterable[tuple[int, ...]], m: int, connected_only: bool) -> dict:
    found: dict = {}
    for parent in previous:
        for adj, kind in _insertions(parent):
            if connected_only and component_mask(adj, 0, (1 << m) - 1) != (1 << m) - 1:
                continue
            if not _is_max_reduction(adj, m - 2, m - 1, kind):
                continue
            s = _Search(adj)
            s.run(equitable_partition(adj), [])
            found.setdefault(s.best_cert, s.best_cert)
    if m % 4 == 0 and not connected_only:
        k4s = _k4_union(m)
        found.setdefault(canonical_search(Graph(m, k4s)).best_cert, k4s)
    return found


def generate_cubic_by_insertion(n: int) -> Iterator[Graph]:
    """Connected cubic graphs of order ``n``, one per isomorphism class.

    Every level 4, 6, ..., n is held in memory; the intermediate ones keep
    disconnected graphs too, the last keeps only connected ones. A child is
    kept when its new edge is a reduction of maximal invariant key, and once
    per canonical certificate.
    """
    if n < 4 or n % 2:
        raise ValueError(f"cubic graphs need an even order >= 4, got {n}")
    graphs = [_k4_union(4)]
    for m in range(6, n + 1, 2):
        found = _cubic_level(graphs, m, connected_only=m == n)
        graphs = [found[c] for c in sorted(found)]
        log.debug("insertion route: %d cubic graphs of order %d", len(graphs), m)
    for adj in graphs:
        g = Graph(n, adj)
        if is_connected(g):
            yield g


def generate_by_filtering(spec: GeneratorSpec) -> Iterator[Graph]:
    """Second generation route: extend every representative of the previous
    level by every admissible neighbourhood, then keep one graph per
    canonical certificate. Materialises each level; used for cross-checks.
    """
    mode, target = spec.mode, spec.n
    level: list[tuple[int, ...]] = [(0,)]
    for m in range(2, target + 1):
        remaining = target - m
        found: dict[str, tuple[int, ...]] = {}
        for parent in level:
            pdegs = [a.bit_count() for a in parent]
            required, optional = _subset_space(mode, pdegs, remaining)
            sub = 0
            while True:
                S = required | sub
                if S or not _NONCUT_RULE[mode]:
                    adj = [a | (1 << (m - 1)) if S >> u & 1 else a for u, a in enumerate(parent)]
                    adj.append(S)
                    if _feasible(mode, adj, remaining):
                        cert = certificate(Graph(m, tuple(adj)))
                        found.setdefault(cert, tuple(adj))
                sub = (sub - optional) & optional
                if sub == 0:
                    break
        level = [found[c] for c in sorted(found)]
        log.debug("filter route: order %d has %d graphs", m, len(level))
    for adj in level:
        g = Graph(target, adj)
        if mode == "min_degree_3" and min(g.degrees()) < 3:
            continue
        if mode == "cubic_connected" and (any(d != 3 for d in g.degrees()) or not is_connected(g)):
            continue
        yield g


# ingestion ----------------------------------------------------------------


@dataclass(frozen=True)
class IngestError:
    line_number: int
    text: str
    message: str


def ingest_graph6(
    source: Union[TextIO, Iterable[str]],
    strict: bool = False,
    errors: Optional[list] = None,
) -> Iterator[Union[Graph, IngestError]]:
    """Yield graphs from a line-oriented graph6 stream.

    Blank lines are skipped and a ``>>graph6<<`` prefix is dropped. In lenient
    mode a malformed line yields an :class:`IngestError` (and is appended to
    ``errors`` if given) and reading continues; in strict mode it raises.
    """
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}") from exc
            rec = IngestError(lineno, line, str(exc))
            if errors is not None:
                errors.append(rec)
            yield rec
