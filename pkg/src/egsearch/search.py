"""Classification pipeline: source -> structural filters -> cycle search.

Filters are sound accelerators only: each rejects graphs that cannot be a
minimal counterexample, so disabling them can only enlarge the survivor
set. Minimum degree >= 3 is part of what a candidate *is*; with the
``min_degree`` filter disabled it is still enforced, but only after the
cycle search.
"""

from __future__ import annotations

import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from itertools import islice
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .cycle_detect import DEFAULT_MAX_EXPONENT, CycleWitness, find_power_of_two_cycle, verify_witness
from .enumeration import GeneratorSpec, IngestError, generate, ingest_graph6
from .graph_core import Graph, encode_graph6, parse_graph6
from .structural import (
    cubic_fraction_ok,
    degree3_dominating,
    edge_minimal,
    filter_report,
    high_degree_independent,
    regularity,
)

__all__ = [
    "FORMAT_VERSION",
    "FILTER_ORDER",
    "MODE_ALIASES",
    "SearchConfig",
    "Classification",
    "OrderSummary",
    "SearchSummary",
    "classify",
    "run_search",
    "load_summary",
]

log = logging.getLogger(__name__)

FORMAT_VERSION = 1

# cheap to expensive; the first failing filter is the one reported
FILTER_ORDER = (
    "min_degree",
    "regular_reject",
    "high_deg_independent",
    "cubic_fraction",
    "deg3_dominating",
    "edge_minimal",
)

MODE_ALIASES = {
    "cubic": "cubic_connected",
    "mindeg3": "min_degree_3",
    "cubic_connected": "cubic_connected",
    "min_degree_3": "min_degree_3",
    "all_connected": "all_connected",
}


@dataclass(frozen=True)
class SearchConfig:
    orders: tuple[int, int]
    mode: str = "min_degree_3"
    ingest: Optional[str] = None
    max_exponent: int = DEFAULT_MAX_EXPONENT
    filters_enabled: frozenset = frozenset(FILTER_ORDER)
    parallelism: int = 1
    out: Optional[str] = None
    strict_ingest: bool = False
    batch_size: int = 2000
    resume: bool = False

    def __post_init__(self):
        lo, hi = self.orders
        if lo > hi:
            raise ValueError(f"empty order range {lo}..{hi}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if self.max_exponent < 2:
            raise ValueError("max_exponent must be at least 2")
        unknown = set(self.filters_enabled) - set(FILTER_ORDER)
        if unknown:
            raise ValueError(f"unknown filters: {sorted(unknown)}")
        object.__setattr__(self, "mode", MODE_ALIASES.get(self.mode, self.mode))
        object.__setattr__(self, "filters_enabled", frozenset(self.filters_enabled))


@dataclass(frozen=True)
class Classification:
    graph6: str
    verdict: str  # "rejected", "witnessed" or "survivor"
    filter: Optional[str] = None
    filter_witness: Optional[object] = None
    witness: Optional[CycleWitness] = None

    @property
    def cycle_length(self) -> Optional[int]:
        return self.witness.length if self.witness else None

    def to_record(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "graph6": self.graph6,
            "verdict": self.verdict,
            "filter": self.filter,
            "filter_witness": self.filter_witness,
            "cycle_length": self.cycle_length,
            "witness": list(self.witness.vertices) if self.witness else None,
        }


def _run_filter(name: str, g: Graph):
    """Return a witness if ``g`` fails filter ``name``, else ``None``."""
    if name == "min_degree":
        degs = g.degrees()
        if not degs or min(degs) < 3:
            return degs.index(min(degs)) if degs else -1
    elif name == "regular_reject":
        k = regularity(g)
        if k is not None and k >= 4:
            return k
    elif name == "high_deg_independent":
        ok, pair = high_degree_independent(g)
        if not ok:
            return list(pair)
    elif name == "cubic_fraction":
        if not cubic_fraction_ok(g):
            return [sum(1 for d in g.degrees() if d == 3), g.n]
    elif name == "deg3_dominating":
        ok, v = degree3_dominating(g)
        if not ok:
            return v
    elif name == "edge_minimal":
        ok, e = edge_minimal(g)
        if not ok:
            return list(e)
    return None


def classify(g: Graph, cfg: SearchConfig, graph6: Optional[str] = None) -> Classification:
    g6 = graph6 if graph6 is not None else encode_graph6(g)
    for name in FILTER_ORDER:
        if name in cfg.filters_enabled:
            w = _run_filter(name, g)
            if w is not None:
                return Classification(g6, "rejected", name, w)
    cyc = find_power_of_two_cycle(g, cfg.max_exponent)
    if cyc is not None:
        return Classification(g6, "witnessed", witness=cyc)
    if "min_degree" not in cfg.filters_enabled:
        w = _run_filter("min_degree", g)
        if w is not None:
            return Classification(g6, "rejected", "min_degree", w)
    return Classification(g6, "survivor")


@dataclass
class OrderSummary:
    n: int
    examined: int = 0
    rejected: dict = field(default_factory=dict)
    witnessed: dict = field(default_factory=dict)
    survivors: list = field(default_factory=list)
    witness_audit_failures: int = 0
    wall_time: float = 0.0

    def add(self, c: Classification, g: Graph) -> None:
        self.examined += 1
        if c.verdict == "rejected":
            self.rejected[c.filter] = self.rejected.get(c.filter, 0) + 1
        elif c.verdict == "witnessed":
            L = c.cycle_length
            self.witnessed[L] = self.witnessed.get(L, 0) + 1
            if not verify_witness(g, c.witness):
                self.witness_audit_failures += 1
        else:
            self.survivors.append(c.graph6)

    def merge(self, other: "OrderSummary") -> None:
        self.examined += other.examined
        for k, v in other.rejected.items():
            self.rejected[k] = self.rejected.get(k, 0) + v
        for k, v in other.witnessed.items():
            self.witnessed[k] = self.witnessed.get(k, 0) + v
        self.survivors.extend(other.survivors)
        self.witness_audit_failures += other.witness_audit_failures

    def conserved(self) -> bool:
        return self.examined == sum(self.rejected.values()) + sum(self.witnessed.values()) + len(self.survivors)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "n": self.n,
            "examined": self.examined,
            "rejected": {k: self.rejected[k] for k in FILTER_ORDER if k in self.rejected},
            "witnessed": {str(k): self.witnessed[k] for k in sorted(self.witnessed)},
            "survivors": sorted(self.survivors),
            "witness_audit_failures": self.witness_audit_failures,
        }
        if timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OrderSummary":
        return cls(
            n=d["n"],
            examined=d["examined"],
            rejected=dict(d["rejected"]),
            witnessed={int(k): v for k, v in d["witnessed"].items()},
            survivors=list(d["survivors"]),
            witness_audit_failures=d.get("witness_audit_failures", 0),
            wall_time=d.get("wall_time", 0.0),
        )


@dataclass
class SearchSummary:
    source: str
    max_exponent: int
    filters_enabled: list
    orders: dict = field(default_factory=dict)  # n -> OrderSummary
    ingest_errors: list = field(default_factory=list)

    @property
    def survivors(self) -> list[str]:
        return sorted(s for o in self.orders.values() for s in o.survivors)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "source": self.source,
            "max_exponent": self.max_exponent,
            "filters_enabled": [f for f in FILTER_ORDER if f in self.filters_enabled],
            "orders": [self.orders[n].to_dict(timing) for n in sorted(self.orders)],
            "ingest_errors": self.ingest_errors,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False) + "\n"


def load_summary(path: Union[str, Path]) -> SearchSummary:
    d = json.loads(Path(path).read_text())
    if d.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported summary format_version {d.get('format_version')!r}")
    s = SearchSummary(d["source"], d["max_exponent"], d["filters_enabled"], ingest_errors=d.get("ingest_errors", []))
    for od in d["orders"]:
        s.orders[od["n"]] = OrderSummary.from_dict(od)
    return s


# workers ------------------------------------------------------------------


def _classify_batch(args) -> OrderSummary:
    n, words, cfg = args
    part = OrderSummary(n)
    for w in words:
        g = parse_graph6(w)
        part.add(classify(g, cfg, w), g)
    return part


def _batches(words: Iterable[str], size: int) -> Iterator[list[str]]:
    it = iter(words)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _source_words(cfg: SearchConfig, summary: SearchSummary) -> dict[int, Iterable[str]]:
    lo, hi = cfg.orders
    if cfg.ingest is None:
        return {
            n: (encode_graph6(g) for g in generate(GeneratorSpec(n, cfg.mode)))
            for n in range(lo, hi + 1)
            if _order_admissible(cfg.mode, n)
        }
    by_order: dict[int, list[str]] = {}
    stream = open(cfg.ingest) if cfg.ingest != "-" else sys.stdin
    try:
        for item in ingest_graph6(stream, strict=cfg.strict_ingest):
            if isinstance(item, IngestError):
                summary.ingest_errors.append({"line": item.line_number, "text": item.text, "error": item.message})
                continue
            if lo <= item.n <= hi:
                by_order.setdefault(item.n, []).append(encode_graph6(item))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return {n: by_order[n] for n in sorted(by_order)}


def _order_admissible(mode: str, n: int) -> bool:
    if mode == "cubic_connected":
        return n >= 4 and n % 2 == 0
    if mode == "min_degree_3":
        return n >= 4
    return n >= 1


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _survivor_path(out: Path) -> Path:
    return out.with_name(out.stem + ".survivors.jsonl")


def run_search(cfg: SearchConfig) -> SearchSummary:
    """Classify every graph from the configured source, order by order.

    Counts and survivor lists do not depend on ``cfg.parallelism``. With
    ``cfg.out`` set, the summary is flushed after each completed order and
    survivors are written with their filter reports next to it; with
    ``cfg.resume`` a previous summary at ``cfg.out`` is reloaded and its
    completed orders are skipped.
    """
    source = f"ingest:{cfg.ingest}" if cfg.ingest else f"generate:{cfg.mode}"
    summary = SearchSummary(source, cfg.max_exponent, sorted(cfg.filters_enabled))
    out = Path(cfg.out) if cfg.out else None
    if out is not None and cfg.resume and out.exists():
        previous = load_summary(out)
        if previous.source == source and previous.max_exponent == cfg.max_exponent:
            summary.orders.update(previous.orders)
            log.info("resuming; orders already done: %s", sorted(previous.orders))

    words_by_order = _source_words(cfg, summary)
    pool = Pool(cfg.parallelism) if cfg.parallelism > 1 else None
    try:
        for n, words in words_by_order.items():
            if n in summary.orders:
                continue
            t0 = time.perf_counter()
            agg = OrderSummary(n)
            tasks = ((n, chunk, cfg) for chunk in _batches(words, cfg.batch_size))
            parts = pool.imap(_classify_batch, tasks) if pool else map(_classify_batch, tasks)
            for part in parts:
                agg.merge(part)
            agg.survivors.sort()
            agg.wall_time = time.perf_counter() - t0
            summary.orders[n] = agg
            log.info("order %d: examined %d, survivors %d (%.1fs)", n, agg.examined, len(agg.survivors), agg.wall_time)
            if out is not None:
                _write_atomic(out, summary.to_json())
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    if out is not None:
        _write_atomic(out, summary.to_json())
        lines = []
        for w in summary.survivors:
            rec = {"format_version": FORMAT_VERSION, "graph6": w, **filter_report(parse_graph6(w)).to_dict()}
            lines.append(json.dumps(rec))
        _write_atomic(_survivor_path(out), "".join(line + "\n" for line in lines))
    return summary
