"""Command-line entry point: ``egsearch {check,filter,gen,search,stats}``.

Exit status: 0 normally (and for ``search``/``check`` when nothing
survives), 2 when survivors exist, 1 on operational errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from contextlib import contextmanager

from .enumeration import GeneratorSpec, IngestError, generate, ingest_graph6
from .graph_core import Graph6Error, encode_graph6
from .search import FILTER_ORDER, FORMAT_VERSION, MODE_ALIASES, SearchConfig, classify, load_summary, run_search
from .structural import filter_report

EXIT_OK, EXIT_ERROR, EXIT_SURVIVORS = 0, 1, 2


@contextmanager
def _open_input(path: str):
    if path == "-":
        yield sys.stdin
    else:
        with open(path) as fh:
            yield fh


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _error_record(err: IngestError) -> dict:
    return {"format_version": FORMAT_VERSION, "error": err.message, "line": err.line_number, "text": err.text}


def _cmd_check(args) -> int:
    cfg = SearchConfig(orders=(1, 62), max_exponent=args.max_exponent,
                       filters_enabled=frozenset(FILTER_ORDER) - set(args.disable_filter))
    status = EXIT_OK
    with _open_input(args.file) as fh:
        for item in ingest_graph6(fh, strict=args.strict):
            if isinstance(item, IngestError):
                _emit(_error_record(item))
                continue
            c = classify(item, cfg)
            if c.verdict == "survivor":
                status = EXIT_SURVIVORS
            _emit(c.to_record())
    return status


def _cmd_filter(args) -> int:
    with _open_input(args.file) as fh:
        for item in ingest_graph6(fh, strict=args.strict):
            if isinstance(item, IngestError):
                _emit(_error_record(item))
                continue
            rec = {"format_version": FORMAT_VERSION, "graph6": encode_graph6(item)}
            rec.update(filter_report(item).to_dict())
            _emit(rec)
    return EXIT_OK


def _cmd_gen(args) -> int:
    for g in generate(GeneratorSpec(args.n, MODE_ALIASES[args.mode])):
        sys.stdout.write(encode_graph6(g) + "\n")
    return EXIT_OK


def _parse_orders(text: str) -> tuple[int, int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    return int(text), int(text)


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        orders=_parse_orders(args.orders),
        mode=MODE_ALIASES[args.mode],
        ingest=args.ingest,
        max_exponent=args.max_exponent,
        filters_enabled=frozenset(FILTER_ORDER) - set(args.disable_filter),
        parallelism=args.jobs,
        out=args.out,
        strict_ingest=args.strict,
        resume=args.resume,
    )
    summary = run_search(cfg)
    if args.out is None:
        sys.stdout.write(summary.to_json())
    return EXIT_SURVIVORS if summary.survivors else EXIT_OK


def _cmd_stats(args) -> int:
    s = load_summary(args.summary)
    print(f"source: {s.source}   max exponent: {s.max_exponent}   filters: {', '.join(s.filters_enabled) or '-'}")
    lengths = sorted({L for o in s.orders.values() for L in o.witnessed})
    filters = [f for f in FILTER_ORDER if any(f in o.rejected for o in s.orders.values())]
    header = ["n", "examined"] + [f"rej:{f}" for f in filters] + [f"C{L}" for L in lengths] + ["survivors", "time(s)"]
    rows = []
    for n in sorted(s.orders):
        o = s.orders[n]
        rows.append([str(n), str(o.examined)]
                    + [str(o.rejected.get(f, 0)) for f in filters]
                    + [str(o.witnessed.get(L, 0)) for L in lengths]
                    + [str(len(o.survivors)), f"{o.wall_time:.2f}"])
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    if s.ingest_errors:
        print(f"ingest errors: {len(s.ingest_errors)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="egsearch", description="Search small graphs for power-of-two-cycle-free candidates.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="classify each graph6 line")
    c.add_argument("file")
    c.add_argument("--max-exponent", type=int, default=6)
    c.add_argument("--disable-filter", action="append", default=[], choices=FILTER_ORDER)
    c.add_argument("--strict", action="store_true")
    c.set_defaults(func=_cmd_check)

    f = sub.add_parser("filter", help="structural report for each graph6 line")
    f.add_argument("file")
    f.add_argument("--strict", action="store_true")
    f.set_defaults(func=_cmd_filter)

    g = sub.add_parser("gen", help="generate graphs as graph6")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--mode", choices=["cubic", "mindeg3"], required=True)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("search", help="run a search and print or write its summary")
    s.add_argument("--orders", required=True, help="inclusive range a..b")
    s.add_argument("--mode", choices=["cubic", "mindeg3"], default="mindeg3")
    s.add_argument("--ingest", metavar="FILE")
    s.add_argument("--max-exponent", type=int, default=6)
    s.add_argument("--disable-filter", action="append", default=[], choices=FILTER_ORDER)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", metavar="PATH")
    s.add_argument("--strict", action="store_true")
    s.add_argument("--resume", action="store_true")
    s.set_defaults(func=_cmd_search)

    t = sub.add_parser("stats", help="print a summary file as a table")
    t.add_argument("summary")
    t.set_defaults(func=_cmd_stats)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OSError, Graph6Error, ValueError) as exc:
        print(f"egsearch: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
