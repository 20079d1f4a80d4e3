"""Command-line interface.

State lives in a Turtle store file (default ./store.ttl); the inference
layer and the risk report are written next to it. Failures print one
error object to stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from . import datagen
from .model import parse_datetime
from .queries import QueryScope, co_attendees_csv, intersections_csv
from .reasoner import report_csv, report_rows
from .service import ApiError, TraceStore, overlap_mode, resolve_instance
from .turtle import load_graph, save_graph
from .vocabulary import default_vocabulary, load_vocabulary_file


def _load_vocab(args):
    if getattr(args, "vocab", None):
        return load_vocabulary_file(args.vocab)
    return default_vocabulary()


def _store_paths(args) -> tuple[Path, Path, Path]:
    store = Path(args.store)
    return store, store.with_suffix(store.suffix + ".inferred.ttl"), store.with_suffix(
        store.suffix + ".report.json"
    )


def _open_store(args, need_data: bool = True) -> TraceStore:
    store_path, inferred_path, _ = _store_paths(args)
    store = TraceStore(_load_vocab(args))
    if store_path.exists():
        graph = load_graph(store_path)
        store.replace_graph(graph)
    elif need_data:
        raise ApiError("no-store", f"store file {store_path} does not exist", status=404)
    if inferred_path.exists():
        # Rebuild the inference layer deterministically instead of trusting the file.
        if store.graph_size():
            store.reason()
    return store


def cmd_import(args) -> int:
    store_path, _, _ = _store_paths(args)
    store = TraceStore(_load_vocab(args))
    if store_path.exists():
        store.replace_graph(load_graph(store_path))
    before = store.graph_size()
    for source in args.files:
        text = Path(source).read_text(encoding="utf-8")
        store.import_text(text)
    graph, _ = store.snapshot()
    save_graph(graph, store_path)
    print(f"imported {len(graph) - before} new triples; store now holds {len(graph)}")
    return 0


def cmd_reason(args) -> int:
    store_path, inferred_path, report_path = _store_paths(args)
    store = TraceStore(_load_vocab(args))
    if not store_path.exists():
        raise ApiError("no-store", f"store file {store_path} does not exist", status=404)
    store.replace_graph(load_graph(store_path))
    summary = store.reason()
    result = store.classification()
    save_graph(result.inferred, inferred_path)
    report_path.write_text(
        json.dumps({"summary": summary, "assignments": report_rows(result)}, indent=2) + "\n",
        encoding="utf-8",
    )
    if args.csv:
        Path(args.csv).write_text(report_csv(result), encoding="utf-8")
    print(json.dumps(summary, indent=2))
    print(f"inference layer: {inferred_path}")
    print(f"report: {report_path}")
    return 0


def _maybe_dt(value):
    return parse_datetime(value) if value else None


def cmd_query(args) -> int:
    store = _open_store(args)
    engine = store.query_engine()
    if args.query_command == "intersect":
        scope = QueryScope(
            place=resolve_instance(args.place) if args.place else None,
            city=args.city,
            begin=_maybe_dt(args.begin),
            end=_maybe_dt(args.end),
        )
        rows = engine.find_intersections(scope, overlap_mode(args.mode))
        if args.format == "csv":
            print(intersections_csv(rows), end="")
        else:
            print(json.dumps([r.as_dict() for r in rows], indent=2))
    elif args.query_command == "contacts":
        rows = engine.co_attendees(resolve_instance(args.person), args.risk)
        if args.format == "csv":
            print(co_attendees_csv(rows), end="")
        else:
            print(json.dumps([r.as_dict() for r in rows], indent=2))
        for diag in engine.diagnostics:
            print(str(diag), file=sys.stderr)
    else:  # neighborhood
        result = engine.neighborhood(resolve_instance(args.center), args.depth, args.limit)
        print(json.dumps(result.as_dict(), indent=2))
    return 0


def cmd_gen(args) -> int:
    if args.gen_command == "suite":
        count = datagen.write_suite(args.out, args.sizes, args.seed)
        print(f"wrote {count} datasets under {args.out}")
    else:
        graph = datagen.build_demo_dataset()
        save_graph(graph, args.out)
        print(f"wrote demo dataset ({len(graph)} triples) to {args.out}")
    return 0


def cmd_bench(args) -> int:
    vocab = _load_vocab(args)
    try:
        report = bench_mod.run_benchmark(args.sizes, args.repetitions, args.seed, vocab)
    except bench_mod.BenchmarkCorrectnessError as exc:
        failing = [v.as_dict() for v in exc.verdicts if not v.passed]
        raise ApiError("verification-failed", str(exc), detail=failing[:5], status=500)
    verified = len(report.verdicts)
    print(f"verified {verified} datasets, all labels correct")
    print(report.table_text())
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "bench.csv").write_text(report.csv(), encoding="utf-8")
        (out / "bench.json").write_text(
            json.dumps(report.as_dict(), indent=2) + "\n", encoding="utf-8"
        )
        print(f"report written to {out}/bench.csv and {out}/bench.json")
    return 0


def cmd_stress(args) -> int:
    result = bench_mod.stress(args.size, vocab=_load_vocab(args))
    print(json.dumps(result.as_dict(), indent=2))
    return 1 if result.error else 0


def cmd_lint(args) -> int:
    vocab = _load_vocab(args)
    diagnostics = vocab.lint()
    for diag in diagnostics:
        print(str(diag))
    print(f"{len(diagnostics)} diagnostics")
    if args.export:
        save_graph(vocab.to_graph(), args.export)
        print(f"vocabulary rendering written to {args.export}")
    return 0 if not diagnostics else 1


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    store = TraceStore(_load_vocab(args))
    store_path = Path(args.store)
    if store_path.exists():
        store.replace_graph(load_graph(store_path))
        if store.graph_size():
            store.reason()
    host = args.host or os.environ.get("TRACEKG_HOST", "127.0.0.1")
    port = args.port or int(os.environ.get("TRACEKG_PORT", "8000"))
    app = create_app(store, ui_dir=args.ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracekg",
        description="Contact-tracing knowledge-graph engine with three-dimension risk classification.",
    )
    parser.add_argument("--store", default="store.ttl", help="store file (Turtle)")
    parser.add_argument("--vocab", help="vocabulary config file (YAML)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import", help="merge Turtle/N-Triples files into the store")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_import)

    p = sub.add_parser("reason", help="classify the store and write the inference layer")
    p.add_argument("--csv", help="also write the risk report as CSV")
    p.set_defaults(func=cmd_reason)

    p = sub.add_parser("query", help="run a contact query against the store")
    qsub = p.add_subparsers(dest="query_command", required=True)
    qi = qsub.add_parser("intersect", help="events overlapping in time at co-located places")
    qi.add_argument("--place")
    qi.add_argument("--city")
    qi.add_argument("--begin")
    qi.add_argument("--end")
    qi.add_argument("--mode", choices=["reliable", "possible"], default="reliable")
    qi.add_argument("--format", choices=["json", "csv"], default="json")
    qc = qsub.add_parser("contacts", help="co-attendees of a person at risky places")
    qc.add_argument("--person", required=True)
    qc.add_argument("--risk", default="ClosedSpace")
    qc.add_argument("--format", choices=["json", "csv"], default="json")
    qn = qsub.add_parser("neighborhood", help="expand the graph around a node")
    qn.add_argument("--center", required=True)
    qn.add_argument("--depth", type=int, default=1)
    qn.add_argument("--limit", type=int, default=50)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("gen", help="generate datasets")
    gsub = p.add_subparsers(dest="gen_command", required=True)
    gs = gsub.add_parser("suite", help="write the canonical labeled suite")
    gs.add_argument("--sizes", type=int, nargs="+", default=[100])
    gs.add_argument("--seed", type=int, default=0)
    gs.add_argument("--out", default="suite")
    gd = gsub.add_parser("demo", help="write the demo dataset")
    gd.add_argument("--out", default="demo.ttl")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="verify and time the canonical suite")
    p.add_argument("--sizes", type=int, nargs="+", default=[100])
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-dir")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("stress", help="classify one large mixed dataset")
    p.add_argument("--size", type=int, default=10000)
    p.set_defaults(func=cmd_stress)

    p = sub.add_parser("lint", help="check the vocabulary registry")
    p.add_argument("--export", help="write the vocabulary as Turtle")
    p.set_defaults(func=cmd_lint)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--ui-dir", help="directory with the built UI bundle")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ApiError as exc:
        print(json.dumps({"error": exc.as_dict()}), file=sys.stderr)
        return 1
    except Exception as exc:  # surface any failure in the error shape
        print(
            json.dumps({"error": {"code": "error", "message": str(exc)}}),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
