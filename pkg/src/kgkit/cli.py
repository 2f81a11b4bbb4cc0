"""Command-line front end.

Thin adapters around the library: every command parses its inputs,
calls the corresponding module function and serializes the result.
Machine-readable output goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 inconsistent KB,
4 query/validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import embeddings, owl, rdfs, reify
from .errors import (
    KGError,
    ParseError,
    QueryValidationError,
    ReifyError,
    ValidationError,
)
from .query import REGIMES, parse_competency, parse_query, query as run_query
from .graph import Graph, graph_from_triples
from .io import format_term, parse_ntriples, parse_term, parse_turtle, serialize_ntriples
from .terms import IRI, Term

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INCONSISTENT = 3
EXIT_QUERY = 4


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str | None) -> Graph:
    text = _read(path)
    if fmt is None:
        fmt = "nt" if path.endswith(".nt") else "ttl"
    if fmt == "nt":
        return parse_ntriples(text)
    return parse_turtle(text).graph


def _term_arg(value: str) -> Term:
    if value.startswith(("<", "_:", '"')):
        return parse_term(value)
    return IRI(value)


def _print_report(report: rdfs.InconsistencyReport) -> None:
    for v in report.violations:
        triples = "; ".join(
            f"{format_term(t.subject)} {format_term(t.predicate)} {format_term(t.object)}" for t in v.triples
        )
        print(f"violation: {v.rule}: {triples}", file=sys.stderr)


def _report_json(report: rdfs.InconsistencyReport) -> list[dict]:
    return [
        {
            "rule": v.rule,
            "triples": [
                [format_term(t.subject), format_term(t.predicate), format_term(t.object)] for t in v.triples
            ],
        }
        for v in report.violations
    ]


def cmd_parse(args) -> int:
    graph = _load_graph(args.input, args.format)
    _write_out(serialize_ntriples(graph), args.out)
    return EXIT_OK


def cmd_infer(args) -> int:
    graph = _load_graph(args.input, args.format)
    if args.profile == "rdfs":
        closure = rdfs.saturate_rdfs(graph)
        report = closure.report
    else:
        closure, report = owl.saturate_owl(graph)
    emitted = graph_from_triples(closure.derived) if args.derived_only else closure.graph
    _write_out(serialize_ntriples(emitted), args.out)
    if report:
        _print_report(report)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_check(args) -> int:
    graph = _load_graph(args.input, args.format)
    consistent, report = owl.is_consistent(graph)
    competency_rows = []
    if args.competency:
        for name, q, regime in parse_competency(_read(args.competency)):
            try:
                answers = run_query(graph, q, regime)
            except QueryValidationError as exc:
                print(f"competency {name}: {exc}", file=sys.stderr)
                answers = []
            competency_rows.append((name, bool(answers)))
    if args.json:
        payload = {
            "consistent": consistent,
            "violations": _report_json(report),
            "competency": [{"name": n, "pass": ok} for n, ok in competency_rows],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print("consistent" if consistent else "inconsistent")
        for name, ok in competency_rows:
            print(f"{'PASS' if ok else 'FAIL'}\t{name}")
    if not consistent:
        _print_report(report)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_query(args) -> int:
    graph = _load_graph(args.input, args.format)
    q, file_regime = parse_query(_read(args.queryfile))
    regime = args.regime or file_regime
    bindings = run_query(graph, q, regime)
    variables = q.projection or tuple(sorted(set().union(*(p.variables() for p in q.patterns))))
    if args.tsv:
        lines = ["\t".join(f"?{v}" for v in variables)]
        for b in bindings:
            lines.append("\t".join(format_term(b[v]) for v in variables))
        _write_out("\n".join(lines) + "\n", args.out)
    else:
        rows = [{v: format_term(b[v]) for v in variables} for b in bindings]
        _write_out(json.dumps(rows, sort_keys=True) + "\n", args.out)
    return EXIT_OK


def cmd_reify(args) -> int:
    spec = reify.parse_table_spec(_read(args.spec))
    rows = reify.rows_from_csv(_read(args.csv))
    graph = reify.reify_table(rows, spec)
    _write_out(serialize_ntriples(graph), args.out)
    return EXIT_OK


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("KB_SEED")
    if env is not None:
        return int(env)
    return 0


def cmd_embed(args) -> int:
    graph = _load_graph(args.graph, args.format)
    if args.action == "train":
        seed = _resolve_seed(args)
        config = embeddings.TrainConfig(
            margin=args.margin,
            learning_rate=args.lr,
            epochs=args.epochs,
            negatives_per_positive=args.negatives,
            seed=seed,
        )
        model = embeddings.init_model(graph, args.dim, seed, norm=args.norm)
        losses = embeddings.train(model, graph, config)
        embeddings.save_model(model, args.model)
        if losses:
            print(f"epochs={len(losses)} first_loss={losses[0]:.6f} last_loss={losses[-1]:.6f}", file=sys.stderr)
        return EXIT_OK
    model = embeddings.load_model(args.model)
    if args.action == "eval":
        test_graph = parse_ntriples(_read(args.test))
        report = embeddings.evaluate(model, graph, test_graph.triples())
        payload = {
            "mean_rank": report.mean_rank,
            "mrr": report.mrr,
            "hits_at_1": report.hits_at_1,
            "hits_at_3": report.hits_at_3,
            "hits_at_10": report.hits_at_10,
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    # predict
    relation = _term_arg(args.relation)
    head = _term_arg(args.head) if args.head else None
    tail = _term_arg(args.tail) if args.tail else None
    ranked = embeddings.predict_links(
        model, graph, s=head, p=relation, o=tail, k=args.k, filtered=args.filtered
    )
    lines = [f"{format_term(term)}\t{value:.6f}" for term, value in ranked]
    _write_out("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgkit", description="Knowledge-graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a graph and emit canonical N-Triples")
    p.add_argument("input")
    p.add_argument("--format", choices=["nt", "ttl"], default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("infer", help="emit the RDFS or OWL closure")
    p.add_argument("input")
    p.add_argument("--format", choices=["nt", "ttl"], default=None)
    p.add_argument("--profile", choices=["rdfs", "owl"], default="rdfs")
    p.add_argument("--derived-only", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("check", help="consistency check, optionally with competency questions")
    p.add_argument("input")
    p.add_argument("--format", choices=["nt", "ttl"], default=None)
    p.add_argument("--competency", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("query", help="run a query file against a graph")
    p.add_argument("input")
    p.add_argument("queryfile")
    p.add_argument("--format", choices=["nt", "ttl"], default=None)
    p.add_argument("--regime", choices=list(REGIMES), default=None)
    p.add_argument("--tsv", action="store_true", help="TSV output instead of JSON")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("reify", help="turn a CSV into reified relation instances")
    p.add_argument("csv")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_reify)

    p = sub.add_parser("embed", help="train, evaluate or query a TransE model")
    p.add_argument("action", choices=["train", "eval", "predict"])
    p.add_argument("graph")
    p.add_argument("--format", choices=["nt", "ttl"], default=None)
    p.add_argument("--model", required=True)
    p.add_argument("--dim", type=int, default=20)
    p.add_argument("--margin", type=float, default=1.0)
    p.add_argument("--lr", type=float, default=0.01)
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--negatives", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="overrides KB_SEED; default 0")
    p.add_argument("--norm", choices=[embeddings.L1, embeddings.L2], default=embeddings.L1)
    p.add_argument("--test", default=None, help="held-out N-Triples file (eval)")
    p.add_argument("--head", default=None)
    p.add_argument("--tail", default=None)
    p.add_argument("--relation", default=None)
    p.add_argument("-k", type=int, default=10)
    p.add_argument("--filtered", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_embed)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        if args.command == "embed":
            if args.action == "eval" and not args.test:
                parser.error("embed eval requires --test")
            if args.action == "predict" and (args.relation is None or (args.head is None) == (args.tail is None)):
                print("embed predict needs --relation and exactly one of --head/--tail", file=sys.stderr)
                return EXIT_USAGE
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except QueryValidationError as exc:
        print(f"query error: {exc}", file=sys.stderr)
        return EXIT_QUERY
    except (ReifyError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
