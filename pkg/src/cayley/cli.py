"""Command-line front end.

Subcommands: ``check`` (structural and per-vertex predicates),
``classify`` (full class report), ``synth`` (graph -> table),
``build`` (table -> graph), ``roundtrip`` (table -> graph -> table).
All output is byte-deterministic for identical inputs and flags.

Exit codes: 0 success, 1 precondition failure, 2 parse error, 3 I/O error.
A negative classification is data, not a failure: ``classify`` exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import axiom_report, closure, parse_table, serialize_table, subtable, table_equal
from .build import cayley_graph, default_labeling
from .classify import classify_all
from .errors import CayleyError, EmptyGraphError, FormatError, PreconditionFailed
from .graph import Graph, parse_graph, serialize_graph
from .props import (
    is_1_propagating_vertex,
    is_chain_propagating_vertex,
    is_co_deterministic,
    is_deterministic,
    is_locally_commutative,
    is_loop_propagating,
    is_propagating_vertex,
    structural_report,
)
from .synthesis import chain_operation, edge_operation, path_operation

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2
EXIT_IO = 3


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_graph(path) -> Graph:
    return parse_graph(_read(path))


def _yesno(flag) -> str:
    return "yes" if flag else "no"


def _sorted_list(values):
    return " ".join(sorted(values)) if values else "-"


def _structural_json(report):
    out = {}
    for name, value in vars(report).items():
        out[name] = sorted(value) if isinstance(value, frozenset) else value
    return out


def _table_json(table):
    return {"elements": list(table.carrier), "rows": [list(r) for r in table.rows]}


def _vertex_flags(g, report, v):
    flags = {
        "out_simple": v in report.out_simple_vertices,
        "in_simple": v in report.in_simple_vertices,
        "locally_commutative": is_locally_commutative(g, v),
        "loop_propagating": is_loop_propagating(g, v),
        "one_propagating": is_1_propagating_vertex(g, v),
    }
    if is_deterministic(g):
        flags["propagating"] = is_propagating_vertex(g, v)
        if is_co_deterministic(g):
            flags["chain_propagating"] = is_chain_propagating_vertex(g, v)
        else:
            flags["chain_propagating"] = "n/a: not co-deterministic"
    else:
        flags["propagating"] = "n/a: not deterministic"
        flags["chain_propagating"] = "n/a: not deterministic"
    return flags


def cmd_check(args) -> int:
    g = _load_graph(args.input)
    report = structural_report(g)
    vertex_rows = [(v, _vertex_flags(g, report, v)) for v in g.sorted_vertices]
    if args.format == "json":
        payload = {
            "structural": _structural_json(report),
            "vertices": {
                v: {k: f for k, f in flags.items()} for v, flags in vertex_rows
            },
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    print(f"vertices: {_sorted_list(g.vertices)}")
    print(f"alphabet: {_sorted_list(g.alphabet)}")
    for name in (
        "deterministic",
        "co_deterministic",
        "simple",
        "source_complete",
        "target_complete",
        "connected",
        "strongly_connected",
    ):
        print(f"{name.replace('_', '-')}: {_yesno(getattr(report, name))}")
    for name in ("roots", "co_roots", "one_roots", "one_coroots"):
        print(f"{name.replace('_', '-')}: {_sorted_list(getattr(report, name))}")
    for v, flags in vertex_rows:
        parts = []
        for key, value in flags.items():
            shown = _yesno(value) if isinstance(value, bool) else str(value)
            parts.append(f"{key.replace('_', '-')}={shown}")
        print(f"vertex {v}: " + " ".join(parts))
    return EXIT_OK


def _verdict_json(verdict):
    out = {"class": verdict.class_id, "holds": verdict.holds}
    if verdict.witness is not None:
        w = {}
        if verdict.witness.vertex is not None:
            w["vertex"] = verdict.witness.vertex
        if verdict.witness.injection is not None:
            w["injection"] = dict(sorted(verdict.witness.injection.items()))
        if verdict.witness.table is not None:
            w["table"] = _table_json(verdict.witness.table)
        if verdict.witness.subflags is not None:
            w["subflags"] = verdict.witness.subflags
        out["witness"] = w
    else:
        out["witness"] = None
    out["reason"] = verdict.reason
    return out


def cmd_classify(args) -> int:
    g = _load_graph(args.input)
    report = classify_all(g, max_candidates=args.search_cap)
    if args.format == "json":
        payload = {
            "structural": _structural_json(report.structural),
            "verdicts": [_verdict_json(v) for v in report.verdicts],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return EXIT_OK
    for verdict in report.verdicts:
        if verdict.holds:
            notes = []
            w = verdict.witness
            if w.vertex is not None:
                notes.append(f"vertex {w.vertex}")
            if w.injection is not None:
                pairs = ",".join(f"{a}={v}" for a, v in sorted(w.injection.items()))
                notes.append(f"injection {pairs}")
            if w.subflags is not None:
                on = [k for k, v in sorted(w.subflags.items()) if v]
                notes.append("flags " + (",".join(on) if on else "-"))
            detail = "; ".join(notes)
            print(f"{verdict.class_id}: YES ({detail})")
        elif verdict.holds is None:
            print(f"{verdict.class_id}: UNKNOWN ({verdict.reason})")
        else:
            print(f"{verdict.class_id}: NO ({verdict.reason})")
    return EXIT_OK


def cmd_synth(args) -> int:
    g = _load_graph(args.input)
    ops = {"edge": edge_operation, "path": path_operation, "chain": chain_operation}
    table = ops[args.mode](g, args.vertex)
    _write(args.output, serialize_table(table))
    return EXIT_OK


def _parse_generators(raw_items):
    gens = []
    for item in raw_items:
        gens.extend(x for x in item.split(",") if x)
    return gens


def _parse_labels(raw_items):
    if not raw_items:
        return None
    labeling = {}
    for item in raw_items:
        for pair in item.split(","):
            if not pair:
                continue
            gen, sep, label = pair.partition("=")
            if not sep or not gen or not label:
                raise FormatError(f"expected generator=label, got {pair!r}")
            labeling[gen] = label
    return labeling


def cmd_build(args) -> int:
    table = parse_table(_read(args.input))
    generators = _parse_generators(args.generators)
    labeling = _parse_labels(args.labels)
    g = cayley_graph(table, generators, labeling)
    _write(args.output, serialize_graph(g))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    table = parse_table(_read(args.input))
    generators = _parse_generators(args.generators)
    rep = axiom_report(table)
    if rep.identity is None:
        raise PreconditionFailed("roundtrip requires a table with an identity")
    generated = closure(table, generators, "monoid")
    restricted = subtable(table, generated)
    g = cayley_graph(restricted, generators, default_labeling(generators))
    resynthesized = path_operation(g, rep.identity)
    if table_equal(resynthesized, restricted):
        print(f"equal on {{{', '.join(sorted(generated))}}}")
        return EXIT_OK
    print("tables differ")
    return EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley",
        description="Recognize and synthesize Cayley graphs of finite algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="structural report for a .lgr graph")
    p_check.add_argument("input")
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_classify = sub.add_parser("classify", help="full class report for a .lgr graph")
    p_classify.add_argument("input")
    p_classify.add_argument("--format", choices=("text", "json"), default="text")
    p_classify.add_argument("--search-cap", type=int, default=10**6)
    p_classify.set_defaults(func=cmd_classify)

    p_synth = sub.add_parser("synth", help="synthesize a .mag table from a graph")
    p_synth.add_argument("input")
    p_synth.add_argument("--vertex", required=True)
    p_synth.add_argument("--mode", choices=("edge", "path", "chain"), required=True)
    p_synth.add_argument("-o", "--output", default="-")
    p_synth.set_defaults(func=cmd_synth)

    p_build = sub.add_parser("build", help="build a .lgr graph from a .mag table")
    p_build.add_argument("input")
    p_build.add_argument("--generators", required=True, nargs="+")
    p_build.add_argument("--labels", nargs="+")
    p_build.add_argument("-o", "--output", default="-")
    p_build.set_defaults(func=cmd_build)

    p_round = sub.add_parser(
        "roundtrip", help="build from a table, re-synthesize, compare"
    )
    p_round.add_argument("input")
    p_round.add_argument("--generators", required=True, nargs="+")
    p_round.set_defaults(func=cmd_roundtrip)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, EmptyGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CayleyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
