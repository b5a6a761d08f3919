"""Command-line front end.

Results go to stdout as JSON (graph6 lines for ``enumerate``, DIMACS for
``cnf``); diagnostics go to stderr.  Exit codes: 0 answered, 1 scan
violation or gadget search exhausted, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from .catalog import (
    ENUM_MAX_N,
    ParseFailure,
    divergence_set,
    enumerate_graphs_small,
    enumerate_up_to,
    read_graph6_lines,
    scan_corpus,
)
from .cnf import DimacsError, decode_model, enumerate_sat, to_cnf, write_dimacs
from .engine import PLACEMENT_LIMIT, arrows_pair, find_mono, is_ramsey_minimal
from .graph import (
    NAMED_GRAPHS,
    Colour,
    Graph,
    GraphError,
    Pattern,
    format_colouring,
    named_graph,
    parse_colouring,
    parse_graph6,
    write_graph6,
)
from .gadgets import BUILTIN_NAMES, GadgetError, builtin_gadget, certify, dumps, loads, to_json
from .gadgets.builtin import VARIANTS
from .gadgets.scenario import scenario_arithmetic
from .gadgets.search import SEARCH_NAMES, GadgetNotFound, certify_search, lemma1_gadget_search, search_gadget

log = logging.getLogger("arrowkit")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load_graph(args) -> Graph:
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    src = getattr(args, "graph", None)
    if not src:
        raise UsageError("give a graph with --graph FILE|NAME or --g6 STRING")
    path = Path(src)
    if path.is_file():
        for line in path.read_text().splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                return parse_graph6(line)
        raise UsageError(f"{src}: no graph6 line found")
    try:
        return named_graph(src)
    except KeyError:
        raise UsageError(f"{src}: not a file and not a named graph ({', '.join(NAMED_GRAPHS)})") from None


def _stats(stats, timing: bool) -> dict:
    return {"nodes": stats.nodes, "mode": stats.mode, "millis": round(stats.millis, 3) if timing else None}


# commands -------------------------------------------------------------------

def cmd_arrow(args) -> int:
    g = load_graph(args)
    blue = args.blue_pattern or args.pattern
    res = arrows_pair(g, args.pattern, blue, workers=args.threads, placement_limit=args.placement_limit)
    out = {
        "graph": write_graph6(g),
        "pattern": str(args.pattern),
        "blue_pattern": str(blue),
        "verdict": res.verdict,
        "witness_file": None,
        "witness": None,
        "stats": _stats(res.stats, args.timing),
    }
    if res.witness is not None:
        text = format_colouring(res.witness)
        out["witness"] = text.splitlines()
        if args.witness_out:
            Path(args.witness_out).write_text(text)
            out["witness_file"] = args.witness_out
    _emit(out)
    return 0


def cmd_mono(args) -> int:
    g = load_graph(args)
    c = parse_colouring(g, Path(args.colouring).read_text())
    colour = Colour(args.colour) if args.colour else None
    hit = find_mono(c, args.pattern, colour)
    out = {"graph": write_graph6(g), "pattern": str(args.pattern), "found": hit is not None, "colour": None, "cliques": None}
    if hit:
        out["colour"] = hit[0].value
        out["cliques"] = [sorted(s) for s in hit[1]]
    _emit(out)
    return 0


def cmd_cnf(args) -> int:
    g = load_graph(args)
    f = to_cnf(g, args.pattern)
    text = write_dimacs(f)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}: {f.num_vars} vars, {len(f.clauses)} clauses", file=sys.stderr)
    if args.solve:
        model = enumerate_sat(f)
        out = {"graph": write_graph6(g), "pattern": str(args.pattern), "vars": f.num_vars,
               "clauses": len(f.clauses), "satisfiable": model is not None, "witness": None}
        if model is not None:
            out["witness"] = format_colouring(decode_model(g, model)).splitlines()
        _emit(out)
    elif not args.out:
        sys.stdout.write(text)
    return 0


def cmd_gadget_build(args) -> int:
    spec = builtin_gadget(args.name, args.n, args.variant)
    sys.stdout.write(dumps(spec) + "\n")
    return 0


def _searched(name: str, n: Optional[int]):
    if name == "lemma1":
        if n is None:
            raise UsageError("lemma1 needs --n")
        return lemma1_gadget_search(n)
    return search_gadget(name)


def cmd_gadget_search(args) -> int:
    try:
        spec = _searched(args.name, args.n)
    except GadgetNotFound as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(spec) + "\n")
    return 0


def cmd_gadget_verify(args) -> int:
    ext = None
    if args.spec:
        spec = loads(Path(args.spec).read_text())
    elif args.name in BUILTIN_NAMES:
        spec = builtin_gadget(args.name, args.n, args.variant)
    elif args.name:
        try:
            spec = _searched(args.name, args.n)
        except GadgetNotFound as exc:
            print(f"not found: {exc}", file=sys.stderr)
            return 1
    else:
        raise UsageError("give --name or --spec")
    if spec.name in SEARCH_NAMES:
        report, ext = certify_search(spec)
    else:
        report = certify(spec, args.n if args.n is not None else spec.n, args.variant if args.name else None)
    out = report.to_json(rows=not args.summary)
    out["spec"] = to_json(spec)
    if ext is not None:
        out["w_extension"] = [
            {"neighbourhood": list(c.neighbourhood), "case": c.case, "rule": c.rule, "ok": c.ok} for c in ext.cases
        ]
        out["passed"] = report.passed and ext.passed
    _emit(out)
    return 0


def cmd_scenario(args) -> int:
    hi = args.to if args.to is not None else args.n
    reports = [scenario_arithmetic(n).to_json() for n in range(args.n, hi + 1)]
    _emit(reports[0] if len(reports) == 1 else {"passed": all(r["passed"] for r in reports), "reports": reports})
    return 0


def cmd_enumerate(args) -> int:
    gen = enumerate_up_to(args.n) if args.up_to else enumerate_graphs_small(args.n)
    for g in gen:
        sys.stdout.write(write_graph6(g) + "\n")
    return 0


def _corpus(args):
    if args.corpus:
        if args.corpus == "-":
            return read_graph6_lines(sys.stdin)
        path = Path(args.corpus)
        if not path.is_file():
            raise UsageError(f"{args.corpus}: no such file")
        return read_graph6_lines(path.read_text().splitlines())
    if args.up_to:
        return enumerate_up_to(args.up_to)
    raise UsageError("give --corpus FILE or --up-to N")


def cmd_scan(args) -> int:
    records = errors = hits = 0
    violations = []
    for rec in scan_corpus(_corpus(args), args.target, args.cotarget, workers=args.threads, minimality=not args.no_minimality):
        if isinstance(rec, ParseFailure):
            errors += 1
            print(f"line {rec.line}: {rec.error}", file=sys.stderr)
            continue
        records += 1
        hits += rec.arrows_target
        if rec.violation:
            violations.append(rec.graph)
            print(f"violation: {rec.graph}", file=sys.stderr)
        sys.stdout.write(json.dumps(rec.to_json()) + "\n")
    summary = {"summary": {"records": records, "parse_errors": errors, "arrows_target": hits,
                           "violations": len(violations), "violating_graphs": violations}}
    sys.stdout.write(json.dumps(summary) + "\n")
    return 1 if violations else 0


def cmd_minimal(args) -> int:
    g = load_graph(args)
    rep = is_ramsey_minimal(g, args.pattern)
    _emit({
        "graph": write_graph6(g),
        "pattern": str(args.pattern),
        "is_ramsey": rep.is_ramsey,
        "is_minimal": rep.is_minimal,
        "critical_edges": [list(e) for e in rep.critical_edges],
        "isolated_vertices": rep.isolated_vertices,
    })
    return 0


def cmd_divergence(args) -> int:
    res = divergence_set(_corpus(args), args.p1, args.p2)
    for err in res.errors:
        print(f"line {err.line}: {err.error}", file=sys.stderr)
    _emit({"p1": str(args.p1), "p2": str(args.p2), "scanned": res.scanned, "parse_errors": len(res.errors), "members": res.members})
    return 0


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arrowkit", description="Ramsey arrowing queries, recolouring gadgets and small-graph catalogs.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--graph", help=f"graph6 file or named graph ({', '.join(NAMED_GRAPHS)})")
        p.add_argument("--g6", help="inline graph6 string")

    def pattern_arg(p, flag="--pattern", required=True):
        p.add_argument(flag, type=_pattern, required=required, help='clique union, e.g. "K4", "K4+K3", "K3+2K2"')

    p = sub.add_parser("arrow", help="decide G -> pattern")
    graph_args(p)
    pattern_arg(p)
    pattern_arg(p, "--blue-pattern", required=False)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--witness-out", help="write the avoiding colouring here")
    p.add_argument("--placement-limit", type=int, default=PLACEMENT_LIMIT)
    p.add_argument("--timing", action="store_true", help="report wall time (output no longer byte-reproducible)")
    p.set_defaults(func=cmd_arrow)

    p = sub.add_parser("mono", help="find a monochromatic pattern copy in a colouring")
    graph_args(p)
    pattern_arg(p)
    p.add_argument("--colouring", required=True, help="file of 'u v R|B' lines")
    p.add_argument("--colour", choices=["R", "B"])
    p.set_defaults(func=cmd_mono)

    p = sub.add_parser("cnf", help="DIMACS encoding of 'some colouring avoids the pattern'")
    graph_args(p)
    pattern_arg(p)
    p.add_argument("--out", help="write DIMACS here instead of stdout")
    p.add_argument("--solve", action="store_true", help="decide by enumeration and print JSON")
    p.set_defaults(func=cmd_cnf)

    p = sub.add_parser("gadget-build", help="print a transcribed gadget spec")
    p.add_argument("--name", required=True, choices=BUILTIN_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="disjoint")
    p.set_defaults(func=cmd_gadget_build)

    p = sub.add_parser("gadget-search", help="search for a certified recolouring")
    p.add_argument("--name", required=True, choices=("lemma1",) + SEARCH_NAMES)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_gadget_search)

    p = sub.add_parser("gadget-verify", help="case analysis report for a gadget")
    p.add_argument("--name", choices=BUILTIN_NAMES + ("lemma1",) + SEARCH_NAMES)
    p.add_argument("--spec", help="gadget spec JSON file")
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="disjoint")
    p.add_argument("--summary", action="store_true", help="omit per-profile rows")
    p.set_defaults(func=cmd_gadget_verify)

    p = sub.add_parser("scenario", help="set-size preconditions of the big lemma's invocations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--to", type=int, help="check every n up to this value")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("enumerate", help=f"graph6 list of all graphs on n <= {ENUM_MAX_N} vertices up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--up-to", action="store_true", help="all orders 1..n")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("scan", help="scan a graph6 corpus for target/cotarget arrowing")
    p.add_argument("--corpus", help="graph6 file, '-' for stdin")
    p.add_argument("--up-to", type=int, help="scan the built-in enumeration instead")
    pattern_arg(p, "--target")
    pattern_arg(p, "--cotarget")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--no-minimality", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("minimal", help="Ramsey-minimality of a graph")
    graph_args(p)
    pattern_arg(p)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("divergence", help="corpus graphs minimal for one pattern and not Ramsey for the other")
    p.add_argument("--corpus")
    p.add_argument("--up-to", type=int)
    pattern_arg(p, "--p1")
    pattern_arg(p, "--p2")
    p.set_defaults(func=cmd_divergence)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if getattr(args, "threads", 1) < 1:
        ap.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, GadgetError, DimacsError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
