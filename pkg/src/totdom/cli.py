"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (capacity, bad parameters,
malformed input, failed verification), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import closed_forms, engine, equivalence
from .graph import FamilySpec, Graph, make_family, parse_edge_list, parse_graph6, write_graph6
from .polynomial import Polynomial, analyze_sequence, count_distinct_real_roots, is_all_real_rooted

SCHEMA_VERSION = 1


class DomainError(Exception):
    pass


def _emit(out: TextIO, payload: dict) -> None:
    out.write(json.dumps({"v": SCHEMA_VERSION, **payload}, separators=(",", ":")) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}") from None


def _read_lines(path: str) -> list[str]:
    return _read_text(path).splitlines()


def _add_graph_inputs(p: argparse.ArgumentParser, required: bool = True) -> argparse._MutuallyExclusiveGroup:
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--g6", metavar="S", help="graph6 string")
    grp.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' then 'u v' lines)")
    grp.add_argument("--spec", metavar="FAMILY", help="family spec such as lollipop:m=6,n=1")
    return grp


def _graph_from(args: argparse.Namespace) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.edges is not None:
        return parse_edge_list(_read_text(args.edges))
    return make_family(FamilySpec.parse(args.spec))


def _poly_payload(p: Polynomial) -> dict:
    return {"poly": p.to_json(), "text": str(p)}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    g = _graph_from(args)
    if args.reduce:
        h, trace = engine.simplify(g)
        p = engine.brute_force_tdp(h, threads=args.threads)
    else:
        trace = None
        p = engine.brute_force_tdp(g, threads=args.threads)
    if args.json:
        payload = {"graph6": write_graph6(g), "n": g.n, **_poly_payload(p), "gamma_t": p.low_degree()}
        if trace is not None:
            payload["deleted_edges"] = len(trace)
        _emit(out, payload)
    else:
        out.write(f"{p}\n")
    return 0


def cmd_family(args: argparse.Namespace, out: TextIO) -> int:
    spec = FamilySpec.parse(args.spec)
    g = make_family(spec)
    formula = closed_forms.family_poly(spec) if args.poly else None
    if args.poly and formula is None:
        formula = engine.brute_force_tdp(g, threads=args.threads)
    if args.json:
        payload: dict = {"spec": str(spec), "n": g.n, "m": g.num_edges(), "graph6": write_graph6(g)}
        if formula is not None:
            payload.update(_poly_payload(formula))
        _emit(out, payload)
        return 0
    if args.g6_out:
        out.write(write_graph6(g) + "\n")
    if formula is not None:
        out.write(f"{formula}\n")
    if not args.g6_out and formula is None:
        out.write(f"{spec}: order {g.n}, {g.num_edges()} edges\n")
        out.write(write_graph6(g) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    spec = FamilySpec.parse(args.spec)
    g, formula, oracle = closed_forms.verify_family(spec, args.max_order)
    if formula is None:
        raise DomainError(f"no closed form for family {spec.kind!r}")
    status = "SKIP" if oracle is None else ("PASS" if formula == oracle else "FAIL")
    if args.json:
        _emit(out, {"spec": str(spec), "n": g.n, "formula": formula.to_json(),
                    "oracle": None if oracle is None else oracle.to_json(), "status": status})
    else:
        out.write(f"{spec} (order {g.n})\n")
        out.write(f"  formula: {formula}\n")
        if oracle is None:
            out.write(f"  oracle skipped: order {g.n} > --max-order {args.max_order}\n")
        else:
            out.write(f"  oracle:  {oracle}\n")
        out.write(f"formula == oracle: {status}\n")
    return 1 if status == "FAIL" else 0


def _catalog_lines(args: argparse.Namespace) -> list[str]:
    if args.bundled is not None:
        return equivalence.bundled_catalog(args.bundled, args.scope)
    return _read_lines(args.catalog)


def cmd_classes(args: argparse.Namespace, out: TextIO) -> int:
    report = equivalence.partition_catalog(_catalog_lines(args), scope=args.scope, threads=args.threads)
    if args.out:
        with open(args.out, "w") as fh:
            report.write_jsonl(fh)
    if args.json or not args.out:
        if args.json:
            report.write_jsonl(out)
        else:
            h = report.header()
            out.write(f"order {h['order']} ({h['scope']}): {h['total']} graphs, "
                      f"{h['classes']} classes, {h['singletons']} D_t-unique\n")
            for c in report.classes:
                if c.size > 1:
                    out.write(f"  [{c.size}] {Polynomial(c.key)}: {' '.join(c.members)}\n")
    return 0


def cmd_unique(args: argparse.Namespace, out: TextIO) -> int:
    g = _graph_from(args)
    res = equivalence.is_dt_unique(g, _catalog_lines(args), scope=args.scope)
    if args.json:
        _emit(out, {"graph6": write_graph6(g), "unique": res.unique, "witnesses": res.witnesses,
                    "found_in_catalog": res.found_in_catalog, "self_match": res.self_match,
                    "scope": res.scope})
    else:
        out.write(("D_t-unique" if res.unique else "not D_t-unique") + f" within {res.scope} catalog\n")
        for w in res.witnesses:
            out.write(f"  {w}\n")
    return 0


def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    if args.poly is not None:
        try:
            data = json.loads(args.poly)
            p = Polynomial.from_json(data)
        except (ValueError, TypeError):
            raise DomainError(f"--poly expects a JSON integer array, got {args.poly!r}") from None
    else:
        p = engine.brute_force_tdp(_graph_from(args), threads=args.threads)
    v = analyze_sequence(p)
    real = None if not p else count_distinct_real_roots(p)
    all_real = None if not p else is_all_real_rooted(p)
    payload = {
        **_poly_payload(p),
        "unimodal": v.unimodal, "unimodal_full": v.unimodal_full, "mode": v.mode,
        "log_concave": v.log_concave, "symmetric": v.symmetric,
        "first_violation": v.first_violation, "lc_violation": v.lc_violation,
        "distinct_real_roots": real, "all_real_rooted": all_real,
    }
    if args.json:
        _emit(out, payload)
    else:
        out.write(f"{p}\n")
        for k in ("unimodal", "mode", "log_concave", "symmetric", "first_violation",
                  "distinct_real_roots", "all_real_rooted"):
            out.write(f"  {k}: {payload[k]}\n")
    return 0


def cmd_simplify(args: argparse.Namespace, out: TextIO) -> int:
    g = _graph_from(args)
    h, trace = engine.simplify(g, certify=args.certify)
    if args.json:
        _emit(out, {"graph6": write_graph6(g), "reduced": write_graph6(h),
                    "trace": [{"rule": s.rule, "edge": list(s.target), "certified": s.certified}
                              for s in trace.steps]})
    else:
        out.write(write_graph6(h) + "\n")
        for s in trace.steps:
            mark = " (certified)" if s.certified else ""
            out.write(f"  delete {s.target[0]}-{s.target[1]} by {s.rule}{mark}\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totdom", description="Total domination polynomials of graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, metavar="N", help="worker processes (0 = auto)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", parents=[common], help="D_t(G, x) by exhaustive enumeration")
    _add_graph_inputs(p)
    p.add_argument("--reduce", action="store_true", help="delete irrelevant edges first")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", parents=[common], help="build a family member")
    p.add_argument("--spec", required=True, metavar="FAMILY")
    p.add_argument("--poly", action="store_true", help="print its total domination polynomial")
    p.add_argument("--g6-out", action="store_true", help="print its graph6 string")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="check a closed form against enumeration")
    p.add_argument("--spec", required=True, metavar="FAMILY")
    p.add_argument("--max-order", type=int, default=11, metavar="N")
    p.set_defaults(func=cmd_verify)

    def catalog_args(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--catalog", metavar="FILE", help="graph6 file, one graph per line")
        src.add_argument("--bundled", type=int, metavar="ORDER", help="bundled catalog of order 1..7")
        p.add_argument("--scope", choices=equivalence.SCOPES, default="connected")

    p = sub.add_parser("classes", parents=[common], help="partition a catalog into D_t-classes")
    catalog_args(p)
    p.add_argument("--out", metavar="FILE.jsonl")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("unique", parents=[common], help="D_t-uniqueness within a catalog")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--g6", metavar="S")
    grp.add_argument("--spec", metavar="FAMILY")
    p.set_defaults(edges=None)
    catalog_args(p)
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("analyze", parents=[common], help="unimodality, log-concavity, real roots")
    grp = _add_graph_inputs(p, required=False)
    grp.add_argument("--poly", metavar="JSON", help="dense ascending coefficient array")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simplify", parents=[common], help="delete irrelevant edges, with trace")
    _add_graph_inputs(p)
    p.add_argument("--certify", action="store_true", help="check every deletion by enumeration")
    p.set_defaults(func=cmd_simplify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "threads", 1) < 0:
        parser.print_usage(err)
        err.write("totdom: error: --threads must be >= 0\n")
        return 2
    if args.verb == "analyze" and args.poly is None and args.g6 is None and args.edges is None and args.spec is None:
        parser.print_usage(err)
        err.write("totdom analyze: error: one of --poly, --g6, --edges, --spec is required\n")
        return 2
    try:
        return args.func(args, out)
    except (DomainError, ValueError, AssertionError) as exc:
        err.write(f"totdom {args.verb}: error: {exc}\n")
        return 1


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
