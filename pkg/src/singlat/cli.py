"""Command-line interface.

Exit status: 0 on success, 1 on domain errors (one-line diagnostic on
stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import report as rpt
from .chimin import min_chi
from .cycles import (
    canonical_cycle,
    dual_cycle,
    enumerate_antinef,
    format_cycle,
    is_numerically_gorenstein,
    parse_cycle,
)
from .errors import SinglatError
from .graph import ResolutionGraph, definiteness, is_minimal_good, parse_graph
from .laufer import artin_cycle
from .pathbound import path_gamma, path_value
from .splice import leading_forms, splice_diagram

STATE_LIMIT_ENV = "SINGLAT_STATE_LIMIT"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singlat",
        description="Exact invariants of resolution graphs of normal surface "
        "singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, dot=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, metavar="FILE",
                       help="graph file, or '-' for stdin")
        formats = ["text", "json"] + (["dot"] if dot else [])
        p.add_argument("--format", choices=formats, default="text")
        return p

    p = add("validate", "parse and validate a graph, print a summary", dot=True)
    p.add_argument("--cycle", metavar="CYCLE",
                   help="annotate DOT vertices with this cycle literal")
    add("invariants", "determinant, definiteness, Artin and canonical cycles, min chi")
    add("zmin", "Artin cycle with its computation sequence")
    add("zk", "canonical cycle")
    p = add("dual", "dual cycle of one vertex")
    p.add_argument("--vertex", required=True, metavar="ID")
    add("minchi", "certified global minimum of chi")
    p = add("path", "minimum-cost monotone sequence bound")
    p.add_argument("--target", metavar="zmin|zk|CYCLE",
                   help="end cycle; omit to minimize over targets above floor(Z_K)")
    p.add_argument("--cap", metavar="CYCLE",
                   help="search cap when the canonical cycle is not integral effective")
    p = add("antinef", "enumerate anti-nef cycles with fixed coefficients")
    p.add_argument("--fix", action="append", required=True, metavar="ID=N",
                   help="required coefficient, repeatable")
    p = add("splice", "splice diagram, edge determinants, semigroup condition",
            dot=True)
    p.add_argument("--equations", action="store_true",
                   help="also emit the leading forms of the splice equations")
    p = add("check-kodaira", "attach a (-1)-vertex and test semidefiniteness")
    p.add_argument("--attach", required=True, metavar="ID")
    p = add("report", "full invariant report")
    p.add_argument("--attach", metavar="ID",
                   help="also include the (-1)-extension check at this vertex")
    p.add_argument("--cap", metavar="CYCLE",
                   help="path search cap for non numerically Gorenstein graphs")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _state_limit() -> int | None:
    raw = os.environ.get(STATE_LIMIT_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise SinglatError(f"invalid {STATE_LIMIT_ENV} value {raw!r}") from None


def _kv_text(pairs) -> str:
    return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _cmd_validate(g: ResolutionGraph, args) -> str:
    if args.format == "dot":
        cycle = parse_cycle(g, args.cycle) if args.cycle else None
        return rpt.graph_dot(g, cycle)
    d = definiteness(g)
    mg = is_minimal_good(g)
    if args.format == "json":
        return rpt.dump_json({
            "graph": rpt.graph_json(g),
            "vertices": g.n,
            "edges": len(g.edges),
            "negative_definite": d.negative_definite,
            "negative_semidefinite": d.negative_semidefinite,
            "det_neg_m": d.det_neg_m,
            "minimal_good": mg.minimal,
            "contractible": list(mg.contractible),
        })
    return _kv_text([
        ("vertices", g.n),
        ("edges", len(g.edges)),
        ("negative_definite", _bool(d.negative_definite)),
        ("negative_semidefinite", _bool(d.negative_semidefinite)),
        ("det_neg_m", d.det_neg_m),
        ("minimal_good", _bool(mg.minimal)),
        ("contractible", ",".join(mg.contractible)),
    ])


def _cmd_invariants(g: ResolutionGraph, args) -> str:
    d = definiteness(g)
    z_min, _ = artin_cycle(g)
    z_k = canonical_cycle(g)
    mc = min_chi(g)
    if args.format == "json":
        return rpt.dump_json({
            "det_neg_m": d.det_neg_m,
            "negative_definite": d.negative_definite,
            "negative_semidefinite": d.negative_semidefinite,
            "numerically_gorenstein": is_numerically_gorenstein(g),
            "z_min": rpt.cycle_json(g, z_min),
            "z_k": rpt.cycle_json(g, z_k),
            "min_chi": mc.min_chi,
            "arithmetic_genus": 1 - mc.min_chi,
        })
    return _kv_text([
        ("det_neg_m", d.det_neg_m),
        ("negative_definite", _bool(d.negative_definite)),
        ("negative_semidefinite", _bool(d.negative_semidefinite)),
        ("numerically_gorenstein", _bool(is_numerically_gorenstein(g))),
        ("z_min", format_cycle(g, z_min)),
        ("z_k", format_cycle(g, z_k)),
        ("min_chi", mc.min_chi),
        ("arithmetic_genus", 1 - mc.min_chi),
    ])


def _cmd_zmin(g: ResolutionGraph, args) -> str:
    z, seq = artin_cycle(g)
    if args.format == "json":
        return rpt.dump_json({
            "z_min": rpt.cycle_json(g, z),
            "cost": seq.cost,
            "simple_jumps": seq.simple_jumps,
            "sequence": rpt.sequence_json(seq),
        })
    return _kv_text([
        ("z_min", format_cycle(g, z)),
        ("cost", seq.cost),
        ("simple_jumps", seq.simple_jumps),
        ("sequence", seq.describe()),
    ])


def _cmd_zk(g: ResolutionGraph, args) -> str:
    z = canonical_cycle(g)
    if args.format == "json":
        return rpt.dump_json({"z_k": rpt.cycle_json(g, z)})
    return _kv_text([("z_k", format_cycle(g, z))])


def _cmd_dual(g: ResolutionGraph, args) -> str:
    c = dual_cycle(g, args.vertex)
    if args.format == "json":
        return rpt.dump_json({"vertex": args.vertex, "dual": rpt.cycle_json(g, c)})
    return _kv_text([("vertex", args.vertex), ("dual", format_cycle(g, c))])


def _cmd_minchi(g: ResolutionGraph, args) -> str:
    mc = min_chi(g)
    if args.format == "json":
        return rpt.dump_json({
            "min_chi": mc.min_chi,
            "minimizer": rpt.cycle_json(g, mc.minimizer),
            "candidates_scanned": mc.candidates_scanned,
        })
    return _kv_text([
        ("min_chi", mc.min_chi),
        ("minimizer", format_cycle(g, mc.minimizer)),
        ("candidates_scanned", mc.candidates_scanned),
    ])


def _cmd_path(g: ResolutionGraph, args) -> str:
    limit = _state_limit()
    cap = parse_cycle(g, args.cap) if args.cap else None
    if args.target is None:
        result = path_gamma(g, cap, limit)
    else:
        if args.target == "zmin":
            target, _ = artin_cycle(g)
        elif args.target == "zk":
            target = canonical_cycle(g)
        else:
            target = parse_cycle(g, args.target)
        result = path_value(g, target, limit)
    if args.format == "json":
        return rpt.dump_json(rpt.path_json(g, result))
    return _kv_text([
        ("value", result.value),
        ("end_cycle", format_cycle(g, result.end_cycle)),
        ("witness", result.witness.describe()),
        ("states_expanded", result.states_expanded),
    ])


def _cmd_antinef(g: ResolutionGraph, args) -> str:
    constraints = []
    for item in args.fix:
        vid, sep, value = item.partition("=")
        if not sep:
            raise SinglatError(f"invalid --fix argument {item!r}: expected ID=N")
        try:
            constraints.append((vid.strip(), int(value)))
        except ValueError:
            raise SinglatError(f"invalid coefficient in --fix {item!r}") from None
    found = enumerate_antinef(g, constraints)
    if args.format == "json":
        return rpt.dump_json({
            "constraints": [
                {"vertex": v, "coefficient": r} for v, r in constraints
            ],
            "count": len(found),
            "cycles": [rpt.cycle_json(g, c) for c in found],
        })
    pairs = [("count", len(found))]
    pairs += [(f"cycle[{i}]", format_cycle(g, c)) for i, c in enumerate(found)]
    return _kv_text(pairs)


def _cmd_splice(g: ResolutionGraph, args) -> str:
    sd = splice_diagram(g)
    if args.format == "dot":
        return rpt.splice_dot(sd)
    sr = rpt.build_splice_report(g)
    forms = leading_forms(sd) if args.equations else None
    sr = rpt.SpliceReport(
        diagram=sr.diagram,
        edge_determinants=sr.edge_determinants,
        semigroup=sr.semigroup,
        forms=forms,
        integral_homology_sphere=sr.integral_homology_sphere,
    )
    if args.format == "json":
        return rpt.dump_json(rpt.splice_json(sr))
    return "\n".join(rpt.splice_text(g, sr)) + "\n"


def _cmd_check_kodaira(g: ResolutionGraph, args) -> str:
    result = rpt.check_kodaira(g, args.attach)
    if args.format == "json":
        return rpt.dump_json({
            "attach": result.attach,
            "semidefinite": result.semidefinite,
        })
    return _kv_text([
        ("attach", result.attach),
        ("semidefinite", _bool(result.semidefinite)),
    ])


def _cmd_report(g: ResolutionGraph, args) -> str:
    cap = parse_cycle(g, args.cap) if args.cap else None
    rep = rpt.build_report(g, attach=args.attach, cap=cap, state_limit=_state_limit())
    if args.format == "json":
        return rpt.dump_json(rpt.report_json(rep))
    return rpt.report_text(rep)


_COMMANDS = {
    "validate": _cmd_validate,
    "invariants": _cmd_invariants,
    "zmin": _cmd_zmin,
    "zk": _cmd_zk,
    "dual": _cmd_dual,
    "minchi": _cmd_minchi,
    "path": _cmd_path,
    "antinef": _cmd_antinef,
    "splice": _cmd_splice,
    "check-kodaira": _cmd_check_kodaira,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        text = _read_input(args.input)
        graph = parse_graph(text)
        output = _COMMANDS[args.command](graph, args)
    except SinglatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
