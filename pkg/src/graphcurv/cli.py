"""Command-line interface.

Subcommands: gen, dist, curvature, verify, game, report.  Graph input is
either a file in the edge-list format or a generator spec like "path:5" or
"gnp:20,1/4".  Exact rationals serialize as "p/q" strings with a sibling
float field.  Output is byte-identical for identical configurations.

Exit codes: 0 ok, 2 input error, 3 disconnected graph, 4 inconsistent
curvature system, 5 hard verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .curvature import (
    CurvatureSolution,
    SolveStatus,
    solve_curvature,
    solve_curvature_float,
    transitive_oracle,
)
from .errors import (
    DisconnectedGraphError,
    GraphInputError,
    HardVerificationError,
    InconsistentSystemError,
    NumericallySingularError,
)
from .game import game_value, game_vs_curvature
from .graphs import Graph, parse_edge_list, parse_generator_spec, serialize
from .metric import DistanceMatrix, apsp, eccentricities, row_sums
from .rationals import rational_str, to_float
from .verifier import measure_battery, search_lower_violation, verify_minimax

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3
EXIT_INCONSISTENT = 4
EXIT_VERIFICATION = 5


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DisconnectedGraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (InconsistentSystemError, NumericallySingularError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except HardVerificationError as e:
        print(f"hard verification failure: {e}", file=sys.stderr)
        return EXIT_VERIFICATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcurv",
        description="Curvature vectors of finite graphs via the distance matrix",
    )
    parser.add_argument("--version", action="version", version=f"graphcurv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, fn, formats=("json", "csv", "table")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True,
                       help="graph file path or generator spec like 'path:5' or 'gnp:20,1/4'")
        p.add_argument("--seed", type=int, default=0, help="seed for generators and sampling")
        if formats:
            p.add_argument("--format", choices=formats, default="json")
        p.set_defaults(func=fn)
        return p

    add("gen", "generate a graph and print its edge list", _cmd_gen, formats=None)
    add("dist", "print the all-pairs distance matrix", _cmd_dist)
    pc = add("curvature", "solve D w = n 1 and report the curvature bound", _cmd_curvature)
    mode = pc.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const="exact")
    mode.add_argument("--float", dest="mode", action="store_const", const="float")
    pc.set_defaults(mode="exact")
    pv = add("verify", "check the minimax sandwich over a measure battery", _cmd_verify,
             formats=("json", "table"))
    pv.add_argument("--samples", type=int, default=100, help="random measures in the battery")
    add("game", "solve the zero-sum game on D and compare with K", _cmd_game,
        formats=("json", "table"))
    pr = add("report", "full pipeline: dist, curvature, verify, game", _cmd_report,
             formats=("json", "table"))
    pr.add_argument("--samples", type=int, default=100, help="random measures in the battery")
    return parser


def _load_graph(args) -> Graph:
    src = args.input
    if ":" in src:
        return parse_generator_spec(src, seed=args.seed)
    if not os.path.exists(src):
        raise GraphInputError(f"no such file: {src}")
    with open(src, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _connected_apsp(g: Graph) -> DistanceMatrix:
    # apsp refuses disconnected graphs with a named unreachable pair
    return apsp(g)


# ---------------------------------------------------------------------------
# rational rendering


def _rat(x: Fraction | None) -> str | None:
    return None if x is None else rational_str(x)


def _ratf(x: Fraction | None) -> float | None:
    return None if x is None else to_float(x)


def _emit(doc: dict, fmt: str, table_renderer=None) -> int:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    elif fmt == "table" and table_renderer is not None:
        table_renderer(doc)
    else:
        raise GraphInputError(f"unsupported format {fmt!r} for this command")
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args) -> int:
    g = _load_graph(args)
    sys.stdout.write(serialize(g))
    return EXIT_OK


def _cmd_dist(args) -> int:
    g = _load_graph(args)
    D = _connected_apsp(g)
    rows = D.row_lists()
    if args.format == "csv":
        for row in rows:
            print(",".join(str(x) for x in row))
        return EXIT_OK
    if args.format == "table":
        width = max(len(str(x)) for row in rows for x in row)
        for row in rows:
            print(" ".join(str(x).rjust(width) for x in row))
        return EXIT_OK
    doc = {"command": "dist", "input": args.input, "n": g.n, "m": g.m, "distances": rows}
    return _emit(doc, "json")


def _curvature_doc(D: DistanceMatrix, sol: CurvatureSolution) -> dict:
    doc = {
        "status": sol.status.value,
        "nullity": sol.nullity,
        "warnings": list(sol.warnings),
    }
    if sol.status is not SolveStatus.INCONSISTENT:
        doc.update({
            "w": [rational_str(x) for x in sol.w],
            "w_float": [to_float(x) for x in sol.w],
            "l1_norm": _rat(sol.l1_norm),
            "l1_norm_float": _ratf(sol.l1_norm),
            "bound_K": _rat(sol.bound_K),
            "bound_K_float": _ratf(sol.bound_K),
            "min_entry": _rat(sol.min_entry),
            "min_entry_float": _ratf(sol.min_entry),
            "nonneg": sol.nonneg,
        })
    oracle = transitive_oracle(D)
    doc["transitive_oracle_K"] = _rat(oracle)
    return doc


def _cmd_curvature(args) -> int:
    g = _load_graph(args)
    D = _connected_apsp(g)
    if args.mode == "float":
        fsol = solve_curvature_float(D)
        if args.format == "csv":
            print("vertex,w_float")
            for i, x in enumerate(fsol.w.tolist()):
                print(f"{i},{x!r}")
            return EXIT_OK
        doc = {
            "command": "curvature", "input": args.input, "n": g.n, "m": g.m, "mode": "float",
            "w_float": fsol.w.tolist(),
            "residual_inf": fsol.residual_inf,
            "condition_hint": fsol.condition_hint,
        }
        return _emit(doc, args.format, _render_curvature_table)
    sol = solve_curvature(D)
    if sol.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystemError(
            f"D w = n 1 has no solution for this graph (n={g.n})"
        )
    if args.format == "csv":
        print("vertex,w,w_float")
        for i, x in enumerate(sol.w):
            print(f"{i},{rational_str(x)},{to_float(x)!r}")
        return EXIT_OK
    doc = {"command": "curvature", "input": args.input, "n": g.n, "m": g.m, "mode": "exact"}
    doc.update(_curvature_doc(D, sol))
    return _emit(doc, args.format, _render_curvature_table)


def _render_curvature_table(doc: dict) -> None:
    print(f"n = {doc['n']}, m = {doc['m']}")
    if doc.get("mode") == "float":
        for i, x in enumerate(doc["w_float"]):
            print(f"  w[{i}] = {x!r}")
        print(f"residual_inf = {doc['residual_inf']!r}")
        return
    print(f"status = {doc['status']}")
    for i, (s, f) in enumerate(zip(doc["w"], doc["w_float"])):
        print(f"  w[{i}] = {s} ({f})")
    print(f"l1_norm = {doc['l1_norm']}, K = {doc['bound_K']}, nonneg = {doc['nonneg']}")
    for warning in doc["warnings"]:
        print(f"warning: {warning}")


def _verification_doc(D: DistanceMatrix, sol: CurvatureSolution, samples: int, seed: int) -> dict:
    battery = measure_battery(D.n, samples=samples, seed=seed)
    report = verify_minimax(D, sol, battery)
    witness = None
    if not sol.nonneg and sol.status is not SolveStatus.INCONSISTENT:
        found = search_lower_violation(D, sol, budget=samples, seed=seed)
        if found is not None:
            witness = [rational_str(x) for x in found.p]
    return {
        "seed": seed,
        "samples": samples,
        "K": rational_str(report.records[0].K) if report.records else None,
        "K_float": to_float(report.records[0].K) if report.records else None,
        "nonneg": report.nonneg,
        "summary": {
            "measures_checked": report.measures_checked,
            "lower_failures": report.lower_failures,
            "upper_failures": report.upper_failures,
        },
        "lower_violation_witness": witness,
        "findings": list(report.findings),
        "records": [
            {
                "measure": r.descriptor,
                "A": rational_str(r.A), "A_float": to_float(r.A),
                "B": rational_str(r.B), "B_float": to_float(r.B),
                "lower_holds": r.lower_holds, "upper_holds": r.upper_holds,
                "lower_tight": r.lower_tight, "upper_tight": r.upper_tight,
            }
            for r in report.records
        ],
    }


def _cmd_verify(args) -> int:
    g = _load_graph(args)
    D = _connected_apsp(g)
    sol = solve_curvature(D)
    if sol.status is SolveStatus.INCONSISTENT:
        raise InconsistentSystemError(f"D w = n 1 has no solution for this graph (n={g.n})")
    doc = {"command": "verify", "input": args.input, "n": g.n, "m": g.m}
    doc.update(_verification_doc(D, sol, args.samples, args.seed))
    return _emit(doc, args.format, _render_verify_table)


def _render_verify_table(doc: dict) -> None:
    s = doc["summary"]
    print(f"n = {doc['n']}, K = {doc['K']}, nonneg = {doc['nonneg']}")
    print(f"measures checked: {s['measures_checked']}, "
          f"lower failures: {s['lower_failures']}, upper failures: {s['upper_failures']}")
    for finding in doc["findings"]:
        print(f"finding: {finding}")
    if doc["lower_violation_witness"]:
        print(f"lower-bound witness: {doc['lower_violation_witness']}")


def _game_doc(D: DistanceMatrix, sol: CurvatureSolution | None) -> dict:
    from .verifier import transport_vector

    gsol = game_value(D)
    # certificate residues; both must be exact zeros
    low = transport_vector(D, gsol.maximin_strategy).A
    high = transport_vector(D, gsol.minimax_strategy).B
    doc = {
        "value": rational_str(gsol.value),
        "value_float": to_float(gsol.value),
        "maximin_strategy": [rational_str(x) for x in gsol.maximin_strategy.p],
        "minimax_strategy": [rational_str(x) for x in gsol.minimax_strategy.p],
        "certificate_residues": {
            "maximin": rational_str(low - gsol.value),
            "minimax": rational_str(high - gsol.value),
        },
    }
    comparison = None
    if sol is not None and sol.status is SolveStatus.UNIQUE:
        cmp_rec = game_vs_curvature(D, sol)
        comparison = {
            "K": rational_str(cmp_rec.K),
            "K_float": to_float(cmp_rec.K),
            "value": rational_str(cmp_rec.value),
            "equal": cmp_rec.equal,
            "nonneg": cmp_rec.nonneg,
        }
    doc["curvature_comparison"] = comparison
    return doc


def _cmd_game(args) -> int:
    g = _load_graph(args)
    D = _connected_apsp(g)
    sol = solve_curvature(D)
    doc = {"command": "game", "input": args.input, "n": g.n, "m": g.m}
    doc.update(_game_doc(D, sol))
    return _emit(doc, args.format, _render_game_table)


def _render_game_table(doc: dict) -> None:
    print(f"n = {doc['n']}, game value = {doc['value']} ({doc['value_float']})")
    print(f"maximin strategy: {doc['maximin_strategy']}")
    print(f"minimax strategy: {doc['minimax_strategy']}")
    if doc["curvature_comparison"]:
        c = doc["curvature_comparison"]
        print(f"K = {c['K']}, equal to value: {c['equal']}")


def _cmd_report(args) -> int:
    g = _load_graph(args)
    D = _connected_apsp(g)
    sol = solve_curvature(D)
    ecc, radius, diameter = eccentricities(D)
    sums = row_sums(D)
    doc = {
        "command": "report",
        "input": args.input,
        "n": g.n,
        "m": g.m,
        "distance": {
            "radius": radius,
            "diameter": diameter,
            "row_sum_min": int(sums.min()),
            "row_sum_max": int(sums.max()),
        },
        "curvature": _curvature_doc(D, sol),
    }
    if sol.status is SolveStatus.INCONSISTENT:
        doc["verification"] = None
        doc["game"] = None
        print(json.dumps(doc, indent=2))
        raise InconsistentSystemError(f"D w = n 1 has no solution for this graph (n={g.n})")
    doc["verification"] = _verification_doc(D, sol, args.samples, args.seed)
    doc["game"] = _game_doc(D, sol)
    return _emit(doc, args.format, _render_report_table)


def _render_report_table(doc: dict) -> None:
    print(f"graph: {doc['input']} (n = {doc['n']}, m = {doc['m']})")
    print(f"radius = {doc['distance']['radius']}, diameter = {doc['distance']['diameter']}")
    c = doc["curvature"]
    print(f"curvature status = {c['status']}, K = {c.get('bound_K')}, nonneg = {c.get('nonneg')}")
    _render_verify_table(doc["verification"] | {"n": doc["n"]})
    _render_game_table(doc["game"] | {"n": doc["n"]})


if __name__ == "__main__":
    sys.exit(main())
