"""Command-line front end.

Subcommands: invariants, multiplicity, classify, build, sweep,
check-identities.  Exit codes: 0 success, 1 usage or parse error,
2 hypothesis violation, 3 internal disagreement between oracles or a
failed identity (soundness alarm).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from . import graphs as graphlib
from .algebraic import (
    AlgebraicNumber,
    default_lambda_set,
    multiplicity,
    rank_multiplicity,
)
from .characterize import (
    HypothesisViolation,
    bridge_multiplicity_identity,
    dispatch_classify,
    pendant_charpoly_identity,
)
from .enumeration import (
    Graph6Error,
    connected_graphs,
    emit_graph6,
    parse_graph6,
    random_connected_graph,
    trees,
)
from .families import FamilyError, build_family, parse_family_spec
from .graphs import (
    Graph,
    GraphError,
    cyclomatic_number,
    high_degree_vertices,
    is_in_Gs,
    pendant_cycles,
    pendant_paths,
    pendant_vertices,
    plinth,
    q_s_set,
)
from .sweep import MODES, OracleMismatchError, sweep

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_SOUNDNESS = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit with code 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise SystemExit_(EXIT_USAGE, f"error: {message}")


class SystemExit_(Exception):
    def __init__(self, code: int, message: str = ""):
        self.code = code
        self.message = message


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="edge-list or graph6 file")
    p.add_argument("--graph6", metavar="STR", help="literal graph6 string")
    p.add_argument("--family", metavar="SPEC", help="family spec, e.g. Ckl(g=6,l=4)")


def _add_lambda_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--lambda", dest="lam", metavar="P/Q", help="eigenvalue 2cos(P*pi/Q)"
    )
    p.add_argument(
        "--minpoly",
        metavar="C0,C1,...",
        help="monic minimal polynomial, constant term first",
    )


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="eigenmult", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", help="structural invariants of one graph")
    _add_input_flags(p)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("multiplicity", help="eigenvalue multiplicity, both oracles")
    _add_input_flags(p)
    _add_lambda_flags(p)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("classify", help="run the shape-matching checker")
    _add_input_flags(p)
    _add_lambda_flags(p)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("build", help="build a family member, print graph6")
    p.add_argument("spec", nargs="?", help="family spec (or use --family)")
    _add_input_flags(p)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("sweep", help="verification sweep over a corpus")
    p.add_argument("--graph", metavar="FILE", help="graph6 corpus, one per line")
    p.add_argument("--n-max", type=int, default=None, help="enumerate up to n")
    p.add_argument("--trees", action="store_true", help="enumerate trees only")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--mode", choices=MODES, default="thm22")
    _add_lambda_flags(p)
    p.add_argument("--max-q", type=int, default=9, help="default eigenvalue set size")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", metavar="FILE")
    p.add_argument(
        "--figures",
        action="store_true",
        help="render PNG figures next to --out",
    )

    p = sub.add_parser(
        "check-identities", help="validate the pendant and bridge identities"
    )
    _add_input_flags(p)
    _add_lambda_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="random instances")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", metavar="FILE")
    return top


def _load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        content = fh.read()
    lines = [ln.strip() for ln in content.splitlines() if ln.strip()]
    if not lines:
        raise GraphError(f"{path} is empty")
    first = lines[0].split()
    if first[0].isdigit() and (len(first) == 1):
        n = int(first[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line {ln!r} in {path}")
            edges.append((int(parts[0]), int(parts[1])))
        return graphlib.from_edge_list(n, edges)
    return parse_graph6(lines[0])


def _graph_from_args(args) -> Graph:
    sources = [
        s
        for s in (
            getattr(args, "graph", None),
            getattr(args, "graph6", None),
            getattr(args, "family", None),
        )
        if s
    ]
    if len(sources) != 1:
        raise SystemExit_(
            EXIT_USAGE, "error: provide exactly one of --graph/--graph6/--family"
        )
    if getattr(args, "graph", None):
        return _load_graph_file(args.graph)
    if getattr(args, "graph6", None):
        return parse_graph6(args.graph6)
    return build_family(parse_family_spec(args.family))


def _lambda_from_args(args, required: bool = True) -> Optional[AlgebraicNumber]:
    lam_text = getattr(args, "lam", None)
    minpoly = getattr(args, "minpoly", None)
    if lam_text and minpoly:
        raise SystemExit_(EXIT_USAGE, "error: give --lambda or --minpoly, not both")
    if lam_text:
        try:
            p_str, q_str = lam_text.split("/")
            return AlgebraicNumber.from_angle(int(p_str), int(q_str))
        except (ValueError, TypeError) as exc:
            raise SystemExit_(EXIT_USAGE, f"error: bad --lambda {lam_text!r}: {exc}")
    if minpoly:
        try:
            coeffs = [int(c) for c in minpoly.split(",")]
            return AlgebraicNumber.from_minpoly(coeffs)
        except ValueError as exc:
            raise SystemExit_(EXIT_USAGE, f"error: bad --minpoly: {exc}")
    if required:
        raise SystemExit_(EXIT_USAGE, "error: an eigenvalue is required (--lambda P/Q)")
    return None


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_invariants(args) -> int:
    g = _graph_from_args(args)
    in_gs = is_in_Gs(g, args.s)
    data = {
        "n": g.n,
        "edges": g.edge_count(),
        "c": cyclomatic_number(g),
        "p": len(pendant_vertices(g)),
        "s": args.s,
        "in_G_s": in_gs,
        "q_s": len(q_s_set(g, args.s)) if in_gs else None,
        "high_degree_vertices": sorted(high_degree_vertices(g)),
        "plinth_order": plinth(g).n,
        "pendant_paths": [
            {
                "vertices": list(pp.vertices),
                "anchor": pp.anchor,
                "bare_component": pp.bare_component,
            }
            for pp in pendant_paths(g)
        ],
        "pendant_cycles": [
            {"cycle": sorted(ring), "attachment": w} for ring, w in pendant_cycles(g)
        ],
    }
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2))
    elif args.format == "csv":
        import csv as _csv
        import io

        buf = io.StringIO()
        w = _csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in data.items():
            w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
        _emit(args, buf.getvalue())
    else:
        lines = [f"n={data['n']} edges={data['edges']} c={data['c']} p={data['p']}"]
        lines.append(
            f"in_G_{args.s}={data['in_G_s']} q_{args.s}={data['q_s']} "
            f"plinth_order={data['plinth_order']}"
        )
        lines.append(f"high degree: {data['high_degree_vertices']}")
        for pp in data["pendant_paths"]:
            kind = "bare" if pp["bare_component"] else f"anchor={pp['anchor']}"
            lines.append(f"pendant path {pp['vertices']} ({kind})")
        for pc in data["pendant_cycles"]:
            lines.append(f"pendant cycle {pc['cycle']} at {pc['attachment']}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_multiplicity(args) -> int:
    g = _graph_from_args(args)
    lam = _lambda_from_args(args)
    assert lam is not None
    m = multiplicity(g, lam)
    rm = rank_multiplicity(g, lam)
    data = {
        "lambda": lam.name,
        "minpoly": list(lam.minpoly.coeffs),
        "multiplicity": m,
        "rank_multiplicity": rm,
        "agree": m == rm,
    }
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2))
    elif args.format == "csv":
        _emit(
            args,
            "lambda,multiplicity,rank_multiplicity,agree\n"
            f"{lam.name},{m},{rm},{m == rm}",
        )
    else:
        _emit(args, f"m({lam.name}) = {m} (charpoly) / {rm} (rank)")
    if m != rm:
        print(
            f"SOUNDNESS ALARM: oracles disagree ({m} vs {rm})", file=sys.stderr
        )
        return EXIT_SOUNDNESS
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = _graph_from_args(args)
    lam = _lambda_from_args(args)
    assert lam is not None
    verdict = dispatch_classify(g, args.s, lam)
    data = verdict.to_json_dict()
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2))
    elif args.format == "csv":
        cols = ["checker", "m", "c", "q_s", "bound", "optimal", "predicted_form", "agree"]
        _emit(
            args,
            ",".join(cols) + "\n" + ",".join(str(data[c]) for c in cols),
        )
    else:
        _emit(
            args,
            f"checker={verdict.checker} m={verdict.m} bound={verdict.bound} "
            f"optimal={verdict.optimal} form={verdict.predicted_form} "
            f"agree={verdict.agree}"
            + (f" violation={verdict.violation}" if verdict.violation else ""),
        )
    if not verdict.hypothesis_ok:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _cmd_build(args) -> int:
    spec_text = args.spec or getattr(args, "family", None)
    if not spec_text:
        raise SystemExit_(EXIT_USAGE, "error: build needs a family spec")
    g = build_family(parse_family_spec(spec_text))
    _emit(args, emit_graph6(g))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if bool(args.graph) == bool(args.n_max):
        raise SystemExit_(EXIT_USAGE, "error: give exactly one of --graph or --n-max")
    if args.graph:
        with open(args.graph, "r", encoding="ascii") as fh:
            corpus = [parse_graph6(ln.strip()) for ln in fh if ln.strip()]
        source = args.graph
    else:
        corpus = []
        gen = trees if args.trees else connected_graphs
        for n in range(1, args.n_max + 1):
            corpus.extend(gen(n))
        source = f"{'trees' if args.trees else 'connected'}(n<={args.n_max})"
    single = _lambda_from_args(args, required=False)
    lambdas = [single] if single else default_lambda_set(args.max_q)
    report = sweep(corpus, args.s, lambdas, args.mode, jobs=args.jobs, source=source)
    if args.format == "json":
        text = report.to_json()
    elif args.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_text()
    _emit(args, text)
    if args.figures:
        if not args.out:
            raise SystemExit_(EXIT_USAGE, "error: --figures needs --out")
        from .plots import render_report_figures

        stem = args.out.rsplit(".", 1)[0]
        for p in render_report_figures(report, stem):
            print(f"wrote {p}", file=sys.stderr)
    if report.summary["disagreements"]:
        return EXIT_SOUNDNESS
    return EXIT_OK


def _cmd_check_identities(args) -> int:
    lam = _lambda_from_args(args, required=False)
    lambdas = [lam] if lam else default_lambda_set(8)
    results = {"pendant_identity": 0, "bridge_identity": 0, "failures": []}
    if args.graph or args.graph6 or args.family:
        graphs = [_graph_from_args(args)]
    else:
        rng = random.Random(args.seed)
        graphs = [
            random_connected_graph(
                rng, rng.randint(3, args.n_max), keep_pendant=True
            )
            for _ in range(args.count)
        ]
    rng = random.Random(args.seed + 1)
    for g in graphs:
        for u in sorted(pendant_vertices(g)):
            ok = pendant_charpoly_identity(g, u)
            results["pendant_identity"] += 1
            if not ok:
                results["failures"].append({"graph6": emit_graph6(g), "vertex": u})
        for lamx in lambdas:
            if multiplicity(g, lamx) < 1:
                continue
            for u in range(g.n):
                try:
                    from .algebraic import is_downer

                    if not is_downer(g, u, lamx):
                        continue
                except Exception:
                    continue
                h = random_connected_graph(rng, rng.randint(1, 6))
                v = rng.randrange(h.n)
                ok = bridge_multiplicity_identity(g, u, h, v, lamx)
                results["bridge_identity"] += 1
                if not ok:
                    results["failures"].append(
                        {"graph6": emit_graph6(g), "vertex": u, "lambda": lamx.name}
                    )
                break  # one bridge check per (graph, lambda) keeps runtime sane
    if args.format == "json":
        _emit(args, json.dumps(results, indent=2))
    else:
        _emit(
            args,
            f"pendant identity checks: {results['pendant_identity']}\n"
            f"bridge identity checks: {results['bridge_identity']}\n"
            f"failures: {len(results['failures'])}",
        )
    return EXIT_SOUNDNESS if results["failures"] else EXIT_OK


_COMMANDS = {
    "invariants": _cmd_invariants,
    "multiplicity": _cmd_multiplicity,
    "classify": _cmd_classify,
    "build": _cmd_build,
    "sweep": _cmd_sweep,
    "check-identities": _cmd_check_identities,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit_ as exc:
        if exc.message:
            print(exc.message, file=sys.stderr)
        return exc.code
    except (FamilyError, GraphError, Graph6Error, ValueError) as exc:
        if isinstance(exc, HypothesisViolation):
            print(f"hypothesis violation: {exc}", file=sys.stderr)
            return EXIT_HYPOTHESIS
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OracleMismatchError as exc:
        print(f"SOUNDNESS ALARM: {exc}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
