"""Command-line interface.

Commands: solve (independent-set algorithms), color (coloring algorithms),
gen (graph generators, emitting graph files), check (oracles and
certificate checks), bench (a small grid runner over a directory).

Machine output goes to standard output: one JSON document per command
(sorted keys), except gen (a graph file) and bench (one JSON line per
record). Human summaries go to standard error. Exit codes: 0 success,
1 malformed input or usage, 2 violated precondition or exceeded limit,
3 failed verification of a produced certificate.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from pathlib import Path

from . import backend
from .coloring import color_bounded_iocp, color_triangle_free, f_bound
from .eptas import SolveParams, amplify_runs
from .errors import (
    GenerationError,
    GraphParseError,
    LimitExceededError,
    PreconditionError,
    VerificationError,
)
from .flow import max_weight_independent_set_bipartite
from .generators import (
    find_k33,
    gen_disjoint_odd_cycles,
    gen_high_odd_girth,
    gnp,
    pruned_complement_construction,
)
from .graph import Coloring, Graph, VertexWeights, odd_girth
from .graphio import emit_graph, parse_graph
from .highgirth import no_short_odd_solve
from .oracles import (
    check_coloring,
    check_independent,
    exact_chromatic_coloring,
    exact_iocp,
    exact_max_clique,
    exact_mis,
)
from .qptas import QptasParams, qptas_solve
from .seeding import derive_seed

SOLVE_ALGOS = ("noshort", "eptas", "qptas", "bipartite", "exact")
COLOR_ALGOS = ("trianglefree", "general", "exact")
GEN_FAMILIES = ("gnp", "thm5", "oddcycles", "highoddgirth")
CHECK_KINDS = ("iocp", "oddgirth", "independent", "coloring", "k33")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _say(message: str) -> None:
    print(f"[ocpack] {message}", file=sys.stderr)


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _load(path: str) -> tuple[Graph, VertexWeights]:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ocpack", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="independent-set solvers")
    solve.add_argument("graph", help="graph file path")
    solve.add_argument("--algo", required=True, choices=SOLVE_ALGOS)
    solve.add_argument("--k", type=int, default=None, help="iocp budget")
    solve.add_argument("--t", type=int, default=None, help="additive accuracy")
    solve.add_argument("--p", type=int, default=None, help="multiplicative precision")
    solve.add_argument("--b", type=int, default=None, help="odd-girth budget")
    solve.add_argument("--mode", choices=("paper", "practical"), default="paper")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--r-override", type=int, default=None)
    solve.add_argument("--d-override", type=int, default=None)
    solve.add_argument("--reps", type=int, default=1)
    solve.set_defaults(func=cmd_solve)

    color = sub.add_parser("color", help="coloring algorithms")
    color.add_argument("graph", help="graph file path")
    color.add_argument("--algo", required=True, choices=COLOR_ALGOS)
    color.add_argument("--k", type=int, default=None, help="iocp budget")
    color.set_defaults(func=cmd_color)

    gen = sub.add_parser("gen", help="graph generators (emit a graph file)")
    gen.add_argument("--family", required=True, choices=GEN_FAMILIES)
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--p", type=float, default=None)
    gen.add_argument("--k", type=int, default=None)
    gen.add_argument("--lengths", type=str, default=None, help="comma-separated odd lengths")
    gen.add_argument("--n-bipartite", type=int, default=None)
    gen.add_argument("--attach-edges", type=int, default=None)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--emit", choices=("sampled", "pruned", "result"), default="result")
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="oracles and certificate checks")
    check.add_argument("graph", help="graph file path")
    check.add_argument("--what", required=True, choices=CHECK_KINDS)
    check.add_argument("--vertices", type=str, default=None, help="1-indexed comma list")
    check.add_argument("--colors", type=str, default=None, help="comma list, one per vertex")
    check.set_defaults(func=cmd_check)

    bench = sub.add_parser("bench", help="grid runner over a directory of graph files")
    bench.add_argument("directory", help="directory of graph files")
    bench.add_argument("--algos", required=True, help="comma list of solve/color algorithms")
    bench.add_argument("--k", type=str, default="1", help="comma list of iocp budgets")
    bench.add_argument("--t", type=int, default=3)
    bench.add_argument("--p", type=int, default=4)
    bench.add_argument("--b", type=int, default=2)
    bench.add_argument("--mode", choices=("paper", "practical"), default="practical")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--r-override", type=int, default=None)
    bench.add_argument("--d-override", type=int, default=20)
    bench.add_argument("--reps", type=int, default=1)
    bench.set_defaults(func=cmd_bench)

    return parser


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def _run_solver(
    algo: str,
    graph: Graph,
    weights: VertexWeights,
    args: argparse.Namespace,
) -> tuple[frozenset[int], list[int] | None]:
    """Returns (vertex set, per-repetition sizes or None for deterministic runs)."""
    if algo == "bipartite":
        return max_weight_independent_set_bipartite(graph, weights), None
    if algo == "exact":
        return exact_mis(graph, weights), None
    if algo == "noshort":
        _require(args.k is not None and args.b is not None, "noshort requires --k and --b")
        return no_short_odd_solve(graph, weights, args.k, args.b), None
    if algo == "eptas":
        _require(args.k is not None and args.t is not None, "eptas requires --k and --t")
        params = SolveParams(
            k=args.k,
            t=args.t,
            mode=args.mode,
            r_override=args.r_override,
            d_override=args.d_override,
            seed=args.seed,
            repetitions=args.reps,
        )
        runs = amplify_runs(graph, params)
        best = max(runs, key=len)
        return best, [len(run) for run in runs]
    _require(args.k is not None and args.p is not None, "qptas requires --k and --p")
    params = QptasParams(
        k=args.k,
        p=args.p,
        mode=args.mode,
        r_override=args.r_override,
        d_override=args.d_override,
        seed=args.seed,
    )
    runs = [
        qptas_solve(graph, dataclasses.replace(params, seed=derive_seed(args.seed, "rep", i)))
        for i in range(args.reps)
    ]
    best = max(runs, key=len)
    return best, [len(run) for run in runs]


def cmd_solve(args: argparse.Namespace) -> int:
    graph, weights = _load(args.graph)
    start = time.perf_counter()
    chosen, rep_sizes = _run_solver(args.algo, graph, weights, args)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    verdict = check_independent(graph, chosen)
    report = {
        "command": "solve",
        "parameters": {
            "algo": args.algo,
            "graph": args.graph,
            "n": graph.n,
            "m": graph.m,
            "k": args.k,
            "t": args.t,
            "p": args.p,
            "b": args.b,
            "mode": args.mode,
            "seed": args.seed,
            "r_override": args.r_override,
            "d_override": args.d_override,
            "reps": args.reps,
            "backend": backend.current_backend(),
        },
        "result": {
            "size": len(chosen),
            "weight": weights.weight_of(chosen),
            "vertices": sorted(v + 1 for v in chosen),
        },
        "verification": "pass" if verdict.ok else "fail",
        "timing_ms": round(elapsed_ms, 3),
    }
    if rep_sizes is not None:
        report["repetition_sizes"] = rep_sizes
    _emit_json(report)
    if not verdict.ok:
        u, v = verdict.violating_edge
        _say(f"solve {args.algo}: verification FAILED on edge {u + 1}-{v + 1}")
        return 3
    _say(
        f"solve {args.algo}: size {len(chosen)} weight {weights.weight_of(chosen)} "
        f"(verification pass, {elapsed_ms:.1f} ms)"
    )
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    graph, _ = _load(args.graph)
    start = time.perf_counter()
    if args.algo == "trianglefree":
        _require(args.k is not None, "trianglefree requires --k")
        coloring = color_triangle_free(graph, args.k)
    elif args.algo == "general":
        _require(args.k is not None, "general requires --k")
        coloring = color_bounded_iocp(graph, args.k)
    else:
        _, coloring = exact_chromatic_coloring(graph)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    verdict = check_coloring(graph, coloring)
    report = {
        "command": "color",
        "parameters": {
            "algo": args.algo,
            "graph": args.graph,
            "n": graph.n,
            "m": graph.m,
            "k": args.k,
            "backend": backend.current_backend(),
        },
        "result": {
            "colors": coloring.color_count,
            "assignment": list(coloring.assignment),
        },
        "verification": "pass" if verdict.ok else "fail",
        "timing_ms": round(elapsed_ms, 3),
    }
    _emit_json(report)
    if not verdict.ok:
        u, v = verdict.violating_edge
        _say(f"color {args.algo}: verification FAILED on edge {u + 1}-{v + 1}")
        return 3
    _say(
        f"color {args.algo}: {coloring.color_count} colors "
        f"(verification pass, {elapsed_ms:.1f} ms)"
    )
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family == "gnp":
        _require(args.n is not None and args.p is not None, "gnp requires --n and --p")
        graph = gnp(args.n, args.p, args.seed)
        _say(f"gen gnp: n={graph.n} m={graph.m} seed={args.seed}")
    elif family == "thm5":
        _require(args.k is not None, "thm5 requires --k")
        report = pruned_complement_construction(args.k, args.seed)
        graph = getattr(report, {"sampled": "sampled", "pruned": "pruned", "result": "result"}[args.emit])
        alpha = "unknown" if report.alpha_h is None else report.alpha_h
        _say(
            f"gen thm5: k={report.k} n={report.n} deleted_k33={report.deleted_k33_count} "
            f"alpha_result={alpha} emitting {args.emit}"
        )
    elif family == "oddcycles":
        _require(args.lengths is not None, "oddcycles requires --lengths")
        graph = gen_disjoint_odd_cycles(_int_list(args.lengths))
        _say(f"gen oddcycles: n={graph.n} m={graph.m}")
    else:
        _require(
            args.n_bipartite is not None and args.lengths is not None,
            "highoddgirth requires --n-bipartite and --lengths",
        )
        graph = gen_high_odd_girth(
            args.n_bipartite,
            _int_list(args.lengths),
            args.attach_edges or 0,
            args.seed,
        )
        _say(f"gen highoddgirth: n={graph.n} m={graph.m} odd_girth={odd_girth(graph)}")
    sys.stdout.write(emit_graph(graph))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    graph, _ = _load(args.graph)
    what = args.what
    if what == "iocp":
        result: dict = {"iocp": exact_iocp(graph)}
        _say(f"check iocp: {result['iocp']}")
    elif what == "oddgirth":
        value = odd_girth(graph)
        result = {"odd_girth": "inf" if value == float("inf") else value}
        _say(f"check oddgirth: {result['odd_girth']}")
    elif what == "independent":
        _require(args.vertices is not None, "independent requires --vertices")
        chosen = [v - 1 for v in _int_list(args.vertices)]
        verdict = check_independent(graph, chosen)
        result = {
            "ok": verdict.ok,
            "violating_edge": None
            if verdict.violating_edge is None
            else [verdict.violating_edge[0] + 1, verdict.violating_edge[1] + 1],
        }
        _say(f"check independent: {'ok' if verdict.ok else 'violated'}")
    elif what == "coloring":
        _require(args.colors is not None, "coloring requires --colors")
        coloring = Coloring.from_assignment(_int_list(args.colors))
        verdict = check_coloring(graph, coloring)
        result = {
            "ok": verdict.ok,
            "violating_edge": None
            if verdict.violating_edge is None
            else [verdict.violating_edge[0] + 1, verdict.violating_edge[1] + 1],
        }
        _say(f"check coloring: {'ok' if verdict.ok else 'violated'}")
    else:
        found = find_k33(graph)
        result = {
            "found": found is not None,
            "sides": None
            if found is None
            else [sorted(v + 1 for v in found[0]), sorted(v + 1 for v in found[1])],
        }
        _say(f"check k33: {'found' if found else 'absent'}")
    _emit_json({"command": "check", "parameters": {"what": what, "graph": args.graph}, "result": result})
    return 0


def _bench_bound(algo: str, args, graph: Graph, weights, size: int, colors: int, k: int) -> bool | None:
    """Whether the run met its guarantee, when an exact reference is feasible."""
    try:
        if algo in ("bipartite", "exact"):
            return True
        if algo == "noshort":
            alpha_w = weights.weight_of(exact_mis(graph, weights))
            return size * args.b >= (args.b - k) * alpha_w
        if algo == "eptas":
            alpha = len(exact_mis(graph))
            return size >= alpha - -(-graph.n // args.t)
        if algo == "qptas":
            alpha = len(exact_mis(graph))
            return size * args.p >= (args.p - k) * alpha
        if algo == "trianglefree":
            return colors <= 2 + 5 * k
        omega = len(exact_max_clique(graph))
        return colors <= f_bound(k, omega)
    except LimitExceededError:
        return None


def cmd_bench(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise ValueError(f"not a directory: {args.directory}")
    files = sorted(p for p in directory.iterdir() if p.is_file())
    _require(bool(files), f"no files in {args.directory}")
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for algo in algos:
        _require(algo in SOLVE_ALGOS + COLOR_ALGOS, f"unknown algorithm {algo!r}")
    k_values = _int_list(args.k)
    _require(bool(k_values), "--k needs at least one value")
    records = 0
    for path in files:
        graph, weights = _load(str(path))
        for algo in algos:
            for k in k_values:
                run_args = argparse.Namespace(
                    k=k,
                    t=args.t,
                    p=args.p,
                    b=args.b,
                    mode=args.mode,
                    seed=derive_seed(args.seed, "bench", path.name, algo, k),
                    r_override=args.r_override if args.r_override is not None else max(graph.n, 1),
                    d_override=args.d_override,
                    reps=args.reps,
                )
                record = {
                    "instance": path.name,
                    "algo": algo,
                    "params": {
                        "k": k,
                        "t": args.t,
                        "p": args.p,
                        "b": args.b,
                        "mode": args.mode,
                        "seed": run_args.seed,
                        "reps": args.reps,
                    },
                }
                start = time.perf_counter()
                try:
                    if algo in SOLVE_ALGOS:
                        chosen, _ = _run_solver(algo, graph, weights, run_args)
                        size, colors = len(chosen), 0
                        record["result"] = {"size": size, "weight": weights.weight_of(chosen)}
                    else:
                        if algo == "trianglefree":
                            coloring = color_triangle_free(graph, k)
                        elif algo == "general":
                            coloring = color_bounded_iocp(graph, k)
                        else:
                            _, coloring = exact_chromatic_coloring(graph)
                        size, colors = 0, coloring.color_count
                        record["result"] = {"colors": colors}
                    record["bound_satisfied"] = _bench_bound(
                        algo, args, graph, weights, size, colors, k
                    )
                except (PreconditionError, LimitExceededError) as exc:
                    record["error"] = str(exc)
                record["timing_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
                print(json.dumps(record, sort_keys=True))
                records += 1
    _say(f"bench: {records} records over {len(files)} instances")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except GraphParseError as exc:
        _say(f"input error: {exc}")
        return 1
    except FileNotFoundError as exc:
        _say(f"input error: {exc}")
        return 1
    except (ValueError, OSError) as exc:
        _say(f"argument error: {exc}")
        return 1
    except (PreconditionError, LimitExceededError, GenerationError) as exc:
        _say(f"precondition violated: {exc}")
        return 2
    except VerificationError as exc:
        _say(f"verification failed: {exc}")
        return 3


if __name__ == "__main__":
    sys.exit(main())
