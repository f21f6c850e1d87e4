"""Time the pure-Python and compiled kernels on identical inputs.

Runs every kernel that has two implementations (BFS, shortest odd cycle,
branch-and-bound and brute-force independent set, odd-cycle packing,
fixed-size independent-set search) over seeded instances and prints one
table row per (kernel, backend) with the best-of-repeats wall time.

Usage:
    python3 benchmarks/compare_backends.py [--repeats N] [--json]
"""

import argparse
import json
import time

from ocpack import available_backends, gen_high_odd_girth, gnp, set_backend
from ocpack import backend as backend_module


def _bench_bfs(graph):
    return backend_module.bfs(graph, [0])


def _bench_odd_cycle(graph):
    return backend_module.odd_cycle(graph)


def _bench_mis_exact(graph):
    return backend_module.mis_exact(graph, (1,) * graph.n)


def _bench_mis_bruteforce(graph):
    return backend_module.mis_bruteforce(graph, (1,) * graph.n)


def _bench_iocp(graph):
    return backend_module.iocp(graph)


def _bench_set_of_size(graph):
    return backend_module.independent_set_of_size(graph, 6)


def build_workloads():
    dense = gnp(20, 0.4, seed=101)
    medium = gnp(16, 0.35, seed=102)
    packing = gnp(13, 0.3, seed=103)
    sparse = gen_high_odd_girth(8, [53], attach_edges=4, seed=104)
    return [
        ("bfs (n=61 sparse)", sparse, _bench_bfs),
        ("shortest odd cycle (n=61)", sparse, _bench_odd_cycle),
        ("mis branch&bound (n=20)", dense, _bench_mis_exact),
        ("mis bruteforce (n=16)", medium, _bench_mis_bruteforce),
        ("iocp search (n=13)", packing, _bench_iocp),
        ("size-6 search (n=20)", dense, _bench_set_of_size),
    ]


def run(repeats: int):
    rows = []
    for label, graph, fn in build_workloads():
        reference = None
        for backend_name in available_backends():
            set_backend(backend_name)
            result = fn(graph)
            if reference is None:
                reference = result
            elif result != reference:
                raise AssertionError(
                    f"{label}: backends disagree ({backend_name})"
                )
            best = min(
                _timed(fn, graph) for _ in range(repeats)
            )
            rows.append({"kernel": label, "backend": backend_name, "ms": best})
    set_backend("auto")
    return rows


def _timed(fn, graph) -> float:
    start = time.perf_counter()
    fn(graph)
    return (time.perf_counter() - start) * 1000.0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--json", action="store_true", help="one JSON line per row")
    args = parser.parse_args()
    backends = available_backends()
    if len(backends) < 2:
        print(f"only {backends[0]!r} is available; timings are still printed")
    rows = run(args.repeats)
    if args.json:
        for row in rows:
            print(json.dumps(row, sort_keys=True))
        return 0
    width = max(len(row["kernel"]) for row in rows)
    print(f"{'kernel':<{width}}  {'backend':<9}  best ms")
    for row in rows:
        print(f"{row['kernel']:<{width}}  {row['backend']:<9}  {row['ms']:8.3f}")
    speedups = {}
    for row in rows:
        speedups.setdefault(row["kernel"], {})[row["backend"]] = row["ms"]
    if len(backends) >= 2:
        print()
        for kernel, times in speedups.items():
            if "pure" in times and "compiled" in times and times["compiled"] > 0:
                ratio = times["pure"] / times["compiled"]
                print(f"{kernel:<{width}}  compiled is {ratio:5.1f}x faster")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
