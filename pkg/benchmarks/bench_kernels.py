"""Time the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Prints one row per workload with the best-of-N time for each backend, the
speedup, and a check that both backends explored the same number of nodes.
"""

import argparse
import random
import time

from oddprime import Graph, exhaustive_search, independence_number, kernels, power_graph
from oddprime.families import MaximalPrimeGraph, build_family


def _search(g):
    return lambda: exhaustive_search(g).nodes_explored


def _mis(g):
    return lambda: independence_number(g)


def workloads(quick):
    yield "search C_8^2 (refuted)", _search(power_graph(8, 2, True))
    yield "search C_7^4 (refuted)", _search(power_graph(7, 4, True))
    yield "search P_13^3 (found)", _search(power_graph(13, 3, False))
    yield "search P_12^3 (refuted)", _search(power_graph(12, 3, False))
    if not quick:
        yield "search C_11^2 (refuted)", _search(power_graph(11, 2, True))
    yield "beta C_24^3", _mis(power_graph(24, 3, True))
    yield "beta R_50", _mis(build_family(MaximalPrimeGraph(50)))
    batch = _random_graphs(200, 64, 0.3, seed=1)
    yield "beta 200 x G(64, 0.3)", lambda: sum(independence_number(g) for g in batch)


def _random_graphs(count, n, p, seed):
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return [Graph.from_edges(n, [e for e in pairs if rng.random() < p]) for _ in range(count)]


def best_of(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the slowest workload")
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled kernels not built; timing the python backend only")
    header = f"{'workload':30} " + " ".join(f"{b:>12}" for b in backends) + f" {'speedup':>9} agree"
    print(header)
    print("-" * len(header))
    for name, fn in workloads(args.quick):
        times, results = [], []
        for backend in backends:
            previous = kernels.use_backend(backend)
            try:
                t, r = best_of(fn, args.repeat)
            finally:
                kernels.use_backend(previous)
            times.append(t)
            results.append(r)
        speedup = f"{times[-1] / times[0]:8.1f}x" if len(times) == 2 else "      n/a"
        cells = " ".join(f"{t * 1000:10.2f}ms" for t in times)
        print(f"{name:30} {cells} {speedup} {'yes' if len(set(results)) == 1 else 'NO'}")


if __name__ == "__main__":
    main()
