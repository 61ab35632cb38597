"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]

Runs the exact searches on fixed workloads with each available backend,
checks that both report the same values, and prints median wall times.
"""

from __future__ import annotations

import argparse
import statistics
import time

from tlir import _kernel
from tlir.generators import bow_tie, complete, enumerate_connected, gen, petersen
from tlir.oracle import exact_lir, exact_tlir


def workloads():
    yield "sweep n<=6 (tlir)", [(exact_tlir, G) for n in range(1, 7) for G in enumerate_connected(n)]
    yield "bow-tie (lir)", [(exact_lir, bow_tie())]
    yield "petersen (tlir)", [(exact_tlir, petersen())]
    yield "K6 (tlir)", [(exact_tlir, complete(6))]
    yield "gnp n=9 x20 (lir)", [(exact_lir, gen("gnp", 9, s, p=0.4)) for s in range(20)]


def run(jobs, backend):
    start = time.perf_counter()
    values = [f(G, backend=backend).value for f, G in jobs]
    return time.perf_counter() - start, values


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernel.BACKENDS
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is timed")
    print(f"{'workload':<22}" + "".join(f"{b:>12}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    for name, jobs in workloads():
        times, ref = {}, None
        for b in backends:
            samples = []
            for _ in range(args.repeat):
                secs, values = run(jobs, b)
                samples.append(secs)
                if ref is None:
                    ref = values
                elif values != ref:
                    raise SystemExit(f"{name}: backends disagree")
            times[b] = statistics.median(samples)
        row = f"{name:<22}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if len(backends) > 1:
            row += f"   {times['python'] / times['cython']:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
