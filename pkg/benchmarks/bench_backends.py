"""Compare the compiled rational core (gmpy2) with the pure-Python
fallback (fractions.Fraction) on the hot kernels.

Run:  python3 benchmarks/bench_backends.py

The driver re-launches itself once per backend (selection happens at
import time via SEMIKIT_PURE_PYTHON) and prints a side-by-side table.
Results are identical across backends; only the timings differ.
"""

import argparse
import itertools
import json
import os
import random
import subprocess
import sys
import time


def _bench_scalar_ops(n=120_000):
    from semikit import NonnegScalar

    x = NonnegScalar(3, 7)
    y = NonnegScalar(22, 9)
    acc = NonnegScalar(0)
    t0 = time.perf_counter()
    for _ in range(n):
        acc = acc + x * y
    return time.perf_counter() - t0


def _bench_axiom_audit():
    from semikit.semimodule import axiom_audit

    t0 = time.perf_counter()
    report = axiom_audit(space="rn", dim=6, samples=2000, seed=1)
    assert report["all_hold"]
    return time.perf_counter() - t0


def _bench_metric_grid():
    from semikit import NormKind, SemiVector, metric

    vectors = [SemiVector(c) for c in itertools.product(range(4), repeat=3)]
    t0 = time.perf_counter()
    for x in vectors:
        for y in vectors:
            metric(x, y, NormKind.L1)
            metric(x, y, NormKind.EUCLIDEAN)
    return time.perf_counter() - t0


def _bench_cone_decisions(n=120):
    from semikit import SemiLinearMap, SemiMatrix, SemiVector, image_member
    from semikit.semimodule import random_scalar

    rng = random.Random(9)
    t0 = time.perf_counter()
    for _ in range(n):
        rows, cols = rng.randint(2, 5), rng.randint(2, 5)
        t = SemiLinearMap(
            SemiMatrix(
                [[random_scalar(rng, max_num=9) for _ in range(cols)] for _ in range(rows)]
            )
        )
        w = SemiVector([random_scalar(rng, max_num=9) for _ in range(rows)])
        image_member(t, w)
    return time.perf_counter() - t0


def _bench_perron(n=40):
    from semikit import SemiMatrix, perron_power_iteration
    from semikit.scalar import NonnegScalar

    rng = random.Random(4)
    t0 = time.perf_counter()
    for _ in range(n):
        size = rng.randint(2, 6)
        m = SemiMatrix(
            [
                [NonnegScalar(rng.randint(1, 40), rng.randint(1, 8)) for _ in range(size)]
                for _ in range(size)
            ]
        )
        perron_power_iteration(m, tol=1e-11)
    return time.perf_counter() - t0


KERNELS = {
    "scalar multiply-add chain": _bench_scalar_ops,
    "vector axiom audit (dim 6)": _bench_axiom_audit,
    "metric grid (4^3 x 4^3 pairs)": _bench_metric_grid,
    "cone membership decisions": _bench_cone_decisions,
    "perron iteration (float path)": _bench_perron,
}


def run_worker():
    import semikit

    timings = {"backend": semikit.BACKEND}
    for name, fn in KERNELS.items():
        timings[name] = fn()
    print(json.dumps(timings))


def run_driver():
    rows = []
    for pure in ("0", "1"):
        env = dict(os.environ, SEMIKIT_PURE_PYTHON=pure)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker"],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            raise SystemExit(1)
        rows.append(json.loads(proc.stdout))
    fast, slow = rows
    name_w = max(len(k) for k in KERNELS)
    print(f"{'kernel'.ljust(name_w)}  {fast['backend']:>10}  {slow['backend']:>10}  speedup")
    for name in KERNELS:
        a, b = fast[name], slow[name]
        ratio = b / a if a > 0 else float("inf")
        print(f"{name.ljust(name_w)}  {a:>9.3f}s  {b:>9.3f}s  {ratio:6.1f}x")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--worker", action="store_true")
    args = parser.parse_args()
    if args.worker:
        run_worker()
    else:
        run_driver()
