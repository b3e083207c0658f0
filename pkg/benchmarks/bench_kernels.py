"""Compare the compiled and pure-Python polynomial kernels.

Runs the same workloads in two subprocesses (one with ``P1REDUCE_PURE=1``)
so each gets a clean import of its kernel, and reports wall times.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from p1reduce import BACKEND, QQ, semistable_reduce
from p1reduce._kernels import poly_mul, poly_gcd
from p1reduce.sampling import random_dvr_family, random_residue_cocycle
from p1reduce.bundles import splitting_type
from fractions import Fraction

results = {"backend": BACKEND}

# raw kernel: convolution + gcd on dense rational polynomials
rng = random.Random(5)
polys = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(40)]
         for _ in range(40)]
t0 = time.perf_counter()
for a in polys:
    for b in polys[:10]:
        poly_mul(a, b)
results["poly_mul_40x40"] = time.perf_counter() - t0
small = [p[:12] for p in polys[:12]]
t0 = time.perf_counter()
for a, b in zip(small, small[1:]):
    g = poly_mul(a[:4], b[:4])
    poly_gcd(poly_mul(a, g), poly_mul(b, g))
results["poly_gcd_chain"] = time.perf_counter() - t0

# end to end: random factorizations and reductions
rng = random.Random(11)
t0 = time.perf_counter()
for _ in range(40):
    coc, expected = random_residue_cocycle(rng, QQ, rng.choice([2, 3]))
    assert tuple(splitting_type(coc).exponents) == tuple(expected)
results["factorize_40"] = time.perf_counter() - t0
rng = random.Random(11)
t0 = time.perf_counter()
for _ in range(10):
    coc, _ = random_dvr_family(rng, QQ, rng.choice([2, 2, 3]))
    semistable_reduce(coc, t_precision=32)
results["reduce_10"] = time.perf_counter() - t0

json.dump(results, sys.stdout)
"""


def run_backend(pure, repeat):
    env = dict(os.environ)
    env["P1REDUCE_PURE"] = "1" if pure else "0"
    best = None
    for _ in range(repeat):
        out = subprocess.run(
            [sys.executable, "-c", WORKER], env=env, capture_output=True, text=True
        )
        if out.returncode != 0:
            sys.stderr.write(out.stderr)
            raise SystemExit(1)
        res = json.loads(out.stdout)
        if best is None:
            best = res
        else:
            for k, v in res.items():
                if k != "backend" and v < best[k]:
                    best[k] = v
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = ap.parse_args()
    compiled = run_backend(pure=False, repeat=args.repeat)
    pure = run_backend(pure=True, repeat=args.repeat)
    if compiled["backend"] == pure["backend"]:
        print("note: compiled kernel unavailable; both runs used %r" % pure["backend"])
    keys = [k for k in compiled if k != "backend"]
    width = max(len(k) for k in keys)
    print("%-*s  %12s  %12s  %8s" % (width, "workload", compiled["backend"], pure["backend"], "speedup"))
    for k in keys:
        ratio = pure[k] / compiled[k] if compiled[k] else float("inf")
        print("%-*s  %10.4fs  %10.4fs  %7.2fx" % (width, k, compiled[k], pure[k], ratio))


if __name__ == "__main__":
    main()
