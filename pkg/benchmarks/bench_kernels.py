"""Time the compiled kernels against the pure-Python twins.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import math
import random
import timeit

from eulermat import _pykernels

try:
    from eulermat import _ckernels
except ImportError:
    _ckernels = None


def series_workload(impl, mats):
    for m in mats:
        impl.expm_series(*m, 1e-15, 100)


def sweep_workload(impl, S, L, W):
    impl.sweep_cascade(S, L, 343.0, W)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(0)

    def cx(r):
        return complex(rng.uniform(-r, r), rng.uniform(-r, r))

    mats = [tuple(cx(5.0) for _ in range(4)) for _ in range(2000)]
    S = [rng.uniform(0.005, 0.05) for _ in range(20)]
    L = [rng.uniform(0.05, 0.5) for _ in range(20)]
    W = [2 * math.pi * (20 + i * (20000 - 20) / 4999) for i in range(5000)]

    cases = [
        ("expm_series x2000", lambda impl: series_workload(impl, mats)),
        ("sweep 20 seg x 5000 freq", lambda impl: sweep_workload(impl, S, L, W)),
    ]
    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the Python twin only")

    print(f"{'workload':<28}{'backend':<10}{'best [s]':>12}{'speedup':>10}")
    for name, fn in cases:
        base = None
        for label, impl in impls:
            best = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
            base = base or best
            print(f"{name:<28}{label:<10}{best:>12.5f}{base / best:>9.1f}x")


if __name__ == "__main__":
    main()
