"""Compare the compiled row-reduction kernel against the pure-Python one.

Two views: microbenchmarks timing rref directly on random matrices over
GF(p) and over the rationals, and one end-to-end lemma suite run per
backend in a subprocess (the backend is chosen at import time, so a fresh
interpreter is the only clean way to switch).

Usage: python3 benchmarks/bench_kernel.py [--reps 5] [--skip-suite]
"""

import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from wplrec import _pykernel

try:
    from wplrec import _kernel
except ImportError:
    _kernel = None

PRIME = 2147483629
SIZES = ((30, 45), (60, 90), (120, 180))


def _random_mod(rng, rows, cols):
    data = [rng.randrange(PRIME) for _ in range(rows * cols)]
    # knock out a third of the rows so pivot search does real work
    for i in range(0, rows, 3):
        for j in range(cols):
            data[i * cols + j] = data[(i + 1) % rows * cols + j]
    return data


def _random_frac(rng, rows, cols):
    # matrices hand the kernels Fraction-normalized pairs
    vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            for _ in range(rows * cols)]
    return [v.numerator for v in vals], [v.denominator for v in vals]


def _best_of(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro(reps: int) -> None:
    rng = random.Random(0)
    print(f"{'workload':<22} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for rows, cols in SIZES:
        data = _random_mod(rng, rows, cols)
        pure = _best_of(lambda: _pykernel.rref_mod(data, rows, cols, PRIME), reps)
        if _kernel is not None:
            comp = _best_of(lambda: _kernel.rref_mod(data, rows, cols, PRIME), reps)
            assert _kernel.rref_mod(data, rows, cols, PRIME) == \
                _pykernel.rref_mod(data, rows, cols, PRIME)
            ratio = f"{pure / comp:7.1f}x"
        else:
            comp, ratio = float("nan"), "    n/a"
        print(f"{'gf rref %dx%d' % (rows, cols):<22} {pure * 1e3:9.2f}ms "
              f"{comp * 1e3:9.2f}ms {ratio}")
    for rows, cols in SIZES[:2]:
        num, den = _random_frac(rng, rows, cols)
        pure = _best_of(lambda: _pykernel.rref_frac(num, den, rows, cols), reps)
        if _kernel is not None:
            comp = _best_of(lambda: _kernel.rref_frac(num, den, rows, cols), reps)
            assert _kernel.rref_frac(num, den, rows, cols) == \
                _pykernel.rref_frac(num, den, rows, cols)
            ratio = f"{pure / comp:7.1f}x"
        else:
            comp, ratio = float("nan"), "    n/a"
        print(f"{'frac rref %dx%d' % (rows, cols):<22} {pure * 1e3:9.2f}ms "
              f"{comp * 1e3:9.2f}ms {ratio}")


SUITE_SNIPPET = (
    "import time, wplrec.linalg as L; "
    "from wplrec.verify import make_config, run_suite; "
    "t0 = time.perf_counter(); "
    "rep = run_suite(make_config((2, 3, 5), 2, samples='reduced'), 'lemmas'); "
    "assert rep['summary']['fail'] == 0; "
    "print(L.KERNEL_BACKEND, f'{time.perf_counter() - t0:.2f}s')"
)


def suite() -> None:
    print("\nend-to-end lemma suite, (2,3,5) reduce 2:")
    for forced in (False, True):
        env = dict(os.environ)
        if forced:
            env["WPLREC_PURE_KERNEL"] = "1"
        else:
            env.pop("WPLREC_PURE_KERNEL", None)
        out = subprocess.run([sys.executable, "-c", SUITE_SNIPPET],
                             capture_output=True, text=True, env=env)
        if out.returncode != 0:
            sys.stderr.write(out.stderr)
            raise SystemExit(1)
        print("  " + out.stdout.strip())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=5,
                    help="repetitions per microbenchmark (best is kept)")
    ap.add_argument("--skip-suite", action="store_true",
                    help="skip the end-to-end subprocess comparison")
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel unavailable; timing the pure backend only")
    micro(args.reps)
    if not args.skip_suite:
        suite()


if __name__ == "__main__":
    main()
