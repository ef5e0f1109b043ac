"""Benchmark the product-expansion kernel: compiled extension vs the
pure-Python fallback, on the commuting-tuple weight tables.

Run from the repository root after installing the package:

    python benchmarks/bench_expand.py --max-n 4000 --ell 3 --ell 5

Both kernels receive identical precomputed weight tables (converted to
gmpy2 mpz above the same cutoff the library uses) and their outputs are
compared exactly before timings are reported.
"""

from __future__ import annotations

import argparse
import time

from commtuple import _expand_py
from commtuple.arith import evaluate_exponent
from commtuple.series import _MPZ_CUTOFF, ntuple_exponent, weighted_divisor_table

try:
    from commtuple import _expand_cy
except ImportError:
    _expand_cy = None

try:
    from gmpy2 import mpz
except ImportError:
    mpz = None


def weight_table(ell: int, n_max: int):
    c = weighted_divisor_table(evaluate_exponent(ntuple_exponent(ell, n_max), n_max))
    if mpz is not None and n_max >= _MPZ_CUTOFF:
        c = [mpz(v) for v in c]
    return c


def bench(kernel, c, n_max: int):
    t0 = time.perf_counter()
    out = kernel.expand_kernel(c, n_max)
    return time.perf_counter() - t0, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4000)
    ap.add_argument("--ell", type=int, action="append",
                    help="tuple length, repeatable (default 3 and 5)")
    args = ap.parse_args()
    ells = args.ell or [3, 5]

    print(f"{'ell':>4} {'n_max':>7} {'pure_s':>9} {'compiled_s':>11} {'speedup':>8}")
    for ell in ells:
        c = weight_table(ell, args.max_n)
        t_py, out_py = bench(_expand_py, c, args.max_n)
        if _expand_cy is None:
            print(f"{ell:>4} {args.max_n:>7} {t_py:>9.3f} {'(not built)':>11}")
            continue
        t_cy, out_cy = bench(_expand_cy, c, args.max_n)
        if list(out_py) != list(out_cy):
            raise SystemExit(f"kernel outputs differ at ell={ell}")
        print(f"{ell:>4} {args.max_n:>7} {t_py:>9.3f} {t_cy:>11.3f} "
              f"{t_py / t_cy:>8.2f}")


if __name__ == "__main__":
    main()
