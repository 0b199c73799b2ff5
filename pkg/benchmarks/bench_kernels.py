"""Compare the pure-Python and compiled integer-polynomial kernels.

    python3 benchmarks/bench_kernels.py [--quick]

Prints a table of microbenchmarks (mul, divexact, gcd) for both backends,
then the wall time of one end-to-end product-table build per backend (run
in a subprocess so each starts with cold caches).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from mckay import _zpoly_py

try:
    from mckay import _zpoly_c
except ImportError:
    _zpoly_c = None

BACKENDS = {"python": _zpoly_py}
if _zpoly_c is not None:
    BACKENDS["cython"] = _zpoly_c


def rand_poly(rng, length, bits):
    c = [rng.randint(-(1 << bits), 1 << bits) for _ in range(length)]
    c[-1] = c[-1] or 1
    return tuple(c)


def bench(fn, number):
    return min(timeit.repeat(fn, number=number, repeat=3)) / number


def micro(quick):
    rng = random.Random(1)
    sizes = [(4, 20), (12, 20), (12, 200), (40, 60), (200, 200)]
    if quick:
        sizes = sizes[:3]
    print(f"{'kernel':<10}{'len':>6}{'bits':>6}" + "".join(f"{b:>14}" for b in BACKENDS))
    for length, bits in sizes:
        a, b = rand_poly(rng, length, bits), rand_poly(rng, length, bits)
        number = max(1, 20000 // (length * length))
        for name in ("mul", "divexact"):
            row = f"{name:<10}{length:>6}{bits:>6}"
            for mod in BACKENDS.values():
                if name == "mul":
                    t = bench(lambda: mod.mul(a, b), number)
                else:
                    ab = mod.mul(a, b)
                    t = bench(lambda: mod.divexact(ab, b), number)
                row += f"{t * 1e6:>12.1f}us"
            print(row)


def end_to_end(n):
    code = f"import time; from mckay.product import dual_operators; t=time.perf_counter(); dual_operators({n}); print(time.perf_counter()-t)"
    print(f"\nend-to-end: all E_(P_lam^*) operators for n={n}")
    for name in BACKENDS:
        env = dict(os.environ)
        env.pop("MCKAY_PURE_PYTHON", None)
        if name == "python":
            env["MCKAY_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        print(f"  {name:<8}{float(out.stdout):8.3f}s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()
    micro(args.quick)
    end_to_end(3 if args.quick else args.n)


if __name__ == "__main__":
    main()
