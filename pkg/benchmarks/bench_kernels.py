"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [--size N]

Every kernel is first run on both backends and the results are checked for
equality, then timed. A last row times the default ``check-laws`` run end to
end under each backend.
"""
import argparse
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from timeit import repeat

from weakll import _kernels_py as py

try:
    from weakll import _kernels as cy
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")


def rand_fraction(rng, density):
    if rng.random() > density:
        return Fraction(0)
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def rand_matrix(rng, rows, cols, density=0.6):
    return [rand_fraction(rng, density) for _ in range(rows * cols)]


def rand_poly(rng, nvars, terms):
    out = {}
    for _ in range(terms):
        key = tuple(sorted(rng.randrange(nvars) for _ in range(rng.randint(0, 4))))
        out[key] = out.get(key, 0) + Fraction(rng.randint(1, 9), rng.randint(1, 4))
    return out


def cases(size, rng):
    n = size
    a, b = rand_matrix(rng, n, n), rand_matrix(rng, n, n)
    s = max(2, int(n ** 0.5))
    ka, kb = rand_matrix(rng, s, s), rand_matrix(rng, s, s)
    sq = rand_matrix(rng, n, n, 0.4)
    p, q = rand_poly(rng, 4, 3 * n), rand_poly(rng, 4, 3 * n)
    vec = {i: Fraction(rng.randint(-5, 5), 3) for i in range(20 * n)}
    return {
        f"matmul {n}x{n}": ("matmul", (a, b, n, n, n)),
        f"kron {s}x{s} (x) {s}x{s}": ("kron", (ka, s, s, kb, s, s)),
        f"rref {n}x{n}": ("rref", (sq, n, n)),
        f"poly_mul {len(p)}x{len(q)} terms": ("poly_mul", (p, q)),
        f"sparse_axpy {len(vec)} keys": ("sparse_axpy", None),
    }, vec


def best(fn, number, runs):
    return min(repeat(fn, number=number, repeat=runs)) / number


def time_cli(pure):
    env = dict(os.environ)
    env.pop("WEAKLL_PURE_PYTHON", None)
    if pure:
        env["WEAKLL_PURE_PYTHON"] = "1"
    cmd = [sys.executable, "-m", "weakll", "check-laws", "--seed", "42"]
    start = time.perf_counter()
    out = subprocess.run(cmd, capture_output=True, env=env)
    return time.perf_counter() - start, out.stdout


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-cli", action="store_true", help="skip the end-to-end check-laws timing")
    args = ap.parse_args(argv)

    table, vec = cases(args.size, random.Random(args.seed))
    print(f"{'kernel':<32}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}")
    for label, (name, call_args) in table.items():
        if name == "sparse_axpy":
            coef = Fraction(2, 7)
            calls = {mod: (lambda m=mod: m.sparse_axpy(dict(vec), coef, vec)) for mod in (py, cy)}
        else:
            calls = {mod: (lambda m=mod, f=name, a=call_args: getattr(m, f)(*a)) for mod in (py, cy)}
        if calls[py]() != calls[cy]():
            sys.exit(f"backends disagree on {label}")
        tp = best(calls[py], 1, args.repeat)
        tc = best(calls[cy], 1, args.repeat)
        print(f"{label:<32}{tp * 1e3:>14.3f}{tc * 1e3:>16.3f}{tp / tc:>9.2f}x")

    if not args.no_cli:
        tp, out_p = time_cli(pure=True)
        tc, out_c = time_cli(pure=False)
        if out_p != out_c:
            sys.exit("check-laws reports differ between backends")
        print(f"{'check-laws --seed 42 (end to end)':<32}{tp * 1e3:>14.1f}{tc * 1e3:>16.1f}{tp / tc:>9.2f}x")


if __name__ == "__main__":
    main()
