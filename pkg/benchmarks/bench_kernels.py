"""Side-by-side timing of the pure and compiled kernel backends.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py

Each kernel gets a representative workload drawn from the hot paths: the
determinant sweeps behind the Hankel tests and the packed-dict polynomial
updates behind the zeta coefficients.  Numbers are best-of-three wall
clock; treat them as rough guidance, not a statistical claim.
"""

import random
import time
from array import array

from mzl._kernels import _pure

try:
    from mzl._kernels import _core
except ImportError:
    _core = None

PRIME = 2305843009213693951


def best_of(fn, reps=3):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def pack(p, q):
    return (p << 32) | q


def make_workloads(rng):
    matrices = [
        [[rng.randint(-10**6, 10**6) for _ in range(7)] for _ in range(7)]
        for _ in range(200)
    ]
    poly_a = {pack(rng.randint(0, 60), rng.randint(0, 60)): rng.randint(-99, 99)
              for _ in range(120)}
    poly_b = {pack(rng.randint(0, 60), rng.randint(0, 60)): rng.randint(-99, 99)
              for _ in range(120)}
    src = {pack(rng.randint(0, 40), rng.randint(0, 40)): rng.randint(-9, 9)
           for _ in range(80)}
    shifts = [(pack(rng.randint(0, 20), rng.randint(0, 20)), rng.randint(1, 50))
              for _ in range(400)]
    terms = [(rng.randint(0, 80), rng.randint(0, 80), rng.randrange(PRIME))
             for _ in range(3000)]
    vs = [rng.randrange(-64, 64) for _ in range(128)]
    s = 9
    rows = [array("Q", (rng.randrange(PRIME) for _ in range(128)))
            for _ in range(2 * s - 1)]
    return matrices, poly_a, poly_b, src, shifts, terms, vs, rows, s


def bench(impl):
    rng = random.Random(2026)
    matrices, poly_a, poly_b, src, shifts, terms, vs, rows, s = make_workloads(rng)
    results = {}

    def run_bareiss():
        for m in matrices:
            impl.bareiss_det(m)

    def run_mul():
        for _ in range(50):
            impl.poly_mul(poly_a, poly_b)

    def run_addmul():
        acc = {}
        for dkey, c in shifts:
            impl.poly_addmul_shifted(acc, src, dkey, c)

    def run_eval():
        for u0 in range(40):
            impl.eval_poly_row_mod(terms, u0, vs, PRIME)

    def run_hankel():
        for _ in range(200):
            impl.hankel_dets_row_mod(rows, 128, s, PRIME)

    results["bareiss_det (200 x 7x7)"] = best_of(run_bareiss)
    results["poly_mul (50 x 120*120 terms)"] = best_of(run_mul)
    results["poly_addmul_shifted (400 shifts)"] = best_of(run_addmul)
    results["eval_poly_row_mod (40 rows x 3000 terms)"] = best_of(run_eval)
    results["hankel_dets_row_mod (200 x s=9, nv=128)"] = best_of(run_hankel)
    return results


def main():
    pure = bench(_pure)
    compiled = bench(_core) if _core is not None else None
    width = max(len(k) for k in pure)
    header = f"{'kernel workload':<{width}}  {'pure':>9}"
    if compiled:
        header += f"  {'compiled':>9}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, t in pure.items():
        line = f"{name:<{width}}  {t * 1e3:8.1f}ms"
        if compiled:
            tc = compiled[name]
            line += f"  {tc * 1e3:8.1f}ms  {t / tc:7.1f}x"
        print(line)
    if compiled is None:
        print("\ncompiled extension not built; showing pure backend only")


if __name__ == "__main__":
    main()
