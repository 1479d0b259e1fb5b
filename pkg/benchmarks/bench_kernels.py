"""Compare the numba and numpy phase-counting kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Two workloads: the brute-force RT lattice sum over (Z/2k)^m for the M(2,6)
linking matrix, and the torsion-group sum for a few larger linking forms.
Both backends must return identical histograms; timings are best-of-N.
"""

import argparse
import time

import numpy as np

from abelcs import _kernels
from abelcs.homology import analyze
from abelcs.surgery import block_sum, lens, m26

M26 = [[-3, 1, 1], [1, 3, 1], [1, 1, -1]]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def rt_cases():
    for k in (4, 16, 32, 64):
        A = np.array(M26, dtype=np.int64) % (4 * k)
        yield f"RT m26 k={k} ({(2 * k) ** 3} terms)", A, [2 * k] * 3, -1, 4 * k


def torsion_cases():
    for P in (lens(100_003), block_sum([m26(), lens(2_000)]), block_sum([lens(30), lens(60), lens(90)])):
        T, Q = analyze(P)
        A = np.array(Q.numerators().to_rows(), dtype=np.int64)
        yield f"Z_k {P.name} ({T.p} terms)", A, list(T.torsion_numbers), 3, T.p


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    # compile once before timing
    _kernels.quadratic_phase_counts_numba(np.ones((1, 1), dtype=np.int64), [2], 1, 4)

    print(f"{'case':<52} {'numba [s]':>10} {'numpy [s]':>10} {'speedup':>8}")
    for label, A, radices, scale, modulus in [*rt_cases(), *torsion_cases()]:
        t_jit, a = best_of(lambda: _kernels.quadratic_phase_counts_numba(A, radices, scale, modulus), args.repeat)
        t_np, b = best_of(lambda: _kernels.quadratic_phase_counts_numpy(A, radices, scale, modulus), args.repeat)
        if not np.array_equal(a, b):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:<52} {t_jit:>10.4f} {t_np:>10.4f} {t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()
