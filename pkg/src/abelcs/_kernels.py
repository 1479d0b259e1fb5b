"""Phase-counting kernels for the two brute-force sums.

Both sums reduce to the same job: walk a mixed-radix box of integer vectors
``x`` and histogram ``scale * x^T A x mod N``.  ``A`` has already been reduced
mod ``N`` by the caller, so every intermediate fits comfortably in int64 as
long as ``N < 2**31``.

Two implementations are kept side by side.  The numba one is used by
default; setting ``ABELCS_NO_NUMBA=1`` (or running without numba installed)
selects the vectorized numpy one.
"""

import os

import numpy as np

_CHUNK = 1 << 18

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("ABELCS_NO_NUMBA", "").strip().lower() not in (
    "1", "true", "yes", "on"
)
BACKEND = "numba" if USE_NUMBA else "numpy"

MAX_MODULUS = 1 << 31


def quadratic_phase_counts_numpy(A, radices, scale, modulus):
    """Histogram of ``scale * x^T A x mod modulus`` over ``0 <= x_i < radices[i]``."""
    radices = np.asarray(radices, dtype=np.int64)
    m = radices.shape[0]
    A = np.asarray(A, dtype=np.int64).reshape(m, m) % modulus
    counts = np.zeros(modulus, dtype=np.int64)
    if m == 0:
        counts[0] = 1
        return counts
    total = int(np.prod(radices))
    # x_0 is the most significant digit
    strides = np.ones(m, dtype=np.int64)
    for i in range(m - 2, -1, -1):
        strides[i] = strides[i + 1] * radices[i + 1]
    scale = scale % modulus
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        X = (idx[:, None] // strides[None, :]) % radices[None, :]
        acc = np.zeros(idx.shape[0], dtype=np.int64)
        for i in range(m):
            xi = X[:, i]
            acc = (acc + (xi * xi % modulus) * A[i, i]) % modulus
            for j in range(i + 1, m):
                acc = (acc + (xi * X[:, j] % modulus) * (2 * A[i, j] % modulus)) % modulus
        counts += np.bincount(acc * scale % modulus, minlength=modulus)
    return counts


if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _quadratic_phase_counts_jit(A, radices, modulus):
        # A is already scaled and reduced mod modulus
        m = radices.shape[0]
        counts = np.zeros(modulus, dtype=np.int64)
        if m == 0:
            counts[0] = 1
            return counts
        last = m - 1
        n_last = radices[last]
        a_ll = A[last, last]
        step2 = (2 * a_ll) % modulus
        outer = 1
        for i in range(last):
            outer *= radices[i]
        x = np.zeros(m, dtype=np.int64)
        for _ in range(outer):
            # form restricted to the leading coordinates, and the linear
            # coefficient of the last coordinate
            base = 0
            lin = 0
            for i in range(last):
                xi = x[i]
                base = (base + (xi * xi % modulus) * A[i, i]) % modulus
                for j in range(i + 1, last):
                    base = (base + (xi * x[j] % modulus) * (2 * A[i, j] % modulus)) % modulus
                lin = (lin + xi * (2 * A[i, last] % modulus)) % modulus
            # f(t) = base + lin t + a_ll t^2, walked by second differences
            val = base
            delta = (lin + a_ll) % modulus
            for _t in range(n_last):
                counts[val] += 1
                val += delta
                if val >= modulus:
                    val -= modulus
                delta += step2
                if delta >= modulus:
                    delta -= modulus
            k = last - 1
            while k >= 0:
                x[k] += 1
                if x[k] < radices[k]:
                    break
                x[k] = 0
                k -= 1
        return counts

    def quadratic_phase_counts_numba(A, radices, scale, modulus):
        radices = np.ascontiguousarray(radices, dtype=np.int64)
        m = radices.shape[0]
        A = np.asarray(A, dtype=np.int64).reshape(m, m) % modulus
        A = np.ascontiguousarray(A * (scale % modulus) % modulus)
        return _quadratic_phase_counts_jit(A, radices, np.int64(modulus))

else:  # pragma: no cover
    quadratic_phase_counts_numba = None


def quadratic_phase_counts(A, radices, scale, modulus):
    if modulus >= MAX_MODULUS:
        raise OverflowError(f"modulus {modulus} too large for int64 phase kernels")
    if USE_NUMBA:
        return quadratic_phase_counts_numba(A, radices, scale, modulus)
    return quadratic_phase_counts_numpy(A, radices, scale, modulus)
