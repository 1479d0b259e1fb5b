"""Exact integer and rational linear algebra.

Smith normal form with transformation matrices, fraction-free determinants,
rational inverses and the signature of a symmetric integer matrix.  Nothing
here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateForm, DimensionMismatch, NotSymmetric, SingularMatrix
from .matrix import IntMatrix, RatMatrix

__all__ = [
    "SmithDecomposition",
    "smith_normal_form",
    "determinant",
    "inverse_rational",
    "signature",
    "congruence_pivots",
]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with unimodular ``U``, ``V`` and ``D`` in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def m(self) -> int:
        return self.D.rows

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(self.m))


def _require_square(M):
    if not M.is_square:
        raise DimensionMismatch(f"expected a square matrix, got {M.rows}x{M.cols}")


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form of a square integer matrix.

    Pivots on the smallest nonzero absolute value of the active block, ties
    broken in row-major order, so the transforms are reproducible.  Diagonal
    entries come out nonnegative with ``d[i] | d[i+1]``; zeros trail.
    """
    _require_square(M)
    n = M.rows
    A = M.to_rows()
    U = IntMatrix.identity(n).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        for R in (A, U):
            R[dst] = [a + q * b for a, b in zip(R[dst], R[src])]

    def add_col(dst, src, q):
        for R in (A, V):
            for row in R:
                row[dst] += q * row[src]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    a = abs(A[i][j])
                    if a and (best is None or a < best[0]):
                        best = (a, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // piv))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // piv))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, n) if A[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    return SmithDecomposition(
        U=IntMatrix.from_rows(U, n), D=IntMatrix.from_rows(A, n), V=IntMatrix.from_rows(V, n)
    )


def determinant(M: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    _require_square(M)
    n = M.rows
    A = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_k, row_i = A[k], A[i]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1] if n else 1


def inverse_rational(M: IntMatrix) -> RatMatrix:
    """Exact inverse over the rationals (Gauss-Jordan on ``Fraction``)."""
    _require_square(M)
    n = M.rows
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M.to_rows())]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise SingularMatrix("matrix has determinant 0")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            f = A[r][c]
            if r != c and f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return RatMatrix.from_rows([row[n:] for row in A], n)


def congruence_pivots(M: IntMatrix) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalization ``P M P^T``.

    Symmetric elimination on diagonal pivots.  When every remaining diagonal
    entry is zero but some off-diagonal entry ``a[i][j]`` is not, row/column
    ``j`` is added to ``i`` so the new diagonal entry ``2 a[i][j]`` can serve
    as a pivot (this is the hyperbolic 2x2 block case).  Zero pivots are
    reported for degenerate input.
    """
    _require_square(M)
    if not M.is_symmetric():
        raise NotSymmetric("signature needs a symmetric matrix")
    n = M.rows
    A = [[Fraction(x) for x in row] for row in M.to_rows()]
    pivots = []
    for t in range(n):
        d = next((i for i in range(t, n) if A[i][i]), None)
        if d is None:
            off = next(((i, j) for i in range(t, n) for j in range(i + 1, n) if A[i][j]), None)
            if off is None:
                pivots.extend([Fraction(0)] * (n - t))
                break
            i, j = off
            A[i] = [x + y for x, y in zip(A[i], A[j])]
            for row in A:
                row[i] += row[j]
            d = i
        if d != t:
            A[t], A[d] = A[d], A[t]
            for row in A:
                row[t], row[d] = row[d], row[t]
        piv = A[t][t]
        pivots.append(piv)
        for i in range(t + 1, n):
            f = A[i][t] / piv
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[t])]
                for row in A:
                    row[i] -= f * row[t]
    return pivots


def signature(M: IntMatrix) -> int:
    """Number of positive minus number of negative eigenvalues, computed exactly."""
    pivots = congruence_pivots(M)
    if any(p == 0 for p in pivots):
        raise DegenerateForm("signature is only defined here for nondegenerate forms")
    return sum(1 if p > 0 else -1 for p in pivots)
