"""Torsion homology and the Q/Z-valued linking form of a surgery presentation."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, FreeHomologyPart, OracleMismatch
from .linalg import determinant, inverse_rational, signature, smith_normal_form
from .matrix import IntMatrix, RatMatrix
from .surgery import SurgeryPresentation

__all__ = [
    "TorsionPresentation",
    "LinkingForm",
    "torsion_presentation",
    "linking_form",
    "raw_linking_form",
    "analyze",
    "torsion_elements",
    "self_linking_oracle",
]


@dataclass(frozen=True)
class TorsionPresentation:
    """``H_1(M) = Z/p_1 + ... + Z/p_w`` with generators ``h_i = sum_t B[i, t] G_t``.

    ``G_t`` is the meridian of the ``t``-th surgery component.
    """

    torsion_numbers: tuple[int, ...]
    B: IntMatrix
    p: int
    det_L: int
    sigma: int
    m: int

    @property
    def w(self) -> int:
        return len(self.torsion_numbers)

    @property
    def is_trivial(self) -> bool:
        return self.w == 0


@dataclass(frozen=True)
class LinkingForm:
    """Symmetric linking matrix ``Q`` on the torsion basis, entries in ``[0, 1)``."""

    Q: RatMatrix
    p: int

    @property
    def w(self) -> int:
        return self.Q.rows

    def numerators(self) -> IntMatrix:
        """``p * Q`` as an integer matrix with entries in ``[0, p)``."""
        return (self.Q * self.p).to_integer()


def torsion_presentation(P: SurgeryPresentation) -> TorsionPresentation:
    L = P.linking_matrix
    m = P.m
    det_L = determinant(L)
    if det_L == 0:
        raise FreeHomologyPart(
            "linking matrix is degenerate, so H_1(M) has a free part; "
            "only pure-torsion manifolds are supported"
        )
    snf = smith_normal_form(L)
    # U L V = D  =>  relations D (V^-1 G) = 0, so h = V^-1 G.
    Vinv = inverse_rational(snf.V).to_integer()
    keep = [i for i, d in enumerate(snf.invariant_factors) if d >= 2]
    B = IntMatrix.from_rows([Vinv.row(i) for i in keep], m)
    return TorsionPresentation(
        torsion_numbers=tuple(snf.invariant_factors[i] for i in keep),
        B=B,
        p=abs(det_L),
        det_L=det_L,
        sigma=signature(L),
        m=m,
    )


def raw_linking_form(B: IntMatrix, Linv: RatMatrix) -> RatMatrix:
    """``B L^-1 B^T`` without reduction modulo the integers."""
    if B.cols != Linv.rows or not Linv.is_square:
        raise DimensionMismatch(f"generator matrix {B.shape} does not fit inverse {Linv.shape}")
    return B @ Linv @ B.T


def linking_form(T: TorsionPresentation, Linv: RatMatrix) -> LinkingForm:
    raw = raw_linking_form(T.B, Linv)
    Q = RatMatrix(raw.rows, raw.cols, tuple(x - math.floor(x) for x in raw.entries))
    return LinkingForm(Q, T.p)


def analyze(P: SurgeryPresentation) -> tuple[TorsionPresentation, LinkingForm]:
    """Torsion presentation and linking form in one call."""
    T = torsion_presentation(P)
    return T, linking_form(T, inverse_rational(P.linking_matrix))


def torsion_elements(T: TorsionPresentation):
    """Iterate over coefficient vectors ``n`` with ``0 <= n_i < p_i``."""
    return itertools.product(*(range(q) for q in T.torsion_numbers))


def self_linking_oracle(T: TorsionPresentation, L: IntMatrix, n: Sequence[int]) -> int:
    """Self-linking number ``N`` of ``p * gamma`` for ``gamma = sum n_i h_i``.

    Builds the band-sum coefficients ``c = n^T B (p L^-1)`` of the pushed-off
    framing components, evaluates ``N = -c^T L c`` with integer arithmetic and
    checks it against ``-p^2 n^T (B L^-1 B^T) n``.
    """
    n = [int(x) for x in n]
    if len(n) != T.w:
        raise DimensionMismatch(f"expected {T.w} coefficients, got {len(n)}")
    if L.rows != T.m or not L.is_square:
        raise DimensionMismatch("linking matrix does not match the torsion presentation")
    p = T.p
    Linv = inverse_rational(L)
    adj = (Linv * p).to_integer()
    nvec = IntMatrix.from_rows([n], T.w)
    c = nvec @ T.B @ adj
    N = -(c @ L @ c.T)[0, 0]

    quad = (nvec.to_rational() @ raw_linking_form(T.B, Linv) @ nvec.T)[0, 0]
    expected = -p * p * quad
    if expected != Fraction(N):
        raise OracleMismatch(f"self-linking {N} disagrees with -p^2 n^T Q n = {expected}")
    return N
