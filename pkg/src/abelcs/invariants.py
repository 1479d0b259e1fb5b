"""U(1) Chern-Simons partition function, abelian Reshetikhin-Turaev invariant,
and the relation ``Z_k = sqrt(p_1 ... p_w) * I_k`` between them.

``Z_k`` is summed over the torsion group using the linking form; ``I_k`` is
summed by brute force over ``(Z/2k)^m`` using the linking matrix.  The two
paths share nothing beyond the presentation, so agreement is a real check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .cyclotomic import ComplexValue, CyclotomicSum, evaluate, is_exactly_zero, unit_root
from .errors import (
    BudgetExceeded,
    DegenerateForm,
    DimensionMismatch,
    InvalidLevel,
    PreconditionViolated,
)
from .homology import LinkingForm, analyze
from .linalg import determinant, signature
from .surgery import SurgeryPresentation

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_TOLERANCE",
    "InvariantReport",
    "ReciprocityResult",
    "partition_function",
    "rt_gauss_sum",
    "rt_prefactor",
    "rt_invariant",
    "reciprocity_check",
    "verify_relation",
]

DEFAULT_BUDGET = 10**8
DEFAULT_TOLERANCE = 1e-9


def _check_level(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidLevel(f"level k must be a positive integer, got {k!r}")


def partition_function(Q: LinkingForm, torsion, k: int, *, budget: int = DEFAULT_BUDGET) -> CyclotomicSum:
    """Exact ``Z_k = sum_n exp(2 pi i k n^T Q n)`` over ``0 <= n_i < p_i``.

    Returned over modulus ``p`` (``1`` for trivial torsion).
    """
    _check_level(k)
    torsion = tuple(int(t) for t in torsion)
    if len(torsion) != Q.w:
        raise DimensionMismatch(f"linking form has rank {Q.w}, torsion has {len(torsion)} factors")
    if not torsion:
        return CyclotomicSum(1, [1])
    size = math.prod(torsion)
    if size > budget:
        raise BudgetExceeded(size, budget)
    N = Q.p
    A = [[int(x) for x in row] for row in Q.numerators().to_rows()]
    counts = _kernels.quadratic_phase_counts(A, torsion, k, N)
    return CyclotomicSum(N, counts)


def rt_gauss_sum(L, k: int, *, budget: int = DEFAULT_BUDGET) -> CyclotomicSum:
    """``sum_{q in (Z/2k)^m} exp(-2 pi i q^T L q / 4k)`` over modulus ``4k``."""
    _check_level(k)
    m = L.rows
    size = (2 * k) ** m
    if size > budget:
        raise BudgetExceeded(size, budget)
    N = 4 * k
    A = [[x % N for x in row] for row in L.to_rows()]
    counts = _kernels.quadratic_phase_counts(A, [2 * k] * m, -1, N)
    return CyclotomicSum(N, counts)


def rt_prefactor(m: int, sigma: int, k: int) -> complex:
    """``(2k)^(-m/2) exp(i pi sigma / 4)``."""
    return unit_root(sigma, 8) * (2 * k) ** (-m / 2)


def rt_invariant(P: SurgeryPresentation, k: int, *, budget: int = DEFAULT_BUDGET) -> ComplexValue:
    _check_level(k)
    L = P.linking_matrix
    if determinant(L) == 0:
        raise DegenerateForm("RT invariant needs a nondegenerate linking matrix")
    gauss = rt_gauss_sum(L, k, budget=budget)
    return ComplexValue.of(rt_prefactor(P.m, signature(L), k) * complex(evaluate(gauss)))


@dataclass(frozen=True)
class ReciprocityResult:
    lhs: ComplexValue
    rhs: ComplexValue
    agree: bool


def reciprocity_check(a: int, b: int, c: int) -> ReciprocityResult:
    """Evaluate both sides of the Gauss-sum reciprocity formula

        sum_{n<|c|} exp(-i pi (a n^2 + b n) / c)
            = sqrt|c/a| exp(-i pi (|ac| - b^2) / 4ac) sum_{n<|a|} exp(i pi (c n^2 + b n) / a)

    independently.  Valid for ``ac != 0`` with ``ac + b`` even.
    """
    a, b, c = int(a), int(b), int(c)
    if a * c == 0 or (a * c + b) % 2:
        raise PreconditionViolated(f"need ac != 0 and ac + b even, got a={a}, b={b}, c={c}")
    # exp(i pi x / y) = exp(2 pi i x sgn(y) / 2|y|)
    sa, sc = (1 if a > 0 else -1), (1 if c > 0 else -1)
    lhs = CyclotomicSum.from_phases(
        2 * abs(c), (-(a * n * n + b * n) * sc for n in range(abs(c)))
    )
    inner = CyclotomicSum.from_phases(
        2 * abs(a), ((c * n * n + b * n) * sa for n in range(abs(a)))
    )
    turn = Fraction(-(abs(a * c) - b * b), 8 * a * c)
    pref = math.sqrt(abs(c) / abs(a)) * unit_root(turn.numerator, turn.denominator)
    lhs_v = evaluate(lhs)
    rhs_v = ComplexValue.of(pref * complex(evaluate(inner)))
    agree = abs(complex(lhs_v) - complex(rhs_v)) <= DEFAULT_TOLERANCE * (1 + abs(lhs_v))
    return ReciprocityResult(lhs_v, rhs_v, agree)


@dataclass(frozen=True)
class InvariantReport:
    name: str | None
    m: int
    det: int
    signature: int
    torsion_numbers: tuple[int, ...]
    k: int
    z_sum: CyclotomicSum
    z_k: ComplexValue
    z_exact_zero: bool
    i_sum: CyclotomicSum
    i_k: ComplexValue
    i_exact_zero: bool
    sqrt_p: float
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return (
            self.residual <= self.tolerance * (1 + abs(self.z_k))
            and self.z_exact_zero == self.i_exact_zero
        )


def verify_relation(
    P: SurgeryPresentation, k: int, tol: float = DEFAULT_TOLERANCE, *, budget: int = DEFAULT_BUDGET
) -> InvariantReport:
    """Compute ``Z_k`` and ``I_k`` independently and compare ``Z_k`` with ``sqrt(p) I_k``.

    Besides the numeric residual, exact vanishing of the two cyclotomic sums
    must agree (``I_k`` is a nonzero multiple of its Gauss sum).
    """
    _check_level(k)
    T, Q = analyze(P)
    z_sum = partition_function(Q, T.torsion_numbers, k, budget=budget)
    z = evaluate(z_sum)
    i_sum = rt_gauss_sum(P.linking_matrix, k, budget=budget)
    i = ComplexValue.of(rt_prefactor(P.m, T.sigma, k) * complex(evaluate(i_sum)))
    sqrt_p = math.sqrt(T.p)
    return InvariantReport(
        name=P.name,
        m=P.m,
        det=T.det_L,
        signature=T.sigma,
        torsion_numbers=T.torsion_numbers,
        k=k,
        z_sum=z_sum,
        z_k=z,
        z_exact_zero=is_exactly_zero(z_sum),
        i_sum=i_sum,
        i_k=i,
        i_exact_zero=is_exactly_zero(i_sum),
        sqrt_p=sqrt_p,
        residual=abs(complex(z) - sqrt_p * complex(i)),
        tolerance=tol,
    )
