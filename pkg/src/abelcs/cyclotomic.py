"""Exact integer combinations of roots of unity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "CyclotomicSum",
    "ComplexValue",
    "evaluate",
    "is_exactly_zero",
    "cyclotomic_polynomial",
    "unit_root",
]


@dataclass(frozen=True)
class ComplexValue:
    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError(f"non-finite complex value ({self.re}, {self.im})")
        object.__setattr__(self, "re", float(self.re))
        object.__setattr__(self, "im", float(self.im))

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        return cls(z.real, z.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    def __abs__(self):
        return math.hypot(self.re, self.im)


@dataclass(frozen=True, eq=False)
class CyclotomicSum:
    """``sum_r multiplicities[r] * exp(2 pi i r / modulus)``."""

    modulus: int
    multiplicities: np.ndarray

    def __post_init__(self):
        mult = np.array(self.multiplicities, dtype=np.int64)
        if self.modulus < 1 or mult.shape != (self.modulus,):
            raise ValueError(f"need {self.modulus} multiplicities, got shape {mult.shape}")
        mult.flags.writeable = False
        object.__setattr__(self, "multiplicities", mult)

    @classmethod
    def from_phases(cls, modulus: int, residues) -> "CyclotomicSum":
        """One term ``exp(2 pi i r / modulus)`` per residue ``r`` (taken mod ``modulus``)."""
        mult = np.zeros(modulus, dtype=np.int64)
        for r in residues:
            mult[r % modulus] += 1
        return cls(modulus, mult)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicSum):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(
            self.multiplicities, other.multiplicities
        )

    __hash__ = None

    @property
    def term_count(self) -> int:
        return int(self.multiplicities.sum())

    def phases(self) -> list[tuple[Fraction, int]]:
        """Nonzero terms as ``(r / modulus, multiplicity)`` in increasing phase."""
        return [
            (Fraction(int(r), self.modulus), int(self.multiplicities[r]))
            for r in np.flatnonzero(self.multiplicities)
        ]

    def canonical(self) -> "CyclotomicSum":
        """Same value over the smallest modulus that carries every phase."""
        nz = np.flatnonzero(self.multiplicities)
        g = math.gcd(self.modulus, *map(int, nz))
        if g == 1:
            return self
        return CyclotomicSum(self.modulus // g, self.multiplicities[::g])

    def conjugate(self) -> "CyclotomicSum":
        mult = np.roll(self.multiplicities[::-1], 1)
        return CyclotomicSum(self.modulus, mult)


def unit_root(r, n) -> complex:
    """``exp(2 pi i r / n)`` for integers, exact at multiples of a quarter turn."""
    r %= n
    q, rem = divmod(4 * r, n)
    if rem == 0:
        return (1, 1j, -1, -1j)[q]
    if 2 * r > n:
        r -= n
    theta = 2 * math.pi * r / n
    return complex(math.cos(theta), math.sin(theta))


def evaluate(c: CyclotomicSum) -> ComplexValue:
    n = c.modulus
    r = np.flatnonzero(c.multiplicities)
    mult = c.multiplicities[r].astype(np.float64)
    sym = np.where(2 * r > n, r - n, r)
    theta = 2 * np.pi * sym / n
    cos, sin = np.cos(theta), np.sin(theta)
    quarter = (4 * r) % n == 0
    q = (4 * r[quarter]) // n
    cos[quarter] = np.array([1.0, 0.0, -1.0, 0.0])[q]
    sin[quarter] = np.array([0.0, 1.0, 0.0, -1.0])[q]
    return ComplexValue(math.fsum(mult * cos), math.fsum(mult * sin))


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial; coefficients low degree first."""
    num = list(num)
    d = len(den) - 1
    if len(num) <= d:
        return [0], num
    quot = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        coef = num[i]
        if coef:
            quot[i - d] = coef
            for j in range(d + 1):
                num[i - d + j] -= coef * den[j]
    return quot, num[:d]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the ``n``-th cyclotomic polynomial, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem), "x^n - 1 not divisible by a cyclotomic factor"
    return tuple(poly)


def _remainder_is_zero(f: list[int], phi: tuple[int, ...]) -> bool:
    d = len(phi) - 1
    if len(f) <= d:
        return not any(f)
    limit = 1 << 40
    den = np.array(phi, dtype=np.int64)
    if int(np.abs(den).max()) < (1 << 20) and max(map(abs, f)) < limit:
        num = np.array(f, dtype=np.int64)
        for i in range(len(num) - 1, d - 1, -1):
            coef = num[i]
            if coef:
                seg = num[i - d:i + 1]
                seg -= coef * den
                if np.abs(seg).max() >= limit:
                    break
        else:
            return not num[:d].any()
    _, rem = _poly_divmod(f, list(phi))
    return not any(rem)


def is_exactly_zero(c: CyclotomicSum) -> bool:
    """Decide whether the sum is the algebraic number 0.

    The sum is ``f(zeta)`` for a primitive ``N``-th root ``zeta``, and
    ``f(zeta) = 0`` iff the cyclotomic polynomial ``Phi_N`` divides ``f``.
    """
    c = c.canonical()
    return _remainder_is_zero([int(x) for x in c.multiplicities], cyclotomic_polynomial(c.modulus))
