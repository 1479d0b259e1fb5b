"""Immutable exact matrices over the integers and the rationals."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class _ExactMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(self._coerce(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def _coerce(x):
        raise NotImplementedError

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionMismatch(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Iterable):
        values = list(values)
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self):
        return type(self)(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)
        ))

    T = property(transpose)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def block_sum(self, other):
        """Block-diagonal concatenation ``self ⊕ other``."""
        cls = IntMatrix if isinstance(self, IntMatrix) and isinstance(other, IntMatrix) else RatMatrix
        r, c = self.rows + other.rows, self.cols + other.cols
        out = [[0] * c for _ in range(r)]
        for i in range(self.rows):
            out[i][:self.cols] = self.row(i)
        for i in range(other.rows):
            out[self.rows + i][self.cols:] = other.row(i)
        return cls(r, c, tuple(x for row in out for x in row))

    def __neg__(self):
        return type(self)(self.rows, self.cols, tuple(-x for x in self.entries))

    def __matmul__(self, other):
        if not isinstance(other, _ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cls = IntMatrix if isinstance(self, IntMatrix) and isinstance(other, IntMatrix) else RatMatrix
        ocols = [other.col(j) for j in range(other.cols)]
        return cls(self.rows, other.cols, tuple(
            sum(map(operator.mul, self.row(i), ocols[j]), 0)
            for i in range(self.rows) for j in range(other.cols)
        ))

    def __repr__(self):
        return f"{type(self).__name__}.from_rows({self.to_rows()!r})"


class IntMatrix(_ExactMatrix):
    """Dense matrix of arbitrary-precision integers, stored row-major."""

    @staticmethod
    def _coerce(x):
        return operator.index(x)

    def to_rational(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, self.entries)


class RatMatrix(_ExactMatrix):
    """Dense matrix of exact rationals; entries are always reduced ``Fraction``s."""

    @staticmethod
    def _coerce(x):
        return x if isinstance(x, Fraction) else Fraction(x)

    def __mul__(self, scalar):
        return RatMatrix(self.rows, self.cols, tuple(x * scalar for x in self.entries))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def to_integer(self) -> IntMatrix:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntMatrix(self.rows, self.cols, tuple(x.numerator for x in self.entries))
