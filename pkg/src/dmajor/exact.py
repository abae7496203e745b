"""Exact rational scalars, vectors, permutations and dense matrices.

Every quantity in this package is a :class:`fractions.Fraction`; no floating
point enters any decision procedure.  Vectors and matrices are immutable and
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence, Union

RationalLike = Union[Fraction, int, str]


class DimensionMismatch(ValueError):
    """Operands have incompatible lengths or shapes."""


class NonPositiveWeight(ValueError):
    """A weight vector contains a zero or negative entry."""


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an integer, a "p/q" string or a finite decimal, exactly.

    >>> parse_rational("0.3")
    Fraction(3, 10)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot parse {value!r} as an exact rational")


@dataclass(frozen=True)
class RVec:
    """Immutable vector of exact rationals."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise ValueError("vectors must have length >= 1")
        if not all(isinstance(e, Fraction) for e in self.entries):
            raise TypeError("RVec entries must be Fractions; use RVec.of to coerce")

    @staticmethod
    def of(*values: RationalLike) -> "RVec":
        return RVec(tuple(parse_rational(v) for v in values))

    @staticmethod
    def parse(values: Iterable[RationalLike]) -> "RVec":
        return RVec(tuple(parse_rational(v) for v in values))

    @staticmethod
    def zeros(n: int) -> "RVec":
        return RVec((Fraction(0),) * n)

    @staticmethod
    def ones(n: int) -> "RVec":
        return RVec((Fraction(1),) * n)

    @staticmethod
    def unit(n: int, k: int) -> "RVec":
        """Standard basis vector e_k (0-based k)."""
        return RVec(tuple(Fraction(1 if i == k else 0) for i in range(n)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def _check_len(self, other: "RVec") -> None:
        if len(self) != len(other):
            raise DimensionMismatch(f"length {len(self)} vs {len(other)}")

    def __add__(self, other: "RVec") -> "RVec":
        self._check_len(other)
        return RVec(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RVec") -> "RVec":
        self._check_len(other)
        return RVec(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RVec":
        return RVec(tuple(-a for a in self.entries))

    def __mul__(self, t: RationalLike) -> "RVec":
        t = parse_rational(t)
        return RVec(tuple(a * t for a in self.entries))

    __rmul__ = __mul__

    def total(self) -> Fraction:
        """Sum of entries (the trace functional)."""
        return sum(self.entries, Fraction(0))

    def dot(self, other: "RVec") -> Fraction:
        self._check_len(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def one_norm(self) -> Fraction:
        return sum((abs(a) for a in self.entries), Fraction(0))

    def pos_part(self) -> "RVec":
        return RVec(tuple(max(a, Fraction(0)) for a in self.entries))

    def neg_part(self) -> "RVec":
        return RVec(tuple(max(-a, Fraction(0)) for a in self.entries))

    def sort_descending(self) -> tuple["RVec", "Permutation"]:
        """Sorted copy and the permutation tau with sorted[j] == self[tau(j)].

        Ties keep the smaller original index first.
        """
        order = sorted(range(len(self)), key=lambda i: (-self.entries[i], i))
        tau = Permutation(tuple(order))
        return tau.apply(self), tau

    def is_positive(self) -> bool:
        return all(a > 0 for a in self.entries)

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.entries) + ")"


def require_weights(d: RVec) -> RVec:
    """Validate a weight vector: strictly positive entries."""
    if not d.is_positive():
        raise NonPositiveWeight(f"weight vector must be strictly positive, got {d}")
    return d


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0, ..., n-1}; acts on vectors by (sigma . x)_j = x[sigma(j)]."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.image)
        if sorted(self.image) != list(range(n)):
            raise ValueError(f"not a permutation of 0..{n - 1}: {self.image}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, j: int) -> int:
        return self.image[j]

    def apply(self, v: RVec) -> RVec:
        if len(v) != self.n:
            raise DimensionMismatch(f"permutation on {self.n} points, vector length {len(v)}")
        return RVec(tuple(v.entries[j] for j in self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """(self compose other)(j) = self(other(j))."""
        if self.n != other.n:
            raise DimensionMismatch("permutations of different sizes")
        return Permutation(tuple(self.image[other.image[j]] for j in range(self.n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j, k in enumerate(self.image):
            inv[k] = j
        return Permutation(tuple(inv))

    def matrix(self) -> "RMatrix":
        """Matrix P with P[i][sigma(i)] = 1, so that P @ x == self.apply(x)."""
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i in range(self.n):
            rows[i][self.image[i]] = Fraction(1)
        return RMatrix(tuple(tuple(r) for r in rows))

    def one_based(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in self.image)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations in lexicographic image order."""
    for image in _itertools_permutations(range(n)):
        yield Permutation(image)


@dataclass(frozen=True)
class RMatrix:
    """Dense matrix of exact rationals, stored row-major."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix must have at least one row")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[RationalLike]]) -> "RMatrix":
        return RMatrix(tuple(tuple(parse_rational(v) for v in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "RMatrix":
        return RMatrix(
            tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def row(self, i: int) -> RVec:
        return RVec(self.rows[i])

    def col(self, j: int) -> RVec:
        return RVec(tuple(r[j] for r in self.rows))

    def transpose(self) -> "RMatrix":
        return RMatrix(tuple(zip(*self.rows)))

    def matvec(self, v: RVec) -> RVec:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} matrix times length-{len(v)} vector")
        return RVec(tuple(self.row(i).dot(v) for i in range(self.nrows)))

    def matmul(self, other: "RMatrix") -> "RMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions differ")
        cols = [other.col(j) for j in range(other.ncols)]
        return RMatrix(
            tuple(tuple(self.row(i).dot(c) for c in cols) for i in range(self.nrows))
        )

    def _eliminated(self) -> list[list[Fraction]]:
        """Row echelon form by exact Gaussian elimination."""
        work = [list(r) for r in self.rows]
        m, n = self.nrows, self.ncols
        pivot_row = 0
        for col in range(n):
            pivot = next((r for r in range(pivot_row, m) if work[r][col] != 0), None)
            if pivot is None:
                continue
            work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
            lead = work[pivot_row][col]
            for r in range(pivot_row + 1, m):
                factor = work[r][col]
                if factor == 0:
                    continue
                scale = factor / lead
                work[r] = [a - scale * b for a, b in zip(work[r], work[pivot_row])]
            pivot_row += 1
            if pivot_row == m:
                break
        return work

    def rank(self) -> int:
        return sum(1 for row in self._eliminated() if any(a != 0 for a in row))

    def solve(self, rhs: RVec) -> RVec | None:
        """Exact solution of a square system; None if singular."""
        n = self.nrows
        if self.ncols != n or len(rhs) != n:
            raise DimensionMismatch("solve requires a square system with a matching rhs")
        work = [list(self.rows[i]) + [rhs[i]] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return None
            work[col], work[pivot] = work[pivot], work[col]
            lead = work[col][col]
            work[col] = [a / lead for a in work[col]]
            for r in range(n):
                if r == col or work[r][col] == 0:
                    continue
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RVec(tuple(work[i][n] for i in range(n)))

    def inverse(self) -> "RMatrix | None":
        """Exact inverse; None if singular."""
        n = self.nrows
        if self.ncols != n:
            raise DimensionMismatch("only square matrices can be inverted")
        work = [list(self.rows[i]) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return None
            work[col], work[pivot] = work[pivot], work[col]
            lead = work[col][col]
            work[col] = [a / lead for a in work[col]]
            for r in range(n):
                if r == col or work[r][col] == 0:
                    continue
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RMatrix(tuple(tuple(work[i][n:]) for i in range(n)))

    def one_to_one_norm(self) -> Fraction:
        """Operator norm on (R^n, ||.||_1): the maximum absolute column sum."""
        return max(self.col(j).one_norm() for j in range(self.ncols))

    def __str__(self) -> str:
        return "\n".join("[" + "  ".join(str(a) for a in row) + "]" for row in self.rows)
