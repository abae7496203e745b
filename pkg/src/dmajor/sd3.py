"""Closed-form extreme points of the 3x3 d-stochastic matrices.

For strictly ordered weights d1 > d2 > d3 > 0 the extreme points of the set
{A >= 0, columns summing to 1, A d = d} are known explicitly: 10 matrices
in the wide regime d1 >= d2 + d3 and 13 in the narrow regime d1 < d2 + d3.
Weights with repeated entries are rejected: their reduced catalogs (7, 10
or 6 matrices) are not instantiated here.

No catalog is attempted beyond dimension 3.  For n x n the extreme-point
count is only known to lie between n! and binom(n^2, 2n-1), which rules
out closed-form lists of this kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import RMatrix, RVec, require_weights
from .dmaj import StochMatrix

ZERO = Fraction(0)
ONE = Fraction(1)

DEGENERATE_MESSAGE = (
    "the catalog requires strictly ordered weights d1 > d2 > d3; with "
    "repeated entries the extreme-point set shrinks (7, 10 or 6 matrices) "
    "and is not instantiated here"
)


@dataclass(frozen=True)
class Sd3Case:
    d: RVec
    regime: Literal["wide", "narrow"]


def classify(d: RVec) -> Sd3Case:
    require_weights(d)
    if len(d) != 3:
        raise ValueError("the catalog covers dimension 3 only")
    d1, d2, d3 = d.entries
    if not (d1 > d2 > d3):
        raise ValueError(DEGENERATE_MESSAGE)
    regime: Literal["wide", "narrow"] = "wide" if d1 >= d2 + d3 else "narrow"
    return Sd3Case(d, regime)


def _catalog(d1: Fraction, d2: Fraction, d3: Fraction, wide: bool) -> list[list[list[Fraction]]]:
    shared = [
        [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]],
        [[ONE, ZERO, ZERO], [ZERO, 1 - d3 / d2, ONE], [ZERO, d3 / d2, ZERO]],
        [[1 - d3 / d1, ZERO, ONE], [ZERO, ONE, ZERO], [d3 / d1, ZERO, ZERO]],
        [[1 - d2 / d1, ONE, ZERO], [(d2 - d3) / d1, ZERO, ONE], [d3 / d1, ZERO, ZERO]],
        [[1 - d3 / d1, d3 / d2, ZERO], [ZERO, 1 - d3 / d2, ONE], [d3 / d1, ZERO, ZERO]],
        [[1 - d2 / d1, ONE, ZERO], [d2 / d1, ZERO, ZERO], [ZERO, ZERO, ONE]],
        [[1 - d3 / d1, ZERO, ONE], [d3 / d1, 1 - d3 / d2, ZERO], [ZERO, d3 / d2, ZERO]],
        [[1 - (d2 - d3) / d1, 1 - d3 / d2, ZERO], [(d2 - d3) / d1, ZERO, ONE], [ZERO, d3 / d2, ZERO]],
        [[1 - d2 / d1, 1 - d3 / d2, ONE], [d2 / d1, ZERO, ZERO], [ZERO, d3 / d2, ZERO]],
    ]
    if wide:
        shared.append(
            [[1 - (d2 + d3) / d1, ONE, ONE], [d2 / d1, ZERO, ZERO], [d3 / d1, ZERO, ZERO]]
        )
    else:
        shared.extend(
            [
                [[ZERO, ONE, (d1 - d2) / d3], [d2 / d1, ZERO, ZERO], [1 - d2 / d1, ZERO, 1 - (d1 - d2) / d3]],
                [[ZERO, (d1 - d3) / d2, ONE], [1 - d3 / d1, 1 - (d1 - d3) / d2, ZERO], [d3 / d1, ZERO, ZERO]],
                [[ZERO, (d1 - d3) / d2, ONE], [d2 / d1, ZERO, ZERO], [1 - d2 / d1, 1 - (d1 - d3) / d2, ZERO]],
                [[ZERO, ONE, (d1 - d2) / d3], [1 - d3 / d1, ZERO, 1 - (d1 - d2) / d3], [d3 / d1, ZERO, ZERO]],
            ]
        )
    return shared


def sd3_extremes(d: RVec) -> list[StochMatrix]:
    """The 10 (wide) or 13 (narrow) extreme matrices instantiated at d."""
    case = classify(d)
    d1, d2, d3 = d.entries
    matrices = [
        StochMatrix(RMatrix(tuple(tuple(row) for row in rows)))
        for rows in _catalog(d1, d2, d3, case.regime == "wide")
    ]
    for m in matrices:
        if not m.fixes(d):
            raise AssertionError("catalog matrix does not fix the weight vector")
    return matrices


def verify_extremality(a: StochMatrix, d: RVec) -> bool:
    """Extreme-point test via the active-constraint null space.

    A is extreme exactly when the only perturbation H with zero column
    sums, H d = 0 and H vanishing wherever an entry of A sits at 0 or 1
    is H = 0; two-sided movement is impossible at those pinned entries.
    """
    require_weights(d)
    n = a.n
    if len(d) != n:
        raise ValueError("weight vector length does not match the matrix")
    if not a.fixes(d):
        raise ValueError("matrix is not d-stochastic for the given weights")
    free = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if a.entries.rows[i][j] != 0 and a.entries.rows[i][j] != 1
    ]
    if not free:
        return True
    rows: list[list[Fraction]] = []
    for j in range(n):  # column sums of H vanish
        rows.append([ONE if jj == j else ZERO for (_, jj) in free])
    for i in range(n):  # H d = 0
        rows.append([d[jj] if ii == i else ZERO for (ii, jj) in free])
    return RMatrix(tuple(tuple(r) for r in rows)).rank() == len(free)
