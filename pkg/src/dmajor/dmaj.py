"""Decision procedures for majorization relative to a positive weight vector.

``x`` is d-majorized by ``y`` when some column-stochastic matrix fixing d
maps y to x.  Three finite criteria decide the relation without producing
the matrix; the witness construction solves the vectorized feasibility
system by an exact phase-1 simplex.  The relation is a preorder, not a
partial order: distinct vectors can majorize each other.

The finite criteria subsume their continuum counterparts: comparing
positive parts at the 2n ratio breakpoints is equivalent to comparing at
every real shift (and to testing every continuous convex function), so
nothing is lost by checking breakpoints only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DimensionMismatch, Permutation, RMatrix, RVec, require_weights
from .lp import LinearProgram, feasible

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class StochMatrix:
    """Column-stochastic matrix; the witness object of the relation."""

    entries: RMatrix

    def __post_init__(self) -> None:
        m = self.entries
        if m.nrows != m.ncols:
            raise ValueError("stochastic matrices are square")
        for i in range(m.nrows):
            for j in range(m.ncols):
                if m.rows[i][j] < 0:
                    raise ValueError(f"negative entry at ({i}, {j})")
        for j in range(m.ncols):
            if m.col(j).total() != 1:
                raise ValueError(f"column {j} does not sum to 1")

    @property
    def n(self) -> int:
        return self.entries.nrows

    def apply(self, v: RVec) -> RVec:
        return self.entries.matvec(v)

    def fixes(self, d: RVec) -> bool:
        return self.apply(d) == d

    @staticmethod
    def identity(n: int) -> "StochMatrix":
        return StochMatrix(RMatrix.identity(n))


def _check_pair(x: RVec, y: RVec, d: RVec) -> None:
    if len(x) != len(y) or len(x) != len(d):
        raise DimensionMismatch(f"lengths {len(x)}, {len(y)}, {len(d)} differ")
    require_weights(d)


def _positive_part_sum(v: RVec, t: Fraction, d: RVec) -> Fraction:
    return sum((max(v[j] - t * d[j], ZERO) for j in range(len(v))), ZERO)


def dmaj_by_positive_parts(x: RVec, y: RVec, d: RVec) -> bool:
    """Positive-part comparison at the 2n breakpoints x_i/d_i and y_i/d_i.

    The trace equality is checked explicitly on top of the breakpoint
    inequalities so that all deciders share one contract.
    """
    _check_pair(x, y, d)
    if x.total() != y.total():
        return False
    breakpoints = {x[i] / d[i] for i in range(len(x))}
    breakpoints.update(y[i] / d[i] for i in range(len(y)))
    return all(
        _positive_part_sum(x, t, d) <= _positive_part_sum(y, t, d) for t in breakpoints
    )


def dmaj_by_onenorm(x: RVec, y: RVec, d: RVec) -> bool:
    """Trace equality plus the n one-norm tests at t = y_i/d_i."""
    _check_pair(x, y, d)
    if x.total() != y.total():
        return False
    for i in range(len(y)):
        t = y[i] / d[i]
        shifted = d * t
        if (x - shifted).one_norm() > (y - shifted).one_norm():
            return False
    return True


def dmaj_by_curve(x: RVec, y: RVec, d: RVec) -> bool:
    """Trace equality plus the n-1 elbow inequalities of the curve form.

    With sigma ordering x/d nonincreasingly, each prefix sum of x must stay
    below the minimum over i of sum((y - (y_i/d_i) d)_+) + (y_i/d_i) times
    the matching prefix sum of d.
    """
    _check_pair(x, y, d)
    if x.total() != y.total():
        return False
    n = len(x)
    order = sorted(range(n), key=lambda i: (-(x[i] / d[i]), i))
    ratios = [y[i] / d[i] for i in range(n)]
    offsets = [_positive_part_sum(y, t, d) for t in ratios]
    run_x = run_d = ZERO
    for j in range(n - 1):
        run_x += x[order[j]]
        run_d += d[order[j]]
        bound = min(offsets[i] + ratios[i] * run_d for i in range(n))
        if run_x > bound:
            return False
    return True


def find_witness(x: RVec, y: RVec, d: RVec) -> StochMatrix | None:
    """A column-stochastic A with A d = d and A y = x, or None.

    Solved as exact phase-1 feasibility on the n^2 nonnegative matrix
    entries with the 3n defining equality rows; one always-redundant
    weight row is dropped.
    """
    _check_pair(x, y, d)
    n = len(x)
    nv = n * n  # variable (i, j) at index i * n + j

    def unit_row() -> list[Fraction]:
        return [ZERO] * nv

    eq: list[tuple[list[Fraction], Fraction]] = []
    for i in range(n):  # image rows: sum_j A_ij y_j = x_i
        row = unit_row()
        for j in range(n):
            row[i * n + j] = y[j]
        eq.append((row, x[i]))
    for i in range(n - 1):  # weight rows: sum_j A_ij d_j = d_i (last is redundant)
        row = unit_row()
        for j in range(n):
            row[i * n + j] = d[j]
        eq.append((row, d[i]))
    for j in range(n):  # column sums: sum_i A_ij = 1
        row = unit_row()
        for i in range(n):
            row[i * n + j] = ONE
        eq.append((row, ONE))

    lp = LinearProgram.build([0] * nv, eq=eq, nonneg=True)
    point = feasible(lp)
    if point is None:
        return None
    rows = tuple(tuple(point[i * n + j] for j in range(n)) for i in range(n))
    return StochMatrix(RMatrix(rows))


def similarly_d_ordered(x: RVec, y: RVec, d: RVec) -> Permutation | None:
    """A permutation making both x/d and y/d nonincreasing, if one exists.

    Sorting by x/d with y/d as tie-break realizes a common refinement
    whenever there is one; the result is verified before returning.
    """
    _check_pair(x, y, d)
    n = len(x)
    rx = [x[i] / d[i] for i in range(n)]
    ry = [y[i] / d[i] for i in range(n)]
    order = sorted(range(n), key=lambda i: (-rx[i], -ry[i], i))
    for a, b in zip(order, order[1:]):
        if ry[a] < ry[b]:
            return None
    return Permutation(tuple(order))


def minimal_element(trace: Fraction, d: RVec) -> RVec:
    """The unique minimum on the trace plane: the rescaled weight vector."""
    require_weights(d)
    return d * (trace / d.total())


def maximal_element(d: RVec) -> tuple[RVec, bool]:
    """A maximal point of the scaled simplex and whether it is unique.

    The mass sits on a coordinate with minimal weight (smallest index on
    ties); uniqueness holds exactly when that minimal weight is strict.
    """
    require_weights(d)
    smallest = min(d.entries)
    k = d.entries.index(smallest)
    unique = sum(1 for v in d.entries if v == smallest) == 1
    return RVec.unit(len(d), k) * d.total(), unique
