"""Exact rational linear programming.

A small dense two-phase simplex with Bland's anti-cycling rule, used for
feasibility questions (witness construction, emptiness detection, convex-hull
membership) and for 1-norm point-to-polytope distances.  All pivots are done
in Fraction arithmetic; answers are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import RationalLike, parse_rational

Row = tuple[Fraction, ...]


class InfeasibleProgram(ValueError):
    """The constraint system has no solution."""


class UnboundedProgram(ValueError):
    """The objective is unbounded below on the feasible set."""


def _coerce_row(row: Sequence[RationalLike]) -> Row:
    return tuple(parse_rational(v) for v in row)


@dataclass(frozen=True)
class LinearProgram:
    """min objective . x  subject to  eq_rows x = eq_rhs,  ub_rows x <= ub_rhs.

    ``nonneg[j]`` marks variable j as constrained to x_j >= 0; other
    variables are free.
    """

    objective: Row
    eq_rows: tuple[Row, ...] = ()
    eq_rhs: Row = ()
    ub_rows: tuple[Row, ...] = ()
    ub_rhs: Row = ()
    nonneg: tuple[bool, ...] = ()

    @staticmethod
    def build(
        objective: Sequence[RationalLike],
        eq: Sequence[tuple[Sequence[RationalLike], RationalLike]] = (),
        ub: Sequence[tuple[Sequence[RationalLike], RationalLike]] = (),
        nonneg: Sequence[bool] | bool = True,
    ) -> "LinearProgram":
        obj = _coerce_row(objective)
        nvars = len(obj)
        if isinstance(nonneg, bool):
            flags = (nonneg,) * nvars
        else:
            flags = tuple(nonneg)
        eq_rows = tuple(_coerce_row(r) for r, _ in eq)
        eq_rhs = tuple(parse_rational(b) for _, b in eq)
        ub_rows = tuple(_coerce_row(r) for r, _ in ub)
        ub_rhs = tuple(parse_rational(b) for _, b in ub)
        lp = LinearProgram(obj, eq_rows, eq_rhs, ub_rows, ub_rhs, flags)
        lp._validate()
        return lp

    def _validate(self) -> None:
        nvars = len(self.objective)
        if len(self.nonneg) != nvars:
            raise ValueError("nonneg flags must match the variable count")
        for row in self.eq_rows + self.ub_rows:
            if len(row) != nvars:
                raise ValueError("constraint row width must match the variable count")
        if len(self.eq_rows) != len(self.eq_rhs) or len(self.ub_rows) != len(self.ub_rhs):
            raise ValueError("constraint rows and right-hand sides must pair up")

    @property
    def nvars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    assignment: tuple[Fraction, ...] | None = None
    # Farkas certificate (one multiplier per constraint row, equality rows
    # first) produced when status == "infeasible"; see verify_farkas.
    certificate: tuple[Fraction, ...] | None = None


ZERO = Fraction(0)
ONE = Fraction(1)


class _Standardized:
    """Equality standard form min c.z, A z = b, z >= 0 plus back-mapping."""

    def __init__(self, lp: LinearProgram) -> None:
        self.lp = lp
        cols: list[tuple[int, int]] = []  # (original var, sign)
        for j, nn in enumerate(lp.nonneg):
            cols.append((j, +1))
            if not nn:
                cols.append((j, -1))
        self.cols = cols
        self.nslack = len(lp.ub_rows)
        self.ncols = len(cols) + self.nslack
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.flipped: list[bool] = []
        all_rows = list(zip(lp.eq_rows, lp.eq_rhs)) + list(zip(lp.ub_rows, lp.ub_rhs))
        for ridx, (row, b) in enumerate(all_rows):
            out = [row[j] * sign for (j, sign) in cols]
            out.extend(ONE if ridx - len(lp.eq_rows) == s else ZERO for s in range(self.nslack))
            flip = b < 0
            if flip:
                out = [-v for v in out]
                b = -b
            self.rows.append(out)
            self.rhs.append(b)
            self.flipped.append(flip)
        self.cost = [lp.objective[j] * sign for (j, sign) in cols] + [ZERO] * self.nslack

    def recover(self, z: Sequence[Fraction]) -> tuple[Fraction, ...]:
        x = [ZERO] * self.lp.nvars
        for value, (j, sign) in zip(z, self.cols):
            x[j] += value * sign
        return tuple(x)


def _pivot(tableau: list[list[Fraction]], basis: list[int], prow: int, pcol: int) -> None:
    lead = tableau[prow][pcol]
    tableau[prow] = [v / lead for v in tableau[prow]]
    prow_vals = tableau[prow]
    for r, row in enumerate(tableau):
        if r == prow:
            continue
        factor = row[pcol]
        if factor == 0:
            continue
        tableau[r] = [a - factor * b for a, b in zip(row, prow_vals)]
    basis[prow] = pcol


def _reduced_costs(
    tableau: list[list[Fraction]], basis: list[int], cost: Sequence[Fraction]
) -> list[Fraction]:
    ncols = len(tableau[0]) - 1
    reduced = list(cost)
    for r, bv in enumerate(basis):
        cb = cost[bv]
        if cb == 0:
            continue
        row = tableau[r]
        for j in range(ncols):
            if row[j] != 0:
                reduced[j] -= cb * row[j]
    return reduced


def _simplex(
    tableau: list[list[Fraction]],
    basis: list[int],
    cost: Sequence[Fraction],
    banned: frozenset[int] = frozenset(),
) -> bool:
    """Minimize cost over the tableau with Bland's rule.

    Returns False when an unbounded descent direction is found, else True.
    """
    ncols = len(tableau[0]) - 1
    while True:
        reduced = _reduced_costs(tableau, basis, cost)
        enter = next(
            (j for j in range(ncols) if j not in banned and reduced[j] < 0), None
        )
        if enter is None:
            return True
        best_ratio: Fraction | None = None
        leave = -1
        for r, row in enumerate(tableau):
            coef = row[enter]
            if coef <= 0:
                continue
            ratio = row[-1] / coef
            if best_ratio is None or ratio < best_ratio or (
                ratio == best_ratio and basis[r] < basis[leave]
            ):
                best_ratio = ratio
                leave = r
        if best_ratio is None:
            return False
        _pivot(tableau, basis, leave, enter)


def solve(lp: LinearProgram) -> LpResult:
    """Two-phase exact simplex; returns status, optimum and certificate."""
    lp._validate()
    std = _Standardized(lp)
    m = len(std.rows)
    ncols = std.ncols

    if m == 0:
        # Unconstrained: optimum is 0 iff no profitable column exists.
        if any(c < 0 for c in std.cost):
            return LpResult("unbounded")
        return LpResult("optimal", ZERO, std.recover([ZERO] * ncols))

    # Phase 1: artificial basis.
    tableau = [std.rows[r] + [ZERO] * m + [std.rhs[r]] for r in range(m)]
    for r in range(m):
        tableau[r][ncols + r] = ONE
    basis = [ncols + r for r in range(m)]
    phase1_cost = [ZERO] * ncols + [ONE] * m
    _simplex(tableau, basis, phase1_cost)

    art_value = sum((tableau[r][-1] for r in range(m) if basis[r] >= ncols), ZERO)
    if art_value > 0:
        # Simplex multipliers of the phase-1 optimum give a Farkas witness
        # w with A^T w <= 0 and b^T w > 0 for the standardized system.
        reduced = _reduced_costs(tableau, basis, phase1_cost)
        w = [ONE - reduced[ncols + r] for r in range(m)]
        w = [-wi if std.flipped[r] else wi for r, wi in enumerate(w)]
        return LpResult("infeasible", certificate=tuple(w))

    # Drive remaining artificials out of the basis.  Their rows have rhs 0,
    # so pivoting there changes no right-hand side; rows with no structural
    # entry left are redundant and stay inert.
    for r in range(m):
        if basis[r] < ncols:
            continue
        col = next((j for j in range(ncols) if tableau[r][j] != 0), None)
        if col is not None:
            _pivot(tableau, basis, r, col)

    # Phase 2: any artificial still basic sits in an all-zero redundant row
    # and can never change value; entering is banned for artificial columns.
    banned = frozenset(range(ncols, ncols + m))
    bounded = _simplex(tableau, basis, list(std.cost) + [ZERO] * m, banned)
    if not bounded:
        return LpResult("unbounded")

    z = [ZERO] * ncols
    for r, bv in enumerate(basis):
        if bv < ncols:
            z[bv] = tableau[r][-1]
    assignment = std.recover(z)
    value = sum((c * v for c, v in zip(lp.objective, assignment)), ZERO)
    return LpResult("optimal", value, assignment)


def feasible(lp: LinearProgram) -> tuple[Fraction, ...] | None:
    """A point satisfying the constraints, or None when there is none."""
    probe = LinearProgram(
        (ZERO,) * lp.nvars, lp.eq_rows, lp.eq_rhs, lp.ub_rows, lp.ub_rhs, lp.nonneg
    )
    result = solve(probe)
    return result.assignment if result.status == "optimal" else None


def minimize(lp: LinearProgram) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Exact optimum; raises on infeasible or unbounded programs."""
    result = solve(lp)
    if result.status == "infeasible":
        raise InfeasibleProgram("constraints admit no solution")
    if result.status == "unbounded":
        raise UnboundedProgram("objective is unbounded below")
    assert result.value is not None and result.assignment is not None
    return result.value, result.assignment


def verify_farkas(lp: LinearProgram, w: Sequence[Fraction]) -> bool:
    """Check a certificate of infeasibility by direct substitution.

    With multipliers w (equality rows first, then inequality rows) the
    combined row y = w^T A must satisfy y_j <= 0 for nonnegative variables
    and y_j = 0 for free ones, w must be <= 0 on inequality rows, and
    w . b must be > 0.
    """
    neq = len(lp.eq_rows)
    rows = lp.eq_rows + lp.ub_rows
    rhs = lp.eq_rhs + lp.ub_rhs
    if len(w) != len(rows):
        return False
    if any(w[neq + i] > 0 for i in range(len(lp.ub_rows))):
        return False
    for j in range(lp.nvars):
        combined = sum((w[r] * rows[r][j] for r in range(len(rows))), ZERO)
        if lp.nonneg[j]:
            if combined > 0:
                return False
        elif combined != 0:
            return False
    value = sum((w[r] * rhs[r] for r in range(len(rows))), ZERO)
    return value > 0


def in_convex_hull(point: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Exact membership of a point in the convex hull of finitely many points."""
    if not generators:
        return False
    n = len(point)
    m = len(generators)
    eq: list[tuple[list[Fraction], Fraction]] = []
    for k in range(n):
        eq.append(([parse_rational(g[k]) for g in generators], parse_rational(point[k])))
    eq.append(([ONE] * m, ONE))
    lp = LinearProgram.build([0] * m, eq=eq, nonneg=True)
    return feasible(lp) is not None
