"""Classical majorization on real vectors.

``x`` is majorized by ``y`` when both have the same entry sum and every
prefix sum of the decreasingly sorted x is dominated by the corresponding
prefix sum of y; equivalently x lies in the convex hull of the entrywise
permutations of y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import DimensionMismatch, RVec, all_permutations
from .halfspace import HalfspaceSystem, VPolytope, dimension_cap, DimensionCapExceeded
from .halfspace import PERMUTATION_SWEEP_CAP, MAX_N_ENV

ZERO = Fraction(0)


@dataclass(frozen=True)
class PrefixViolation:
    """First failed comparison: a prefix length or the trace equality."""

    where: int | Literal["trace"]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class MajorizationVerdict:
    holds: bool
    first_violation: PrefixViolation | None = None

    def __bool__(self) -> bool:
        return self.holds


def classical_majorizes(y: RVec, x: RVec) -> MajorizationVerdict:
    """Does y majorize x, i.e. does x lie in the permutohedron of y?"""
    if len(x) != len(y):
        raise DimensionMismatch(f"length {len(y)} vs {len(x)}")
    tx, ty = x.total(), y.total()
    if tx != ty:
        return MajorizationVerdict(False, PrefixViolation("trace", tx, ty))
    xs, _ = x.sort_descending()
    ys, _ = y.sort_descending()
    run_x = run_y = ZERO
    for j in range(len(x) - 1):
        run_x += xs[j]
        run_y += ys[j]
        if run_x > run_y:
            return MajorizationVerdict(False, PrefixViolation(j + 1, run_x, run_y))
    return MajorizationVerdict(True)


def classical_hrep(y: RVec) -> HalfspaceSystem:
    """Halfspace description of {x : y majorizes x}.

    Every mask of size k is bounded by the sum of the k largest entries
    of y; the trace value is the entry sum of y.
    """
    ys, _ = y.sort_descending()
    prefix = [ZERO]
    for v in ys:
        prefix.append(prefix[-1] + v)
    return HalfspaceSystem.from_function(
        len(y), lambda m: prefix[m.bit_count()], y.total()
    )


def permutohedron_vertices(y: RVec) -> VPolytope:
    """Deduplicated set of all entrywise permutations of y."""
    n = len(y)
    cap = dimension_cap(PERMUTATION_SWEEP_CAP)
    if n > cap:
        raise DimensionCapExceeded(
            f"permutation sweeps support n <= {cap} (set {MAX_N_ENV} to raise)"
        )
    points = {sigma.apply(y).entries for sigma in all_permutations(n)}
    return VPolytope(n, tuple(RVec(e) for e in sorted(points)), classical_hrep(y))
