"""Piecewise-linear concave curves encoding a weighted majorization polytope.

For a vector y and strictly positive weights d, the curve through the elbow
points (partial sums of d, partial sums of y) along the ordering that makes
y_i/d_i nonincreasing equals, at every abscissa c, the minimum over i of
  sum((y - (y_i/d_i) d)_+)  +  (y_i/d_i) c.
Its values at subset sums of d are exactly the halfspace bounds of the
polytope of vectors majorized by y relative to d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import DimensionMismatch, Permutation, RVec, require_weights

ZERO = Fraction(0)


@dataclass(frozen=True)
class ThermoCurve:
    """Curve stored by its elbow points (c_0, f_0), ..., (c_n, f_n)."""

    d: RVec
    y: RVec
    order: Permutation
    elbows: tuple[tuple[Fraction, Fraction], ...]

    @property
    def domain(self) -> Fraction:
        return self.elbows[-1][0]

    @property
    def height(self) -> Fraction:
        return self.elbows[-1][1]

    def eval(self, c: Fraction) -> Fraction:
        """Exact linear interpolation on the elbow list."""
        if c < 0 or c > self.domain:
            raise ValueError(f"abscissa {c} outside [0, {self.domain}]")
        for (c0, f0), (c1, f1) in zip(self.elbows, self.elbows[1:]):
            if c <= c1:
                return f0 + (f1 - f0) * (c - c0) / (c1 - c0)
        return self.height

    def csv_rows(self, refine: int = 0) -> list[tuple[Fraction, Fraction]]:
        """Elbow samples plus an optional uniform refinement of the domain."""
        points = {c for c, _ in self.elbows}
        if refine > 0:
            points.update(self.domain * Fraction(k, refine) for k in range(refine + 1))
        return [(c, self.eval(c)) for c in sorted(points)]


def curve_build(y: RVec, d: RVec) -> ThermoCurve:
    """Elbow construction; ratio ties are broken by original index."""
    require_weights(d)
    if len(y) != len(d):
        raise DimensionMismatch(f"length {len(y)} vs {len(d)}")
    n = len(y)
    order = sorted(range(n), key=lambda i: (-(y[i] / d[i]), i))
    sigma = Permutation(tuple(order))
    elbows = [(ZERO, ZERO)]
    c = f = ZERO
    for i in order:
        c += d[i]
        f += y[i]
        elbows.append((c, f))
    return ThermoCurve(d, y, sigma, tuple(elbows))


def curve_eval(curve: ThermoCurve, c: Fraction) -> Fraction:
    return curve.eval(c)


def curve_leq(lower: ThermoCurve, upper: ThermoCurve) -> bool:
    """Pointwise comparison lower <= upper on the whole shared domain.

    Because the upper curve is concave, the comparison only has to be
    checked at the elbow abscissae of the lower curve.
    """
    if lower.domain != upper.domain:
        raise DimensionMismatch(
            f"curve domains differ ({lower.domain} vs {upper.domain})"
        )
    return all(f <= upper.eval(c) for c, f in lower.elbows)


def curves_equal(a: ThermoCurve, b: ThermoCurve) -> bool:
    """Equality as functions: agreement at the union of elbow abscissae."""
    if a.domain != b.domain:
        return False
    points = {c for c, _ in a.elbows} | {c for c, _ in b.elbows}
    return all(a.eval(c) == b.eval(c) for c in points)
