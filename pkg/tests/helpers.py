"""Shared random generators and oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from dmajor import RVec, all_permutations, build_dmaj_hrep

# Entry ranges follow the documented sweep profile: values in [-5, 5] with
# denominators up to 6; weights stay in (0, 5].
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positive_rationals = st.fractions(
    min_value=Fraction(1, 6), max_value=5, max_denominator=6
)


def rvecs(n: int):
    return st.lists(rationals, min_size=n, max_size=n).map(lambda e: RVec(tuple(e)))


def weight_vecs(n: int):
    return st.lists(positive_rationals, min_size=n, max_size=n).map(
        lambda e: RVec(tuple(e))
    )


def rand_fraction(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    den = rng.randint(1, 6)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_rvec(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> RVec:
    return RVec(tuple(rand_fraction(rng, lo, hi) for _ in range(n)))


def rand_weights(rng: random.Random, n: int) -> RVec:
    out = []
    for _ in range(n):
        den = rng.randint(1, 6)
        out.append(Fraction(rng.randint(1, 5 * den), den))
    return RVec(tuple(out))


def rand_nonneg_rvec(rng: random.Random, n: int) -> RVec:
    return RVec(tuple(abs(rand_fraction(rng)) for _ in range(n)))


def rand_convex_weights(rng: random.Random, k: int) -> list[Fraction]:
    raw = [Fraction(rng.randint(0, 12)) for _ in range(k)]
    if sum(raw) == 0:
        raw[rng.randrange(k)] = Fraction(1)
    total = sum(raw)
    return [w / total for w in raw]


def rand_majorized_point(rng: random.Random, y: RVec, d: RVec) -> RVec:
    """Exact random point of the polytope: a convex mix of a few corners."""
    hsys = build_dmaj_hrep(y, d)
    perms = list(all_permutations(len(y)))
    k = rng.randint(1, min(3, len(perms)))
    corners = [hsys.corner(rng.choice(perms)) for _ in range(k)]
    weights = rand_convex_weights(rng, k)
    point = RVec.zeros(len(y))
    for w, c in zip(weights, corners):
        point = point + c * w
    return point


def rand_trace_matched(rng: random.Random, y: RVec) -> RVec:
    """Random vector sharing the entry sum of y."""
    n = len(y)
    head = [rand_fraction(rng) for _ in range(n - 1)]
    last = y.total() - sum(head, Fraction(0))
    return RVec(tuple(head) + (last,))
