#!/usr/bin/env python3
"""Walk through the library's worked examples and print exact tables.

Covers the halfspace description and vertex list of a signed example, a
preorder cycle with its witness matrix, the deformation of a classical
polytope into a singleton, and the thermo-majorization curve.
"""

from fractions import Fraction

from dmajor import (
    RVec,
    build_dmaj_hrep,
    curve_build,
    dmaj_by_onenorm,
    dmaj_vertices,
    find_witness,
    hausdorff,
    maximal_element,
    minimal_element,
)


def banner(text: str) -> None:
    print(f"\n=== {text} ===")


def show_polytope(y: RVec, d: RVec) -> None:
    hsys = build_dmaj_hrep(y, d)
    print(f"y = {y}, d = {d}")
    print(f"b = ({', '.join(str(v) for v in hsys.b_vector())})")
    poly = dmaj_vertices(y, d)
    print(f"{len(poly.vertices)} extreme points:")
    for v in poly.vertices:
        print(f"  {v}")


def main() -> None:
    banner("weighted polytope of a signed vector")
    show_polytope(RVec.of(4, -2, 2), RVec.of(4, 2, 1))

    banner("thermo-majorization curve")
    curve = curve_build(RVec.of(4, -2, 2), RVec.of(4, 2, 1))
    print("elbows:", ", ".join(f"({c}, {f})" for c, f in curve.elbows))

    banner("order extrema on the trace plane of y")
    y, d = RVec.of(4, -2, 2), RVec.of(4, 2, 1)
    low = minimal_element(y.total(), d)
    top, unique = maximal_element(d)
    print(f"minimal element: {low}")
    print(f"maximal element: {top} (unique: {unique})")
    print(f"minimal ≺_d y: {dmaj_by_onenorm(low, y, d)}")

    banner("a preorder cycle between distinct vectors")
    d = RVec.of(3, 2, 1)
    x = RVec.of(1, 0, 0)
    z = RVec.parse(["0", "2/3", "1/3"])
    print(f"x = {x}, z = {z}, d = {d}")
    print(f"x ≺_d z: {dmaj_by_onenorm(x, z, d)},  z ≺_d x: {dmaj_by_onenorm(z, x, d)}")
    witness = find_witness(x, z, d)
    print("witness mapping z to x:")
    print(witness.entries)

    banner("deforming a classical polytope into a singleton")
    y = RVec.of(3, 2, 1)
    polys = {}
    for lam in (Fraction(0), Fraction(3, 10), Fraction(7, 10), Fraction(1)):
        dl = RVec((2 + lam, Fraction(2), 2 - lam))
        polys[lam] = dmaj_vertices(y, dl)
        print(f"λ = {lam}: {len(polys[lam].vertices)} vertices")
    gap = hausdorff(polys[Fraction(3, 10)], polys[Fraction(7, 10)])
    print(f"Hausdorff distance between λ=3/10 and λ=7/10 members: {gap.distance}")


if __name__ == "__main__":
    main()
