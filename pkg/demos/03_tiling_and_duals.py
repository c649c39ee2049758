"""
A common tiling lattice and its dual
====================================

R and H both tile the plane with the lattice generated by (1, 3) and (1, -3).
Sampling cover counts and checking transform zeros on the dual lattice are two
independent ways to see it.
"""

from fractions import Fraction

from indicatorft import (
    Lattice2,
    Z2,
    cover_count,
    dual_lattice,
    exponential_orthogonality_check,
    k_tiling_check,
    make_hexagon_H,
    make_rhombus_R,
    make_square,
    spectral_tiling_check,
)

L = Lattice2.from_generators((1, 3), (1, -3))
D = dual_lattice(L)
print("generators:", [tuple(map(str, g)) for g in L.generators], " covolume", L.covolume)
print("dual generators:", [tuple(map(str, g)) for g in D.generators])
print("Z^2 inside the dual:", D.contains((1, 0)) and D.contains((0, 1)))

for name, p in (("R", make_rhombus_R()), ("H", make_hexagon_H())):
    kt = k_tiling_check(p, L, 10_000, seed=7)
    sp = spectral_tiling_check(p, L, 30)
    orth = exponential_orthogonality_check(p, L, 100, seed=3)
    print(f"{name}: cover histogram {kt.histogram.counts}, spectral max |FT| {sp.max_abs:.1e}, "
          f"orthogonality max {orth.max_abs:.1e}")

# exact cover counts, boundary included
R = make_rhombus_R()
print("cover of (1/2, 0):", cover_count(R, L, (Fraction(1, 2), 0)))
print("cover of a shared edge point (1/2, 3/2):", cover_count(R, L, (Fraction(1, 2), Fraction(3, 2))))

# a double tiling
sq = make_square(1)
print("unit square with step 1/2 in x:", k_tiling_check(sq, Lattice2([["1/2", 0], [0, 1]])).k)
print("R with Z^2:", k_tiling_check(R, Z2).k, "(area 6 over covolume 1)")
