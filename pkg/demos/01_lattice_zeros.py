"""
Rhombus and hexagon: equal transforms on the integer lattice
============================================================

Both polygons have area 6. Their indicator transforms vanish at every nonzero
integer frequency, yet they differ off the lattice.
"""

from fractions import Fraction

import numpy as np

from indicatorft import lattice_agreement_report, make_hexagon_H, make_rhombus_R, polygon_ft
from indicatorft.transform import ft_array, lattice_points

R = make_rhombus_R()
H = make_hexagon_H()
print("R vertices:", [tuple(map(str, v)) for v in R.vertices])
print("H vertices:", [tuple(map(str, v)) for v in H.vertices])

# a few integer frequencies, including the lines xi_1 = +-3 xi_2 where two edges
# of R are orthogonal to xi and the degenerate edge branch is taken
for xi in [(0, 0), (1, 0), (0, 2), (3, -1), (2, 3), (1, 1)]:
    r, h = polygon_ft(R, xi), polygon_ft(H, xi)
    print(f"xi={xi!s:8}  R: {r.value.real:+.3e} ({r.branch.value:15})  H: {h.value.real:+.3e} ({h.branch.value})")

rep = lattice_agreement_report(R, H, 50)
print("\nsweep |xi_i| <= 50:", rep.summary())

# off the lattice the two bodies separate
half = (Fraction(1, 2), 0)
print("\nFT_R(1/2, 0) =", polygon_ft(R, half).value.real, "  24/pi^2 =", 24 / np.pi**2)
print("FT_H(1/2, 0) =", polygon_ft(H, half).value.real, "  8/pi^2  =", 8 / np.pi**2)

# along a line through the lattice the difference vanishes exactly at integers
t = np.arange(0, 4 * 64 + 1)
num = np.stack([t, np.zeros_like(t)], axis=1)
diff = np.abs(ft_array(R, num, 64)[0] - ft_array(H, num, 64)[0])
print("\n|FT_R - FT_H| along (t, 0), t = 0, 1/4, ..., 4:")
print(np.round(diff[::16], 6))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.plot(t / 64, diff)
    plt.xlabel("t")
    plt.ylabel("|FT_R(t,0) - FT_H(t,0)|")
    plt.savefig("lattice_zeros.png", dpi=100)
    print("wrote lattice_zeros.png")
except ImportError:
    pass
