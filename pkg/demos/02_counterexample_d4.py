"""
Products with a disk: a four-dimensional pair
=============================================

Crossing R and H with the unit disk gives two convex, centrally symmetric
bodies in R^4 that are not polytopes. The transform of a product is the product
of the factor transforms, so agreement on Z^2 carries over to Z^4.
"""

import math
from fractions import Fraction

from indicatorft import Ball, ProductBody, congruence_distinguisher, make_hexagon_H, make_rhombus_R
from indicatorft import lattice_agreement_report, product_ft

R, H = make_rhombus_R(), make_hexagon_H()
P = ProductBody([R, Ball(2, 1)])
Q = ProductBody([H, Ball(2, 1)])

print("volume of P and Q:", P.measure(), Q.measure(), " 6*pi =", 6 * math.pi)

rep = lattice_agreement_report(P, Q, 10)
print("Z^4 sweep |xi_i| <= 10:", rep.summary())

xi = (Fraction(1, 2), 0, 0, 0)
a, b = product_ft(P, xi).value.real, product_ft(Q, xi).value.real
print(f"at (1/2,0,0,0): P -> {a:.9f} (24/pi), Q -> {b:.9f} (8/pi), gap {a - b:.6f} = 16/pi")

# the planar factors are not congruent: vertex counts already differ
print("R vs H:", congruence_distinguisher(R, H))
