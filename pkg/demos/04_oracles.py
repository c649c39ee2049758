"""
Checking closed forms against quadrature and Monte Carlo
========================================================
"""

from fractions import Fraction

from indicatorft import Ball, ProductBody, QuadratureSpec, ft, make_hexagon_H, make_rhombus_R
from indicatorft import mc_indicator_ft, oracle_ft

cases = [
    (make_rhombus_R(), (Fraction(1, 2), 0)),
    (make_hexagon_H(), (Fraction(1, 3), Fraction(5, 7))),
    (Ball(3, 1), (Fraction(1, 2), 0, 0)),
    (Ball(2, 1), (1, 0)),
    (ProductBody([make_hexagon_H(), Ball(2, 1)]), (Fraction(1, 2), 0, Fraction(1, 4), 0)),
]
spec = QuadratureSpec(mc_samples=400_000, seed=42)
for body, xi in cases:
    closed = ft(body, xi).value
    quad = oracle_ft(body, xi)
    est, se = mc_indicator_ft(body, xi, spec)
    print(f"{type(body).__name__:12} xi={[str(c) for c in xi]}")
    print(f"   closed {closed.real:+.12f}   quadrature diff {abs(closed - quad):.1e}   "
          f"MC {est.real:+.4f} +- {se.real:.4f}")
