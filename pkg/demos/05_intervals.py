"""
One dimension: intervals are pinned down by the origin
======================================================

The transform of [-h, h] at 0 is its length, so two intervals whose transforms
agree on Z already agree at 0 and are equal.
"""

from fractions import Fraction

from indicatorft import Interval1, interval_ft

for h1, h2 in [(1, 1), (1, Fraction(3, 2)), (Fraction(1, 2), Fraction(1, 2))]:
    a, b = interval_ft(Interval1(h1), 0).value.real, interval_ft(Interval1(h2), 0).value.real
    print(f"h1={h1}, h2={h2}: FT(0) = {a} vs {b} -> {'equal' if a == b else 'differ'}")

# the unit interval vanishes at every nonzero integer
print([round(interval_ft(Interval1(Fraction(1, 2)), k).value.real, 15) for k in range(1, 6)])
