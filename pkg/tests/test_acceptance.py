"""Exit criteria. Each test records a one-line verdict; the lines are printed in
the terminal summary (see conftest) or directly when run as a script."""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from indicatorft import bodies as bd
from indicatorft.bodies import Ball, Interval1, ProductBody
from indicatorft.oracle import ball_ft_slab_quadrature, oracle_ft, polygon_ft_quadrature
from indicatorft.tiling import (
    Lattice2,
    dual_lattice,
    exponential_orthogonality_check,
    k_tiling_check,
    spectral_tiling_check,
)
from indicatorft.transform import (
    Branch,
    ball_ft,
    ft_array,
    interval_ft,
    lattice_agreement_report,
    lattice_points,
    polygon_ft,
)

from conftest import CANDIDATE, pythagorean_rotation, random_convex_polygon, random_rational

RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, RESULTS[n]


R = bd.make_rhombus_R()
H = bd.make_hexagon_H()
P = ProductBody([R, Ball(2, 1)])
Q = ProductBody([H, Ball(2, 1)])
L = Lattice2.from_generators(*CANDIDATE)


def _sweep_2d():
    pts = lattice_points(2, 100)
    pts = pts[np.any(pts != 0, axis=1)]
    return pts


def test_1_proposition_on_z2():
    pts = _sweep_2d()
    assert len(pts) == 40_400
    t0 = time.perf_counter()
    vr, _ = ft_array(R, pts)
    vh, _ = ft_array(H, pts)
    elapsed = time.perf_counter() - t0
    origin_ok = polygon_ft(R, (0, 0)).value == 6 and polygon_ft(H, (0, 0)).value == 6
    worst = float(max(np.abs(vr).max(), np.abs(vh).max()))
    record(1, origin_ok and worst <= 1e-10 and elapsed < 5.0,
           f"FT(0)=6 for R,H; max |FT| over 40400 nonzero points = {worst:.2e} (<=1e-10); {elapsed:.2f}s (<5s)")


def test_2_degenerate_branch_coverage():
    pts = _sweep_2d()
    _, br = ft_array(R, pts)
    _, bh = ft_array(H, pts)
    x, y = pts[:, 0], pts[:, 1]
    on_r = (x + 3 * y == 0) | (x - 3 * y == 0)
    on_h = (x + y == 0) | (x - y == 0)
    cover_ok = bool(np.all(br[on_r] == Branch.DEGENERATE.value) and np.all(bh[on_h] == Branch.DEGENERATE.value))
    # R has no other edge directions, so the degenerate set is exactly those lines
    exact_r = bool(np.all((br == Branch.DEGENERATE.value) == on_r))
    base = polygon_ft(R, (3, -1))
    gaps = [abs(polygon_ft(R, (3 + Fraction(e), -1)).value - base.value) for e in (1e-3, 1e-5, 1e-7)]
    conv_ok = base.branch is Branch.DEGENERATE and gaps[0] > gaps[1] > gaps[2] and gaps[2] < 1e-5
    record(2, cover_ok and exact_r and conv_ok,
           f"degenerate on {int(on_r.sum())} R-line and {int(on_h.sum())} H-line points; "
           f"gaps {gaps[0]:.1e} > {gaps[1]:.1e} > {gaps[2]:.1e} (<1e-5)")


def test_3_counterexample_in_d4():
    t0 = time.perf_counter()
    rep = lattice_agreement_report(P, Q, 10, 1e-10)
    elapsed = time.perf_counter() - t0
    nonzero = rep.points_scanned - 1
    xi = (Fraction(1, 2), 0, 0, 0)
    a, b = oracle_ft(P, xi), oracle_ft(Q, xi)
    from indicatorft.transform import product_ft
    sep = abs(product_ft(P, xi).value - product_ft(Q, xi).value)
    oracle_sep = abs(a - b)
    rel = abs(sep - oracle_sep) / oracle_sep
    ok = (rep.violations == 0 and rep.max_abs_diff <= 1e-10 and nonzero == 194_480
          and sep > 0.1 and abs(sep - 16 / math.pi) <= 1e-6 * 16 / math.pi and rel <= 1e-6 and elapsed < 30)
    record(3, ok, f"max |dFT| on Z^4 box = {rep.max_abs_diff:.1e} over {nonzero} nonzero points "
                  f"({elapsed:.2f}s); separation at (1/2,0,0,0) = {sep:.6f} (16/pi), oracle rel err {rel:.1e}")


def test_4_oracle_equivalence():
    rng = np.random.default_rng(2024)
    worst_poly = 0.0
    for _ in range(200):
        xi = (random_rational(rng, -5, 5, 1000), random_rational(rng, -5, 5, 1000))
        for p in (R, H):
            v = polygon_ft(p, xi).value
            worst_poly = max(worst_poly, abs(v - polygon_ft_quadrature(p, xi)) / (1 + abs(v)))
    worst_ball = 0.0
    for m in (2, 3, 4):
        b = Ball(m, 1)
        for _ in range(40):
            direction = rng.normal(size=m)
            direction /= np.linalg.norm(direction)
            rho = rng.uniform(0, 10)
            xi = tuple(Fraction(float(c)) for c in rho * direction)
            worst_ball = max(worst_ball, abs(ball_ft(b, xi).value - ball_ft_slab_quadrature(b, xi)))
        for xi in [(10,) + (0,) * (m - 1), (Fraction(1, 2),) + (0,) * (m - 1)]:
            worst_ball = max(worst_ball, abs(ball_ft(b, xi).value - ball_ft_slab_quadrature(b, xi)))
    half3 = ball_ft_slab_quadrature(Ball(3, 1), (Fraction(1, 2), 0, 0))
    ok = worst_poly <= 1e-8 and worst_ball <= 1e-10 and abs(half3 - 4 / math.pi) <= 1e-10
    record(4, ok, f"polygon rel err {worst_poly:.1e} (<=1e-8); ball abs err {worst_ball:.1e} (<=1e-10); "
                  f"3-ball at 1/2 = {half3:.12f}")


def test_5_common_tiling_lattice():
    lines = []
    ok = True
    for name, p in (("R", R), ("H", H)):
        kt = k_tiling_check(p, L, 10_000, seed=7, eps=1e-9)
        sp = spectral_tiling_check(p, L, 30, 1e-10)
        agree = (kt.passed and kt.k == 1) == sp.passed
        ok &= kt.passed and kt.k == 1 and kt.off_k() == 0 and sp.passed and agree
        lines.append(f"{name}: k={kt.k} off-k={kt.off_k()} spectral max {sp.max_abs:.1e}")
    D = dual_lattice(L)
    contain = D.contains((1, 0)) and D.contains((0, 1))
    record(5, ok and contain, "; ".join(lines) + f"; Z^2 in dual: {contain}")


def test_6_exponential_orthogonality():
    res = [exponential_orthogonality_check(p, L, 100, seed=3, tol=1e-10) for p in (R, H)]
    record(6, all(r.passed for r in res),
           f"max |inner product| R {res[0].max_abs:.1e}, H {res[1].max_abs:.1e} over 100 pairs each")


def test_7_non_congruence():
    rng = np.random.default_rng(7)
    copies = []
    for _ in range(20):
        rot = pythagorean_rotation(rng)
        if rng.random() < 0.5:
            rot = [[rot[0][0], -rot[0][1]], [rot[1][0], -rot[1][1]]]
        t = (random_rational(rng, -10, 10, 9), random_rational(rng, -10, 10, 9))
        copies.append(R.transformed(rot, t))
    verdicts = [bd.congruence_distinguisher(R, c) for c in copies]
    ok = bd.congruence_distinguisher(R, H) == bd.DISTINCT and all(v == bd.POSSIBLY_CONGRUENT for v in verdicts)
    record(7, ok, f"(R,H) -> {bd.congruence_distinguisher(R, H)}; "
                  f"{verdicts.count(bd.POSSIBLY_CONGRUENT)}/20 rigid copies PossiblyCongruent")


def test_8_property_suites():
    import cmath
    rng = np.random.default_rng(8)
    n = 100
    polys = [random_convex_polygon(rng) for _ in range(n)]
    freqs = [(random_rational(rng, -5, 5), random_rational(rng, -5, 5)) for _ in range(n)]
    herm = max(abs(polygon_ft(p, xi).value - polygon_ft(p, (-xi[0], -xi[1])).value.conjugate())
               for p, xi in zip(polys, freqs))
    origin = max(abs(polygon_ft(p, (0, 0)).value - float(bd.area(p))) for p in polys)
    trans = 0.0
    scale = 0.0
    for p, xi in zip(polys, freqs):
        t = (random_rational(rng, -3, 3, 16), random_rational(rng, -3, 3, 16))
        ph = cmath.exp(-2j * math.pi * float(t[0] * xi[0] + t[1] * xi[1]))
        trans = max(trans, abs(polygon_ft(p.translated(t), xi).value - ph * polygon_ft(p, xi).value))
        s = Fraction(int(rng.integers(1, 25)), 8)
        scale = max(scale, abs(polygon_ft(p.scaled(s), xi).value
                               - float(s) ** 2 * polygon_ft(p, (s * xi[0], s * xi[1])).value))
    roundtrip = 0
    while roundtrip < n:
        rows = [[random_rational(rng, -5, 5, 7) for _ in range(2)] for _ in range(2)]
        if rows[0][0] * rows[1][1] == rows[0][1] * rows[1][0]:
            continue
        lat = Lattice2(rows)
        assert dual_lattice(dual_lattice(lat)) == lat
        assert abs(dual_lattice(lat).det) == 1 / abs(lat.det)
        roundtrip += 1
    ok = herm <= 1e-12 and origin <= 1e-12 and trans <= 1e-10 and scale <= 1e-10
    record(8, ok, f"hermitian {herm:.1e}, FT(0)-area {origin:.1e}, translation {trans:.1e}, "
                  f"scaling {scale:.1e}, dual round-trip {roundtrip}/100 exact")


def test_9_intervals():
    rng = np.random.default_rng(9)
    pairs = []
    for k in range(100):
        h1 = random_rational(rng, 0.01, 5, 1000)
        h2 = h1 if k % 4 == 0 else random_rational(rng, 0.01, 5, 1000)
        pairs.append((max(h1, Fraction(1, 1000)), max(h2, Fraction(1, 1000))))
    ok = True
    n_equal = 0
    for h1, h2 in pairs:
        agree = abs(interval_ft(Interval1(h1), 0).value - interval_ft(Interval1(h2), 0).value) <= 1e-12
        n_equal += agree
        if agree:
            ok &= abs(float(h1 - h2)) <= 1e-12
    record(9, ok, f"{n_equal} agreeing pairs of 100, all with equal half-lengths")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
