"""Planar lattices and two independent tiling verifiers.

``k_tiling_check`` counts lattice translates covering sampled points directly;
``spectral_tiling_check`` tests the area/covolume match plus vanishing of the
indicator transform on the nonzero dual-lattice points.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bodies import GeometryError, Polygon2, Rational, area, as_fraction
from .transform import polygon_ft_array

SAMPLE_BITS = 30


@dataclass(frozen=True)
class Lattice2:
    """Lattice generated by the columns of ``basis``; ``basis[i][j]`` is row i, column j."""

    basis: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

    def __init__(self, basis: Sequence[Sequence[Rational]]):
        (a, b), (c, d) = [[as_fraction(v) for v in row] for row in basis]
        if a * d - b * c == 0:
            raise GeometryError("lattice basis is singular")
        object.__setattr__(self, "basis", ((a, b), (c, d)))

    @classmethod
    def from_generators(cls, v1: Sequence[Rational], v2: Sequence[Rational]) -> "Lattice2":
        return cls([[v1[0], v2[0]], [v1[1], v2[1]]])

    @property
    def generators(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        (a, b), (c, d) = self.basis
        return (a, c), (b, d)

    @property
    def det(self) -> Fraction:
        (a, b), (c, d) = self.basis
        return a * d - b * c

    @property
    def covolume(self) -> Fraction:
        return abs(self.det)

    def point(self, coeffs: Sequence[int]) -> tuple[Fraction, Fraction]:
        (a, b), (c, d) = self.basis
        i, j = coeffs
        return a * i + b * j, c * i + d * j

    def coordinates(self, x: Sequence[Rational]) -> tuple[Fraction, Fraction]:
        """Solve ``basis @ c = x`` exactly."""
        (a, b), (c, d) = self.basis
        det = self.det
        x0, x1 = as_fraction(x[0]), as_fraction(x[1])
        return (d * x0 - b * x1) / det, (a * x1 - c * x0) / det

    def contains(self, x: Sequence[Rational]) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(x))


Z2 = Lattice2([[1, 0], [0, 1]])


def dual_lattice(L: Lattice2) -> Lattice2:
    """Basis ``B^{-T}``: ``<u_i, v_j> = delta_ij`` for generators v of L."""
    (a, b), (c, d) = L.basis
    det = L.det
    return Lattice2([[d / det, -c / det], [-b / det, a / det]])


def _candidate_range(p: Polygon2, L: Lattice2, lo: tuple[Fraction, Fraction], hi: tuple[Fraction, Fraction]):
    """Integer coefficient boxes covering every lattice point ``lambda`` with
    ``x - lambda`` in p for some x whose lattice coordinates lie in [lo, hi]."""
    coords = [L.coordinates(v) for v in p.vertices]
    ranges = []
    for k in range(2):
        vmin = min(c[k] for c in coords)
        vmax = max(c[k] for c in coords)
        ranges.append(range(math.floor(lo[k] - vmax), math.ceil(hi[k] - vmin) + 1))
    return ranges


def cover_count(p: Polygon2, L: Lattice2, x: Sequence[Rational]) -> int:
    """Number of lattice translates ``p + lambda`` containing x (boundary inclusive)."""
    x = (as_fraction(x[0]), as_fraction(x[1]))
    cx = L.coordinates(x)
    ri, rj = _candidate_range(p, L, cx, cx)
    count = 0
    for i in ri:
        for j in rj:
            lx, ly = L.point((i, j))
            if p.contains((x[0] - lx, x[1] - ly)):
                count += 1
    return count


@dataclass
class CoverHistogram:
    counts: dict[int, int] = field(default_factory=dict)
    samples: int = 0
    skipped_near_boundary: int = 0

    def merge(self, other: "CoverHistogram") -> "CoverHistogram":
        c = Counter(self.counts)
        c.update(other.counts)
        return CoverHistogram(
            dict(sorted(c.items())),
            self.samples + other.samples,
            self.skipped_near_boundary + other.skipped_near_boundary,
        )


@dataclass
class KTilingResult:
    verdict: str  # "k-tiling", "fail" or "inconclusive"
    k: int | None
    histogram: CoverHistogram
    seed: int

    @property
    def passed(self) -> bool:
        return self.verdict == "k-tiling"

    def off_k(self) -> int:
        if self.k is None:
            return sum(self.histogram.counts.values())
        return sum(v for m, v in self.histogram.counts.items() if m != self.k)


def _sample_histogram(p: Polygon2, L: Lattice2, ij: np.ndarray, eps: float) -> CoverHistogram:
    """Exact integer classification of the points ``B @ (ij / 2**SAMPLE_BITS)``."""
    scale = 1 << SAMPLE_BITS
    Q = math.lcm(*(v.denominator for row in L.basis for v in row),
                 *(c.denominator for v in p.vertices for c in v))
    Bq = [[int(v * Q) for v in row] for row in L.basis]
    Vq = [(int(x * Q), int(y * Q)) for x, y in p.vertices]
    ri, rj = _candidate_range(p, L, (Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)))
    lam = [(i, j) for i in ri for j in rj]

    bound = (
        max(abs(v) for row in Bq for v in row) * scale
        * (2 + max(len(ri), len(rj)) + max(abs(i) for i, _ in lam) + max(abs(j) for _, j in lam))
        + max(abs(c) for v in Vq for c in v) * scale
    )
    ebound = 2 * max(abs(c) for v in Vq for c in v)
    dtype = np.int64 if 4 * bound * ebound < 2**62 else object

    ij = ij.astype(dtype)
    X = ij @ np.array(Bq, dtype=dtype).T  # point coordinates * Q * scale
    n = len(X)
    counts = np.zeros(n, dtype=np.int64)
    near = np.zeros(n, dtype=bool)
    edges = [(Vq[e], Vq[(e + 1) % len(Vq)]) for e in range(len(Vq))]
    for li, lj in lam:
        lx = (Bq[0][0] * li + Bq[0][1] * lj) * scale
        ly = (Bq[1][0] * li + Bq[1][1] * lj) * scale
        inside = np.ones(n, dtype=bool)
        min_dist = np.full(n, np.inf)
        for (ax, ay), (bx, by) in edges:
            ex, ey = bx - ax, by - ay
            rx = X[:, 0] - lx - ax * scale
            ry = X[:, 1] - ly - ay * scale
            cr = ex * ry - ey * rx  # >= 0 on the inner side
            inside &= cr >= 0
            dist = (cr / (Q * scale * math.hypot(ex, ey))).astype(float)
            min_dist = np.minimum(min_dist, dist)
        # within eps of this translate's boundary (or exactly on it)
        near |= np.abs(min_dist) <= eps
        counts += inside
    kept = counts[~near]
    hist = dict(sorted(Counter(int(c) for c in kept).items()))
    return CoverHistogram(hist, n, int(near.sum()))


def k_tiling_check(
    p: Polygon2,
    L: Lattice2,
    n_samples: int = 10_000,
    seed: int = 7,
    eps: float = 1e-9,
    k: int | None = None,
) -> KTilingResult:
    """Sample the fundamental parallelogram and histogram the cover multiplicity.

    Sample points have dyadic lattice coordinates, so multiplicities are computed
    in exact integer arithmetic; points within ``eps`` of a translate's boundary
    are skipped and counted. ``k`` optionally pins the expected multiplicity.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    rng = np.random.default_rng(seed)
    ij = rng.integers(0, 1 << SAMPLE_BITS, size=(n_samples, 2), dtype=np.int64)
    hist = _sample_histogram(p, L, ij, eps)
    if not hist.counts:
        return KTilingResult("inconclusive", None, hist, seed)
    if len(hist.counts) == 1:
        (mult,) = hist.counts
        if mult >= 1 and (k is None or mult == k):
            return KTilingResult("k-tiling", mult, hist, seed)
    return KTilingResult("fail", k, hist, seed)


@dataclass
class SpectralResult:
    passed: bool
    area_matches: bool
    max_abs: float
    worst_point: tuple[Fraction, Fraction] | None
    range: int
    tol: float

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "area_matches": self.area_matches,
            "max_abs": self.max_abs,
            "worst_point": None if self.worst_point is None else [str(c) for c in self.worst_point],
            "range": self.range,
            "tol": self.tol,
        }


def _dual_points(L: Lattice2, coeffs: np.ndarray) -> tuple[np.ndarray, int]:
    """Integer numerators (n, 2) and common denominator of ``dual(L) @ coeffs``."""
    D = dual_lattice(L)
    den = math.lcm(*(v.denominator for row in D.basis for v in row))
    Bi = np.array([[int(v * den) for v in row] for row in D.basis], dtype=np.int64)
    return coeffs.astype(np.int64) @ Bi.T, den


def spectral_tiling_check(p: Polygon2, L: Lattice2, n: int = 30, tol: float = 1e-10) -> SpectralResult:
    area_matches = area(p) == L.covolume
    ax = np.arange(-n, n + 1)
    A, B = np.meshgrid(ax, ax, indexing="ij")
    coeffs = np.stack([A.ravel(), B.ravel()], axis=1)
    coeffs = coeffs[np.any(coeffs != 0, axis=1)]
    num, den = _dual_points(L, coeffs)
    values, _ = polygon_ft_array(p, num, den)
    mags = np.abs(values)
    i = int(np.argmax(mags))
    worst = (Fraction(int(num[i, 0]), den), Fraction(int(num[i, 1]), den))
    max_abs = float(mags[i])
    return SpectralResult(area_matches and max_abs <= tol, area_matches, max_abs, worst, n, tol)


@dataclass
class OrthogonalityResult:
    passed: bool
    max_abs: float
    pairs: int
    worst_pair: tuple | None


def exponential_orthogonality_check(
    p: Polygon2,
    L: Lattice2,
    n_pairs: int = 100,
    seed: int = 3,
    tol: float = 1e-10,
    coeff_range: int = 30,
) -> OrthogonalityResult:
    """Check ``|int_p e^{2 pi i <lambda - mu, x>} dx| <= tol`` for random distinct
    dual-lattice frequencies ``lambda != mu`` (coefficients in ``[-range, range]``)."""
    rng = np.random.default_rng(seed)
    lam = np.empty((0, 2), dtype=np.int64)
    mu = np.empty((0, 2), dtype=np.int64)
    while len(lam) < n_pairs:
        a = rng.integers(-coeff_range, coeff_range + 1, size=(n_pairs, 2))
        b = rng.integers(-coeff_range, coeff_range + 1, size=(n_pairs, 2))
        keep = np.any(a != b, axis=1)
        lam = np.concatenate([lam, a[keep]])[:n_pairs]
        mu = np.concatenate([mu, b[keep]])[:n_pairs]
    num, den = _dual_points(L, mu - lam)
    # int e^{2 pi i <lambda - mu, x>} dx = FT(mu - lambda)
    mags = np.abs(polygon_ft_array(p, num, den)[0])
    i = int(np.argmax(mags))
    worst = (tuple(int(c) for c in lam[i]), tuple(int(c) for c in mu[i]))
    return OrthogonalityResult(bool(mags[i] <= tol), float(mags[i]), n_pairs, worst)


def tiling_report(p: Polygon2, L: Lattice2, kt: KTilingResult, sp: SpectralResult) -> dict:
    """JSON-ready report combining both verifiers."""
    return {
        "verdict": kt.verdict,
        "k": kt.k,
        "histogram": {str(m): c for m, c in kt.histogram.counts.items()},
        "skipped": kt.histogram.skipped_near_boundary,
        "samples": kt.histogram.samples,
        "seed": kt.seed,
        "lattice_basis": [[str(v) for v in row] for row in L.basis],
        "spectral": {
            "max_abs": sp.max_abs,
            "worst_point": None if sp.worst_point is None else [str(c) for c in sp.worst_point],
            "range": sp.range,
            "tol": sp.tol,
            "area_matches": sp.area_matches,
            "passed": sp.passed,
        },
    }
