"""Closed-form Fourier transforms of indicator functions.

Convention: ``FT_A(xi) = int_A exp(-2 pi i <x, xi>) dx`` with rational ``xi``.

Polygons use the divergence-theorem edge sum. For a counterclockwise edge
``a -> b`` with outward (unnormalized) normal ``nu = (dy, -dx)`` and midpoint ``m``,

    FT(xi) = i / (2 pi |xi|^2) * sum_e <xi, nu_e> exp(-2 pi i <m_e, xi>) sinc(<xi, b - a>)

with ``sinc(s) = sin(pi s) / (pi s)``. An edge with ``<xi, b - a> = 0`` (exactly, in
integers) takes the degenerate branch where the kernel is constant along the edge.
All phase arguments are reduced modulo their period in exact integer arithmetic
before any floating-point evaluation.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bessel import jv
from .bodies import Ball, Body, Interval1, Polygon2, ProductBody, Rational, area, as_fraction


class DimensionMismatch(ValueError):
    pass


class Branch(str, enum.Enum):
    ORIGIN = "origin"
    GENERIC = "generic"
    DEGENERATE = "degenerate-edge"


@dataclass(frozen=True)
class FtValue:
    value: complex
    branch: Branch

    def __abs__(self) -> float:
        return abs(self.value)


def as_frequency(xi: Sequence[Rational], dim: int | None = None) -> tuple[Fraction, ...]:
    out = tuple(as_fraction(c) for c in xi)
    if dim is not None and len(out) != dim:
        raise DimensionMismatch(f"frequency has length {len(out)}, body has dimension {dim}")
    return out


def _common_denominator(values: Sequence[Fraction]) -> int:
    return math.lcm(*(v.denominator for v in values)) if values else 1


def _int_matrix(rows, dtype):
    return np.array(rows, dtype=dtype)


def _need_object(*bounds: int) -> bool:
    return math.prod(bounds) >= 2**62


def _sin_pi_ratio(num: np.ndarray, den) -> np.ndarray:
    """sin(pi * num / den) with the argument reduced exactly; integer multiples give 0."""
    r = np.mod(num, 2 * den)
    sign = np.where(r >= den, -1.0, 1.0)
    r = np.mod(r, den)
    r = np.minimum(r, den - r)  # sin(pi u) = sin(pi (1 - u))
    return sign * np.sin(np.pi * (r / den).astype(float))


def _phase_exp(num: np.ndarray, den) -> np.ndarray:
    """exp(-2 pi i num / den) with num reduced mod den."""
    r = np.mod(num, den)
    theta = 2 * np.pi * (r / den).astype(float)
    return np.cos(theta) - 1j * np.sin(theta)


@dataclass(frozen=True)
class _EdgeData:
    scale: int  # common denominator of the vertices
    edge: list  # integer edge vectors (b - a) * scale
    normal: list  # (dy, -dx) * scale
    mid2: list  # (a + b) * scale
    bound: int  # max |integer entry|


def _edge_data(p: Polygon2) -> _EdgeData:
    coords = [c for v in p.vertices for c in v]
    D = _common_denominator(coords)
    V = [(int(x * D), int(y * D)) for x, y in p.vertices]
    n = len(V)
    edge, normal, mid2 = [], [], []
    for i in range(n):
        (ax, ay), (bx, by) = V[i], V[(i + 1) % n]
        edge.append((bx - ax, by - ay))
        normal.append((by - ay, ax - bx))
        mid2.append((ax + bx, ay + by))
    bound = max(abs(c) for row in edge + mid2 for c in row)
    return _EdgeData(D, edge, normal, mid2, max(bound, 1))


def polygon_ft_array(p: Polygon2, num: np.ndarray, den: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized polygon transform at frequencies ``num / den``.

    ``num`` is an ``(n, 2)`` integer array. Returns ``(values, branches)`` where
    ``branches`` holds :class:`Branch` values as strings.
    """
    ed = _edge_data(p)
    num = np.asarray(num)
    if num.ndim != 2 or num.shape[1] != 2:
        raise DimensionMismatch(f"expected an (n, 2) frequency array, got shape {num.shape}")
    kmax = int(np.max(np.abs(num))) if num.size else 0
    dtype = object if _need_object(max(kmax, 1), ed.bound, 4 * den * ed.scale) else np.int64
    K = num.astype(dtype)
    E = _int_matrix(ed.edge, dtype)
    N = _int_matrix(ed.normal, dtype)
    M2 = _int_matrix(ed.mid2, dtype)

    S = K @ E.T  # <xi, b - a> * den * D
    qs = den * ed.scale
    sin_s = _sin_pi_ratio(S, qs)
    S_f = (S / qs).astype(float)
    degenerate = S == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        sinc = np.where(degenerate, 1.0, sin_s / (np.pi * np.where(degenerate, 1.0, S_f)))
    phase = _phase_exp(K @ M2.T, 2 * qs)
    flux = ((K @ N.T) / qs).astype(float)  # <xi, nu_e>
    norm2 = ((K * K).sum(axis=1) / (den * den)).astype(float)

    origin = norm2 == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        total = (flux * phase * sinc).sum(axis=1) * (1j / (2 * np.pi * np.where(origin, 1.0, norm2)))
    total = np.where(origin, float(area(p)) + 0j, total)

    branches = np.where(
        origin,
        Branch.ORIGIN.value,
        np.where(degenerate.any(axis=1), Branch.DEGENERATE.value, Branch.GENERIC.value),
    )
    return total.astype(complex), branches


def _to_integer_frequencies(xis: Sequence[Sequence[Fraction]]) -> tuple[np.ndarray, int]:
    den = _common_denominator([c for xi in xis for c in xi])
    rows = [[int(c * den) for c in xi] for xi in xis]
    big = max((abs(c) for r in rows for c in r), default=0) >= 2**62
    return np.array(rows, dtype=object if big else np.int64).reshape(len(rows), -1), den


def polygon_ft(p: Polygon2, xi: Sequence[Rational]) -> FtValue:
    xi = as_frequency(xi, 2)
    K, den = _to_integer_frequencies([xi])
    values, branches = polygon_ft_array(p, K, den)
    return FtValue(complex(values[0]), Branch(branches[0]))


def _radial_ball(dim: int, radius: float, rho: np.ndarray) -> np.ndarray:
    """r^{m/2} J_{m/2}(2 pi r rho) / rho^{m/2} for rho > 0."""
    nu = dim / 2
    return radius**nu * jv(nu, 2 * np.pi * radius * rho) / rho**nu


def ball_ft_norm2(b: Ball, norm2: np.ndarray) -> np.ndarray:
    """Ball transform as a function of |xi|^2 (float array)."""
    norm2 = np.asarray(norm2, dtype=float)
    out = np.full(norm2.shape, b.volume())
    nz = norm2 > 0
    if np.any(nz):
        uniq, inv = np.unique(norm2[nz], return_inverse=True)
        out[nz] = _radial_ball(b.dim, float(b.radius), np.sqrt(uniq))[inv]
    return out


def ball_ft(b: Ball, xi: Sequence[Rational]) -> FtValue:
    xi = as_frequency(xi, b.dim)
    n2 = sum(c * c for c in xi)
    if n2 == 0:
        return FtValue(complex(b.volume()), Branch.ORIGIN)
    return FtValue(complex(float(ball_ft_norm2(b, np.array([float(n2)]))[0])), Branch.GENERIC)


def interval_ft_array(i: Interval1, num: np.ndarray, den: int = 1) -> np.ndarray:
    """sin(2 pi h xi) / (pi xi) at ``xi = num / den``; ``2 * h`` at the origin."""
    h = i.half_length
    num = np.asarray(num).reshape(-1)
    zero = num == 0
    if num.dtype != object and _need_object(int(np.max(np.abs(num), initial=1)), 2 * h.numerator, 2):
        num = num.astype(object)
    # 2 h xi = num * 2 h.num / (den * h.den)
    s = _sin_pi_ratio(num * (2 * h.numerator), den * h.denominator)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = s / (np.pi * (num / den).astype(float))
    return np.where(zero, float(2 * h), val)


def interval_ft(i: Interval1, xi: Sequence[Rational] | Rational) -> FtValue:
    if not isinstance(xi, (list, tuple)):
        xi = (xi,)
    (x,) = as_frequency(xi, 1)
    if x == 0:
        return FtValue(complex(float(2 * i.half_length)), Branch.ORIGIN)
    val = interval_ft_array(i, np.array([x.numerator], dtype=object), x.denominator)[0]
    return FtValue(complex(float(val)), Branch.GENERIC)


def _factor_ft_array(f, num: np.ndarray, den: int) -> tuple[np.ndarray, np.ndarray]:
    zero = np.all(num == 0, axis=1)
    if isinstance(f, Polygon2):
        return polygon_ft_array(f, num, den)
    if isinstance(f, Ball):
        norm2 = ((num * num).sum(axis=1) / (den * den)).astype(float)
        vals = ball_ft_norm2(f, norm2).astype(complex)
    elif isinstance(f, Interval1):
        vals = interval_ft_array(f, num[:, 0], den).astype(complex)
    else:
        raise TypeError(f"unsupported factor {type(f).__name__}")
    branches = np.where(zero, Branch.ORIGIN.value, Branch.GENERIC.value)
    return vals, branches


def ft_array(body: Body, num: np.ndarray, den: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized transform of any supported body at ``num / den`` (``(n, d)`` ints)."""
    num = np.asarray(num)
    factors = body.factors if isinstance(body, ProductBody) else (body,)
    d = sum(f.dim for f in factors)
    if num.ndim != 2 or num.shape[1] != d:
        raise DimensionMismatch(f"frequency array of shape {num.shape} for a body of dimension {d}")
    values = np.ones(len(num), dtype=complex)
    any_degenerate = np.zeros(len(num), dtype=bool)
    start = 0
    for f in factors:
        v, br = _factor_ft_array(f, num[:, start : start + f.dim], den)
        values = values * v
        any_degenerate |= br == Branch.DEGENERATE.value
        start += f.dim
    origin = np.all(num == 0, axis=1)
    branches = np.where(
        origin,
        Branch.ORIGIN.value,
        np.where(any_degenerate, Branch.DEGENERATE.value, Branch.GENERIC.value),
    )
    return values, branches


def product_ft(pb: ProductBody, xi: Sequence[Rational]) -> FtValue:
    xi = as_frequency(xi, pb.dim)
    K, den = _to_integer_frequencies([xi])
    values, branches = ft_array(pb, K, den)
    return FtValue(complex(values[0]), Branch(branches[0]))


def ft(body: Body, xi: Sequence[Rational] | Rational) -> FtValue:
    """Dispatch on body type."""
    if isinstance(body, Polygon2):
        return polygon_ft(body, xi)
    if isinstance(body, Ball):
        return ball_ft(body, xi)
    if isinstance(body, Interval1):
        return interval_ft(body, xi)
    if isinstance(body, ProductBody):
        return product_ft(body, xi)
    raise TypeError(f"unsupported body {type(body).__name__}")


@dataclass
class AgreementReport:
    dim: int
    range: int
    tol: float
    points_scanned: int
    max_abs_diff: float
    argmax: tuple[int, ...]
    violations: int
    points: list[dict] | None = field(default=None, repr=False)

    def summary(self) -> dict:
        return {
            "max_abs_diff": self.max_abs_diff,
            "argmax": list(self.argmax),
            "violations": self.violations,
            "points_scanned": self.points_scanned,
            "tol": self.tol,
        }

    def merge(self, other: "AgreementReport") -> "AgreementReport":
        """Combine reports over disjoint point sets (associative; ties keep the
        lexicographically smaller argmax)."""
        if (other.max_abs_diff, tuple(-c for c in other.argmax)) > (
            self.max_abs_diff,
            tuple(-c for c in self.argmax),
        ):
            best, arg = other.max_abs_diff, other.argmax
        else:
            best, arg = self.max_abs_diff, self.argmax
        pts = None
        if self.points is not None and other.points is not None:
            pts = self.points + other.points
        return AgreementReport(
            self.dim, self.range, self.tol, self.points_scanned + other.points_scanned,
            best, arg, self.violations + other.violations, pts,
        )


def lattice_points(dim: int, n: int) -> np.ndarray:
    """All of ``{-n..n}^dim`` in lexicographic order, as int64 rows."""
    axis = np.arange(-n, n + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def body_dim(body: Body) -> int:
    return body.dim


def lattice_agreement_report(
    A: Body,
    B: Body,
    n: int,
    tol: float = 1e-10,
    emit_points: bool = False,
    chunk: int = 50_000,
) -> AgreementReport:
    """Sweep ``xi`` over ``{-n..n}^d`` and compare the two transforms."""
    if n < 1:
        raise ValueError("lattice range must be >= 1")
    d = body_dim(A)
    if body_dim(B) != d:
        raise DimensionMismatch(f"bodies have dimensions {d} and {body_dim(B)}")
    pts = lattice_points(d, n)
    report = None
    for start in range(0, len(pts), chunk):
        block = pts[start : start + chunk]
        va, ba = ft_array(A, block)
        vb, bb = ft_array(B, block)
        diff = np.abs(va - vb)
        i = int(np.argmax(diff))
        records = None
        if emit_points:
            records = [
                {
                    "xi": [int(c) for c in block[j]],
                    "A": complex(va[j]),
                    "B": complex(vb[j]),
                    "abs_diff": float(diff[j]),
                    "branch_A": str(ba[j]),
                    "branch_B": str(bb[j]),
                }
                for j in range(len(block))
            ]
        part = AgreementReport(
            d, n, tol, len(block), float(diff[i]), tuple(int(c) for c in block[i]),
            int(np.count_nonzero(diff > tol)), records,
        )
        report = part if report is None else report.merge(part)
    return report


def write_points_csv(report: AgreementReport, fh) -> None:
    """CSV columns ``xi_1..xi_d,re_A,im_A,re_B,im_B,abs_diff,branch_A,branch_B``."""
    if report.points is None:
        raise ValueError("report was built without emit_points")
    header = [f"xi_{k + 1}" for k in range(report.dim)]
    header += ["re_A", "im_A", "re_B", "im_B", "abs_diff", "branch_A", "branch_B"]
    fh.write(",".join(header) + "\n")
    for rec in report.points:
        row = [str(c) for c in rec["xi"]]
        row += [repr(rec["A"].real), repr(rec["A"].imag), repr(rec["B"].real), repr(rec["B"].imag)]
        row += [repr(rec["abs_diff"]), rec["branch_A"], rec["branch_B"]]
        fh.write(",".join(row) + "\n")


def degenerate_lines(p: Polygon2) -> list[tuple[int, int]]:
    """Distinct primitive edge directions; ``xi`` takes the degenerate branch iff it
    is orthogonal to one of them."""
    seen: list[tuple[int, int]] = []
    for dx, dy in _edge_data(p).edge:
        g = math.gcd(dx, dy)
        v = (dx // g, dy // g)
        if v[0] < 0 or (v[0] == 0 and v[1] < 0):
            v = (-v[0], -v[1])
        if v not in seen:
            seen.append(v)
    return seen


__all__ = [
    "AgreementReport",
    "Branch",
    "DimensionMismatch",
    "FtValue",
    "as_frequency",
    "ball_ft",
    "ball_ft_norm2",
    "degenerate_lines",
    "ft",
    "ft_array",
    "interval_ft",
    "lattice_agreement_report",
    "lattice_points",
    "polygon_ft",
    "polygon_ft_array",
    "product_ft",
    "write_points_csv",
]
