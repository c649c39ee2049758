"""Exact-rational convex bodies: polygons, balls, intervals and their products.

Every coordinate is a :class:`fractions.Fraction`, so orientation, convexity,
symmetry and membership are decided exactly.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Union[int, str, float, Fraction]
Point = tuple[Fraction, Fraction]


class GeometryError(ValueError):
    """Raised for malformed bodies (degenerate polygons, bad radii, ...)."""


def as_fraction(value: Rational) -> Fraction:
    """Exact conversion; floats are taken at their binary value, strings may be
    ``"p/q"`` or a decimal literal."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"cannot parse rational {value!r}") from exc
    if isinstance(value, float) and not math.isfinite(value):
        raise GeometryError(f"non-finite coordinate {value!r}")
    return Fraction(value)


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _signed_area(vertices: Sequence[Point]) -> Fraction:
    n = len(vertices)
    twice = sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )
    return Fraction(twice, 2)


@dataclass(frozen=True)
class Polygon2:
    """Simple polygon with rational vertices stored counterclockwise.

    The constructor reverses clockwise input and rejects repeated consecutive
    vertices, collinear consecutive triples and zero area.
    """

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable[Sequence[Rational]]):
        pts = tuple((as_fraction(v[0]), as_fraction(v[1])) for v in vertices)
        n = len(pts)
        if n < 3:
            raise GeometryError("a polygon needs at least 3 vertices")
        for i in range(n):
            if pts[i] == pts[(i + 1) % n]:
                raise GeometryError(f"repeated consecutive vertex {pts[i]}")
        for i in range(n):
            if _cross(pts[i - 1], pts[i], pts[(i + 1) % n]) == 0:
                raise GeometryError(f"collinear consecutive vertices at {pts[i]}")
        signed = _signed_area(pts)
        if signed == 0:
            raise GeometryError("polygon has zero area")
        if signed < 0:
            pts = (pts[0],) + tuple(reversed(pts[1:]))
        object.__setattr__(self, "vertices", pts)

    dim = 2

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def contains(self, x: Sequence[Rational]) -> bool:
        """Exact membership; the boundary counts as inside."""
        p = (as_fraction(x[0]), as_fraction(x[1]))
        return all(_cross(a, b, p) >= 0 for a, b in self.edges())

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        """Float membership for an ``(n, 2)`` array of points."""
        x = np.asarray(x, dtype=float)
        inside = np.ones(len(x), dtype=bool)
        for a, b in self.edges():
            ax, ay = float(a[0]), float(a[1])
            ex, ey = float(b[0] - a[0]), float(b[1] - a[1])
            inside &= ex * (x[:, 1] - ay) - ey * (x[:, 0] - ax) >= 0
        return inside

    def bounding_box(self) -> tuple[Point, Point]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), min(ys)), (max(xs), max(ys))

    def translated(self, t: Sequence[Rational]) -> "Polygon2":
        tx, ty = as_fraction(t[0]), as_fraction(t[1])
        return Polygon2([(x + tx, y + ty) for x, y in self.vertices])

    def scaled(self, s: Rational) -> "Polygon2":
        s = as_fraction(s)
        if s <= 0:
            raise GeometryError("scale factor must be positive")
        return Polygon2([(s * x, s * y) for x, y in self.vertices])

    def transformed(self, matrix: Sequence[Sequence[Rational]], t: Sequence[Rational] = (0, 0)) -> "Polygon2":
        """Image under ``x -> M x + t`` (orientation is re-canonicalized)."""
        (a, b), (c, d) = [[as_fraction(v) for v in row] for row in matrix]
        tx, ty = as_fraction(t[0]), as_fraction(t[1])
        return Polygon2([(a * x + b * y + tx, c * x + d * y + ty) for x, y in self.vertices])

    def measure(self) -> Fraction:
        return area(self)


@dataclass(frozen=True)
class Ball:
    """Closed origin-centered ball in R^dim."""

    dim: int
    radius: Fraction

    def __init__(self, dim: int, radius: Rational = 1):
        if int(dim) != dim or dim < 1:
            raise GeometryError(f"ball dimension must be a positive integer, got {dim!r}")
        r = as_fraction(radius)
        if r <= 0:
            raise GeometryError("ball radius must be positive")
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "radius", r)

    def contains(self, x: Sequence[Rational]) -> bool:
        if len(x) != self.dim:
            raise GeometryError("point dimension does not match ball")
        return sum(as_fraction(c) ** 2 for c in x) <= self.radius**2

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float).reshape(len(x), self.dim)
        return np.einsum("ij,ij->i", x, x) <= float(self.radius) ** 2

    def bounding_box(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        return (-self.radius,) * self.dim, (self.radius,) * self.dim

    def volume(self) -> float:
        m = self.dim
        return float(self.radius) ** m * math.pi ** (m / 2) / math.gamma(m / 2 + 1)

    def measure(self) -> float:
        return self.volume()


@dataclass(frozen=True)
class Interval1:
    """Symmetric interval [-half_length, half_length]."""

    half_length: Fraction

    def __init__(self, half_length: Rational):
        h = as_fraction(half_length)
        if h <= 0:
            raise GeometryError("interval half-length must be positive")
        object.__setattr__(self, "half_length", h)

    dim = 1

    def contains(self, x: Sequence[Rational] | Rational) -> bool:
        if isinstance(x, (list, tuple)):
            (x,) = x
        return abs(as_fraction(x)) <= self.half_length

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        return np.abs(np.asarray(x, dtype=float).reshape(-1)) <= float(self.half_length)

    def bounding_box(self) -> tuple[tuple[Fraction], tuple[Fraction]]:
        return (-self.half_length,), (self.half_length,)

    def measure(self) -> Fraction:
        return 2 * self.half_length


Factor = Union[Polygon2, Ball, Interval1]


@dataclass(frozen=True)
class ProductBody:
    """Cartesian product; factor ``i`` acts on its own block of coordinates."""

    factors: tuple[Factor, ...]

    def __init__(self, factors: Iterable[Factor]):
        fs = tuple(factors)
        if not fs:
            raise GeometryError("a product needs at least one factor")
        for f in fs:
            if not isinstance(f, (Polygon2, Ball, Interval1)):
                raise GeometryError(f"unsupported product factor {type(f).__name__}")
        object.__setattr__(self, "factors", fs)

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    total_dim = dim

    def blocks(self) -> list[slice]:
        out, start = [], 0
        for f in self.factors:
            out.append(slice(start, start + f.dim))
            start += f.dim
        return out

    def contains(self, x: Sequence[Rational]) -> bool:
        if len(x) != self.dim:
            raise GeometryError("point dimension does not match product")
        return all(f.contains(list(x[s])) for f, s in zip(self.factors, self.blocks()))

    def contains_array(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        inside = np.ones(len(x), dtype=bool)
        for f, s in zip(self.factors, self.blocks()):
            inside &= f.contains_array(x[:, s])
        return inside

    def bounding_box(self):
        lo: list[Fraction] = []
        hi: list[Fraction] = []
        for f in self.factors:
            a, b = f.bounding_box()
            lo.extend(a)
            hi.extend(b)
        return tuple(lo), tuple(hi)

    def measure(self) -> float:
        return math.prod(float(f.measure()) for f in self.factors)


Body = Union[Polygon2, Ball, Interval1, ProductBody]


def area(p: Polygon2) -> Fraction:
    """Exact shoelace area."""
    return _signed_area(p.vertices)


def make_rhombus_R() -> Polygon2:
    return Polygon2([(-1, 0), (0, 3), (1, 0), (0, -3)])


def make_hexagon_H() -> Polygon2:
    return Polygon2([(-1, 1), (0, 2), (1, 1), (1, -1), (0, -2), (-1, -1)])


def make_square(side: Rational = 1, center: Sequence[Rational] = (0, 0)) -> Polygon2:
    h = as_fraction(side) / 2
    cx, cy = as_fraction(center[0]), as_fraction(center[1])
    return Polygon2([(cx - h, cy - h), (cx + h, cy - h), (cx + h, cy + h), (cx - h, cy + h)])


def convex_hull(points: Iterable[Sequence[Rational]]) -> Polygon2:
    """Exact monotone-chain hull; collinear points are dropped."""
    pts = sorted({(as_fraction(p[0]), as_fraction(p[1])) for p in points})
    if len(pts) < 3:
        raise GeometryError("hull needs at least 3 distinct points")

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    return Polygon2(lower[:-1] + upper[:-1])


def is_convex(p: Polygon2) -> bool:
    n = len(p.vertices)
    signs = {
        _cross(p.vertices[i - 1], p.vertices[i], p.vertices[(i + 1) % n]) > 0 for i in range(n)
    }
    return len(signs) == 1


def centroid(p: Polygon2) -> Point:
    """Area centroid (exact)."""
    a6 = 6 * area(p)
    cx = cy = Fraction(0)
    for (x0, y0), (x1, y1) in p.edges():
        w = x0 * y1 - x1 * y0
        cx += (x0 + x1) * w
        cy += (y0 + y1) * w
    return cx / a6, cy / a6


def is_centrally_symmetric(p: Polygon2) -> bool:
    n = len(p.vertices)
    if n % 2:
        return False
    cx, cy = centroid(p)
    half = n // 2
    return all(
        p.vertices[(i + half) % n] == (2 * cx - x, 2 * cy - y) for i, (x, y) in enumerate(p.vertices)
    )


DISTINCT = "Distinct"
POSSIBLY_CONGRUENT = "PossiblyCongruent"


def _vertex_signature(p: Polygon2) -> list[tuple[Fraction, Fraction, Fraction]]:
    # (|incoming|^2, <-incoming, outgoing>, |outgoing|^2) per vertex: exact stand-in
    # for (edge length^2, interior-angle cosine).
    n = len(p.vertices)
    sig = []
    for i in range(n):
        a, v, b = p.vertices[i - 1], p.vertices[i], p.vertices[(i + 1) % n]
        ux, uy = a[0] - v[0], a[1] - v[1]
        wx, wy = b[0] - v[0], b[1] - v[1]
        sig.append((ux * ux + uy * uy, ux * wx + uy * wy, wx * wx + wy * wy))
    return sig


def congruence_distinguisher(p: Polygon2, q: Polygon2) -> str:
    """``Distinct`` proves p and q are not related by a rigid motion (reflections
    included); ``PossiblyCongruent`` proves nothing."""
    if len(p) != len(q) or area(p) != area(q):
        return DISTINCT
    sp, sq = _vertex_signature(p), _vertex_signature(q)
    mirrored = [(c, d, a) for a, d, c in reversed(sq)]
    n = len(sp)
    for cand in (sq, mirrored):
        for k in range(n):
            if cand[k:] + cand[:k] == sp:
                return POSSIBLY_CONGRUENT
    return DISTINCT


def load_polygon(path: str | Path) -> Polygon2:
    """Read ``{"vertices": [["p/q", "1.5"], ...]}``; numbers are parsed exactly."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        raw = data["vertices"]
    except (TypeError, KeyError) as exc:
        raise GeometryError(f"{path}: missing 'vertices'") from exc
    verts = []
    for v in raw:
        if len(v) != 2:
            raise GeometryError(f"{path}: vertex {v!r} is not a pair")
        # json floats have already been rounded; re-parse their repr as a decimal
        verts.append(tuple(as_fraction(c if isinstance(c, str) else repr(c)) for c in v))
    return Polygon2(verts)


def dump_polygon(p: Polygon2) -> str:
    return json.dumps({"vertices": [[str(x), str(y)] for x, y in p.vertices]})
