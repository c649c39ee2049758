"""Numerical-integration oracles, independent of the closed forms in ``transform``.

None of these routines share code with the edge-sum or Bessel evaluations: the
polygon oracle integrates the kernel over a centroid fan of triangles, the ball
oracle integrates cross-sectional volumes, and the Monte Carlo estimator samples
the indicator directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bodies import Ball, Body, Interval1, Polygon2, ProductBody, Rational, as_fraction, centroid

MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class QuadratureSpec:
    """``order`` is nodes per axis per panel; ``None`` picks the default rule."""

    order: int | None = None
    mc_samples: int = 1_000_000
    seed: int = 42

    def __post_init__(self):
        if self.order is not None and self.order < 2:
            raise ValueError("quadrature order must be >= 2")
        if self.mc_samples < 1:
            raise ValueError("mc_samples must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def default_order(xi: Sequence[float]) -> int:
    return max(24, 8 * math.ceil(max((abs(float(c)) for c in xi), default=0)))


def _xi_float(xi: Sequence[Rational]) -> np.ndarray:
    return np.array([float(as_fraction(c)) for c in xi])


def _gl01(order: int, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes/weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, 1.0, panels + 1)
    h = np.diff(edges)
    nodes = (edges[:-1, None] + h[:, None] * (x[None, :] + 1) / 2).ravel()
    weights = (h[:, None] * w[None, :] / 2).ravel()
    return nodes, weights


def polygon_ft_quadrature(p: Polygon2, xi: Sequence[Rational], spec: QuadratureSpec | None = None) -> complex:
    """Kernel integral over a centroid fan of triangles.

    Each triangle ``(c, v_i, v_{i+1})`` is the Duffy image of the unit square,
    ``(u, w) -> c + u (v_i - c) + u w (v_{i+1} - v_i)`` with Jacobian ``u * |det|``,
    integrated by a tensor Gauss-Legendre rule. The square is split into panels so
    that each panel sees at most ``order / 12`` oscillation periods.
    """
    spec = spec or QuadratureSpec()
    if len(xi) != 2:
        raise ValueError("polygon frequency must have length 2")
    xf = _xi_float(xi)
    order = spec.order or default_order(xf)
    c = np.array([float(v) for v in centroid(p)])
    verts = np.array([[float(x), float(y)] for x, y in p.vertices])
    total = 0j
    for i in range(len(verts)):
        a = verts[i] - c
        b = verts[(i + 1) % len(verts)] - verts[i]
        jac = abs(a[0] * b[1] - a[1] * b[0])
        cycles = np.linalg.norm(xf) * max(np.linalg.norm(a), np.linalg.norm(a + b), np.linalg.norm(b))
        panels = max(1, math.ceil(cycles * 12 / order))
        u, wu = _gl01(order, panels)
        w, ww = _gl01(order, panels)
        U, W = np.meshgrid(u, w, indexing="ij")
        pts = c + U[..., None] * (a + W[..., None] * b)
        kernel = np.exp(-2j * np.pi * (pts @ xf))
        total += jac * np.einsum("i,j,ij->", wu, ww, U * kernel)
    return complex(total)


def _unit_ball_volume(m: int) -> float:
    return math.pi ** (m / 2) / math.gamma(m / 2 + 1)


def ball_ft_slab_quadrature(b: Ball, xi: Sequence[Rational], spec: QuadratureSpec | None = None) -> float:
    """``int_{-r}^{r} vol_{m-1}(r^2 - t^2)^{(m-1)/2} cos(2 pi |xi| t) dt``.

    The substitution ``t = r sin(theta)`` removes the endpoint singularity of the
    cross-section; the theta integral uses composite Gauss-Legendre with at least
    64 panels, more as ``|xi| r`` grows.
    """
    spec = spec or QuadratureSpec()
    if len(xi) != b.dim:
        raise ValueError("frequency length does not match ball dimension")
    m, r = b.dim, float(b.radius)
    rho = float(np.linalg.norm(_xi_float(xi)))
    order = spec.order or 16
    panels = max(64, math.ceil(4 * rho * r))
    s, w = _gl01(order, panels)
    theta = math.pi * (s - 0.5)
    w = math.pi * w
    integrand = r**m * np.cos(theta) ** m * np.cos(2 * math.pi * rho * r * np.sin(theta))
    return float(_unit_ball_volume(m - 1) * (integrand @ w))


def _box(body: Body) -> tuple[np.ndarray, np.ndarray]:
    lo, hi = body.bounding_box()
    return np.array([float(v) for v in lo]), np.array([float(v) for v in hi])


def _chunk_rng(seed: int, index: int) -> np.random.Generator:
    # counter-based: chunk k depends only on (seed, k), so chunks may be split across workers
    return np.random.Generator(np.random.Philox(key=seed).jumped(index))


def mc_indicator_ft(body: Body, xi: Sequence[Rational], spec: QuadratureSpec | None = None) -> tuple[complex, complex]:
    """Uniform sampling over the bounding box.

    Returns ``(estimate, standard_error)`` where the standard error is reported
    per component as ``complex(se_re, se_im)``.
    """
    spec = spec or QuadratureSpec()
    lo, hi = _box(body)
    d = len(lo)
    xf = _xi_float(xi)
    if len(xf) != d:
        raise ValueError("frequency length does not match body dimension")
    vol = float(np.prod(hi - lo))
    n = spec.mc_samples
    s_re = s_im = q_re = q_im = 0.0
    for k, start in enumerate(range(0, n, MC_CHUNK)):
        size = min(MC_CHUNK, n - start)
        x = lo + (hi - lo) * _chunk_rng(spec.seed, k).random((size, d))
        ind = body.contains_array(x)
        ang = -2 * np.pi * (x @ xf)
        re = np.where(ind, np.cos(ang), 0.0)
        im = np.where(ind, np.sin(ang), 0.0)
        s_re += re.sum()
        s_im += im.sum()
        q_re += (re * re).sum()
        q_im += (im * im).sum()
    mean_re, mean_im = s_re / n, s_im / n
    if n > 1:
        var_re = max(q_re / n - mean_re**2, 0.0) * n / (n - 1)
        var_im = max(q_im / n - mean_im**2, 0.0) * n / (n - 1)
    else:
        var_re = var_im = 0.0
    estimate = complex(vol * mean_re, vol * mean_im)
    stderr = complex(vol * math.sqrt(var_re / n), vol * math.sqrt(var_im / n))
    return estimate, stderr


def interval_ft_quadrature(i: Interval1, xi: Sequence[Rational] | Rational, spec: QuadratureSpec | None = None) -> float:
    """Composite Gauss-Legendre of ``cos(2 pi xi t)`` over ``[-h, h]``."""
    spec = spec or QuadratureSpec()
    if isinstance(xi, (list, tuple)):
        (xi,) = xi
    x = float(as_fraction(xi))
    h = float(i.half_length)
    s, w = _gl01(spec.order or 16, max(16, math.ceil(8 * abs(x) * h)))
    t = -h + 2 * h * s
    return float(2 * h * (np.cos(2 * math.pi * x * t) @ w))


def oracle_ft(body: Body, xi: Sequence[Rational], spec: QuadratureSpec | None = None) -> complex:
    """Deterministic quadrature oracle for any supported body (products multiply)."""
    if isinstance(body, Polygon2):
        return polygon_ft_quadrature(body, xi, spec)
    if isinstance(body, Ball):
        return complex(ball_ft_slab_quadrature(body, xi, spec))
    if isinstance(body, Interval1):
        return complex(interval_ft_quadrature(body, xi, spec))
    if isinstance(body, ProductBody):
        if len(xi) != body.dim:
            raise ValueError("frequency length does not match product dimension")
        out = 1 + 0j
        for f, sl in zip(body.factors, body.blocks()):
            out *= oracle_ft(f, list(xi[sl]), spec)
        return out
    raise TypeError(f"unsupported body {type(body).__name__}")
