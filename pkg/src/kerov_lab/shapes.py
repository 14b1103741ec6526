"""Limit shapes: the Vershik-Kerov-Logan-Shepp curve and the Wishart curves.

The Wishart curve ``Omega_alpha`` has center ``alpha``, support
``[(sqrt(a) - 1)**2, (sqrt(a) + 1)**2]`` and second derivative

    (t + a - 1) / (pi * t * sqrt(4a - (t - a - 1)**2))

on the support. For ``a == 1`` the second term of that density collapses
into a unit point mass at ``t = 0``, the left edge.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.integrate import cumulative_simpson, quad
from scipy.interpolate import CubicSpline

from .diagram import ContinualDiagram
from .errors import AlphaOutOfRange, EdgeSingularity


def _check_alpha(alpha: float) -> None:
    if not alpha >= 1:
        raise AlphaOutOfRange(f"alpha must be >= 1, got {alpha}")


def support(alpha: float) -> tuple[float, float]:
    _check_alpha(alpha)
    s = math.sqrt(alpha)
    return (s - 1.0) ** 2, (s + 1.0) ** 2


def _scalar_or_array(t, out):
    return float(out) if np.ndim(t) == 0 else out


def omega(t):
    """Vershik-Kerov-Logan-Shepp curve."""
    t_arr = np.asarray(t, dtype=float)
    inside = np.abs(t_arr) < 2
    tc = np.clip(t_arr, -2.0, 2.0)
    curve = (2 / np.pi) * (tc * np.arcsin(tc / 2) + np.sqrt(4 - tc * tc))
    return _scalar_or_array(t, np.where(inside, curve, np.abs(t_arr)))


def _omega_alpha_inner(t: np.ndarray, alpha: float) -> np.ndarray:
    # 2a + 2t - 1 - (t - a)^2 == (t - lo)(hi - t); the factored form vanishes
    # exactly at the edges, and arctan2 against it replaces arcsin near +-1
    lo, hi = support(alpha)
    root = np.sqrt(np.maximum((t - lo) * (hi - t), 0.0))
    if alpha == 1:
        return ((t - 2) * np.arctan2(t - 2, root) + root) / np.pi + t / 2
    arc = np.arctan2(alpha + 1 - t, root)
    tan = np.arctan2((alpha - 1) ** 2 - t * (alpha + 1), (alpha - 1) * root)
    return ((2 * alpha - t) * arc - t * tan + root) / np.pi


def omega_alpha(t, alpha: float):
    _check_alpha(alpha)
    lo, hi = support(alpha)
    t_arr = np.asarray(t, dtype=float)
    inside = (t_arr > lo) & (t_arr < hi)
    out = np.abs(t_arr - alpha)
    if np.any(inside):
        out = np.where(inside, _omega_alpha_inner(np.clip(t_arr, lo, hi), alpha), out)
    return _scalar_or_array(t, out)


def edge_atom(alpha: float) -> float:
    """Mass of the point part of the second derivative, sitting at the left edge."""
    _check_alpha(alpha)
    return 1.0 if alpha == 1 else 0.0


def omega_alpha_density(t: float, alpha: float) -> float:
    _check_alpha(alpha)
    lo, hi = support(alpha)
    if t == lo or t == hi:
        raise EdgeSingularity(f"density diverges at the support edge {t}")
    if t < lo or t > hi:
        return 0.0
    return (t + alpha - 1) / (math.pi * t * math.sqrt(4 * alpha - (t - alpha - 1) ** 2))


def _density_dtheta(theta, alpha: float):
    # density(x) dx with x = (a + 1) + 2 sqrt(a) sin(theta); the edge root cancels
    if alpha == 1:
        return np.full_like(np.asarray(theta, dtype=float), 1 / np.pi)
    x = (alpha + 1) + 2 * math.sqrt(alpha) * np.sin(theta)
    return (x + alpha - 1) / (np.pi * x)


def density_mass(alpha: float) -> float:
    """Integral of the absolutely continuous part of the density over the support."""
    _check_alpha(alpha)
    value, _ = quad(_density_dtheta, -np.pi / 2, np.pi / 2, args=(alpha,),
                    epsabs=1e-13, epsrel=1e-13, limit=200)
    return value


class LimitShape(ContinualDiagram):
    def __init__(self, kind: str, alpha: float | None = None):
        self.kind = kind
        self.alpha = alpha
        if kind == "vkls":
            super().__init__(omega, 0.0, (-2.0, 2.0))
        elif kind == "wishart":
            _check_alpha(alpha)
            super().__init__(lambda t: omega_alpha(t, alpha), alpha, support(alpha))
        else:
            raise ValueError(f"unknown limit shape {kind!r}")


def vkls_shape() -> LimitShape:
    return LimitShape("vkls")


def wishart_shape(alpha: float) -> LimitShape:
    return LimitShape("wishart", alpha)


class ReconstructedShape(ContinualDiagram):
    """Diagram obtained by integrating the Wishart density twice."""

    def __init__(self, alpha, theta, values, slopes):
        lo, hi = support(alpha)
        c, r = alpha + 1, 2 * math.sqrt(alpha)
        spline = CubicSpline(theta, values)
        self.right_edge_value = float(values[-1])
        self.slope_change = float(slopes[-1] + 1.0)
        super().__init__(lambda t: spline(np.arcsin(np.clip((t - c) / r, -1, 1))),
                         alpha, (lo, hi))


def reconstruct_from_density(alpha: float, grid_n: int = 4001) -> ReconstructedShape:
    """Rebuild ``Omega_alpha`` from its second derivative.

    Starts at the left edge with value ``|edge - alpha|`` and slope -1 and
    integrates twice in the angle variable ``x = (a+1) + 2 sqrt(a) sin(theta)``,
    where the inverse-square-root edge behaviour disappears.
    """
    _check_alpha(alpha)
    if grid_n < 100:
        raise ValueError("grid_n must be at least 100")
    if grid_n % 2 == 0:
        grid_n += 1
    lo, _ = support(alpha)
    theta = np.linspace(-np.pi / 2, np.pi / 2, grid_n)
    slopes = -1.0 + edge_atom(alpha) + cumulative_simpson(
        _density_dtheta(theta, alpha), x=theta, initial=0.0)
    dx = 2 * math.sqrt(alpha) * np.cos(theta)
    values = abs(lo - alpha) + cumulative_simpson(slopes * dx, x=theta, initial=0.0)
    return ReconstructedShape(alpha, theta, values, slopes)
