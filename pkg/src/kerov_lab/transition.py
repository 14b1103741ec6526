"""Kerov's transition measure at the level of moment sequences.

    1 + sum mu_k z^k = exp(sum p_k z^k / k)

Differentiating gives ``k mu_k = sum_{j=1}^k p_j mu_{k-j}``, which the
forward and inverse transforms below use directly. Coefficients may be ints,
Fractions or :class:`~kerov_lab.poly.Poly` values.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

import numpy as np
from scipy.integrate import quad

from .errors import BoundExceeded, OracleMismatch
from .moments import catalan, wigner_limit_moment
from .poly import Poly


def p_to_moments(p) -> list:
    """``p[0..K-1]`` holds p_1..p_K; returns mu_0..mu_K."""
    p = list(p)
    if not p:
        raise ValueError("need at least one p value")
    mu = [1]
    for k in range(1, len(p) + 1):
        acc = 0
        for j in range(1, k + 1):
            acc = acc + p[j - 1] * mu[k - j]
        mu.append(acc / k if isinstance(acc, Poly) else _exact_div(acc, k))
    return mu


def moments_to_p(mu) -> list:
    """Inverse of :func:`p_to_moments`; ``mu[0]`` must be 1."""
    mu = list(mu)
    if mu[0] != 1:
        raise ValueError("mu_0 must equal 1")
    p = []
    for k in range(1, len(mu)):
        acc = k * mu[k]
        for j in range(1, k):
            acc = acc - p[j - 1] * mu[k - j]
        p.append(acc)
    return p


def _exact_div(value, k):
    q = Fraction(value) / k
    return q.numerator if q.denominator == 1 else q


def vkls_p_tilde(k_max: int) -> list[int]:
    return [wigner_limit_moment(k) for k in range(1, k_max + 1)]


def semicircle_moments(k_max: int) -> list[int]:
    if k_max > 30:
        raise BoundExceeded("semicircle_moments is capped at k=30")
    return [0 if k % 2 else catalan(k // 2) for k in range(k_max + 1)]


def narayana(k: int, r: int) -> int:
    return math.comb(k, r) * math.comb(k, r - 1) // k


def mp_moments_narayana(k_max: int) -> list[Poly]:
    """Marchenko-Pastur moments as exact polynomials in alpha, mu_0..mu_{k_max}."""
    if k_max > 20:
        raise BoundExceeded("mp_moments is capped at k=20")
    out = [Poly.const(1)]
    for k in range(1, k_max + 1):
        out.append(Poly([0] + [narayana(k, r) for r in range(1, k + 1)]))
    return out


def mp_moment_quadrature(k: int, alpha: float) -> float:
    """k-th moment of ``sqrt((l+ - x)(x - l-)) / (2 pi x)`` by quadrature in the angle variable."""
    c, r = alpha + 1, 2 * math.sqrt(alpha)

    def integrand(theta):
        x = c + r * math.sin(theta)
        return x ** (k - 1) * (r * math.cos(theta)) ** 2 / (2 * math.pi)

    value, _ = quad(integrand, -np.pi / 2, np.pi / 2, epsabs=0, epsrel=1e-13, limit=200)
    return value


@functools.lru_cache(maxsize=None)
def validate_mp_oracles(k_max: int = 20, alphas=(1.0, 2.25), rtol: float = 1e-7) -> float:
    """Compare the Narayana and quadrature routes; returns the worst relative gap."""
    polys = mp_moments_narayana(k_max)
    worst = 0.0
    for alpha in alphas:
        for k in range(k_max + 1):
            exact = float(polys[k](alpha))
            gap = abs(mp_moment_quadrature(k, alpha) - exact) / abs(exact)
            worst = max(worst, gap)
            if gap > rtol:
                raise OracleMismatch(f"MP moment {k} at alpha={alpha}: relative gap {gap:.3g}")
    return worst


def mp_moments(k_max: int, alpha=None) -> list:
    """MP moments mu_0..mu_{k_max}: exact polynomials, or values at ``alpha``."""
    polys = mp_moments_narayana(k_max)
    validate_mp_oracles()
    if alpha is None:
        return polys
    return [p(alpha) for p in polys]
