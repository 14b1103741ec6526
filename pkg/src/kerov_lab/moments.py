"""Limit moments of Wigner and Wishart diagrams.

The Wishart limits ``m_k`` are polynomials in alpha reached by two
independent routes: a weighted sum over Dyck paths, and the beta-derivative
of the first-return generating function ``d(z)``.
"""
from __future__ import annotations

import math
from typing import Iterator

import numpy as np

from .errors import BoundExceeded, BranchPoint
from .linalg import principal_submatrix
from .poly import BiPoly, Poly

DYCK_BOUND = 14
RECURRENCE_BOUND = 20


def catalan(l: int) -> int:
    return math.comb(2 * l, l) // (l + 1)


def wigner_limit_moment(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    if k % 2:
        return 0
    return math.comb(k, k // 2)


def enumerate_dyck(l: int) -> Iterator[tuple[int, ...]]:
    """Yield every Dyck path of length ``2l`` as a tuple of +1/-1 steps."""
    if l < 1:
        raise ValueError("l must be positive")
    if l > DYCK_BOUND:
        raise BoundExceeded(f"Dyck enumeration is capped at l={DYCK_BOUND}")
    n = 2 * l
    steps = [0] * n

    def walk(pos, height, ups):
        if pos == n:
            yield tuple(steps)
            return
        if ups < l:
            steps[pos] = 1
            yield from walk(pos + 1, height + 1, ups + 1)
        if height > 0:
            steps[pos] = -1
            yield from walk(pos + 1, height - 1, ups)

    return walk(0, 0, 0)


def dyck_stats(path) -> tuple[int, int]:
    """Count down-steps leaving an odd height (a) and an even height (b)."""
    a = b = 0
    height = 0
    for step in path:
        if step not in (1, -1):
            raise ValueError(f"invalid step {step!r}")
        if step == -1:
            if height % 2:
                a += 1
            else:
                b += 1
        height += step
        if height < 0:
            raise ValueError("path dips below zero")
    if height != 0:
        raise ValueError("path does not return to zero")
    return a, b


def wishart_moment_oracle(k: int) -> Poly:
    """``m_k = sum over Dyck paths of length 2k of (b + 1) * alpha**a``."""
    if k > DYCK_BOUND:
        raise BoundExceeded(f"Dyck enumeration is capped at k={DYCK_BOUND}")
    coeffs = [0] * (k + 1)
    for path in enumerate_dyck(k):
        a, b = dyck_stats(path)
        coeffs[a] += b + 1
    return Poly(coeffs)


_ALPHA = BiPoly.monomial(1, 1, 0)
_BETA = BiPoly.monomial(1, 0, 1)


def d_series(r_max: int) -> list[BiPoly]:
    """``d_0..d_{r_max}`` from ``d_r = beta sum_{j=2}^r d_{r-j} d_{j-1} + alpha d_{r-1}``."""
    if r_max > RECURRENCE_BOUND:
        raise BoundExceeded(f"d_series is capped at r={RECURRENCE_BOUND}")
    d = [BiPoly.monomial(1)]
    for r in range(1, r_max + 1):
        acc = BiPoly()
        for j in range(2, r + 1):
            acc = acc + d[r - j] * d[j - 1]
        d.append(_BETA * acc + _ALPHA * d[r - 1])
    return d


def de_series(r_max: int) -> tuple[list[BiPoly], list[BiPoly]]:
    """The coupled first-return recurrences for ``d_r`` and ``e_r``."""
    one = BiPoly.monomial(1)
    d, e = [one], [one]
    for r in range(1, r_max + 1):
        dr, er = BiPoly(), BiPoly()
        for j in range(1, r + 1):
            dr = dr + d[r - j] * e[j - 1]
            er = er + e[r - j] * d[j - 1]
        d.append(_ALPHA * dr)
        e.append(_BETA * er)
    return d, e


def m_from_beta_derivative(k_max: int) -> list[Poly]:
    """``m_0..m_{k_max}`` as coefficients of ``d/dbeta (beta d(z))`` at beta = 1."""
    if k_max > RECURRENCE_BOUND:
        raise BoundExceeded(f"m_from_beta_derivative is capped at k={RECURRENCE_BOUND}")
    return [dr.at_beta(1) + dr.d_beta().at_beta(1) for dr in d_series(k_max)]


def g_alpha_closed_form(z: float, alpha: float) -> float:
    radicand = (alpha - 1) ** 2 * z * z - 2 * (alpha + 1) * z + 1
    # the admissible branch is z below the first root 1/(sqrt(a)+1)^2
    if radicand <= 0 or z >= 1 / (math.sqrt(alpha) + 1) ** 2:
        raise BranchPoint(f"z={z} is not below the branch point for alpha={alpha}")
    return 0.5 * (1 + ((alpha - 1) * z + 1) / math.sqrt(radicand))


def g_alpha_partial_sum(z: float, alpha: float, k_max: int) -> float:
    ms = m_from_beta_derivative(k_max)
    return math.fsum(float(m(alpha)) * z ** k for k, m in enumerate(ms))


def trace_power_difference(s: np.ndarray, k: int) -> float:
    """``tr(S^k) - tr(S_hat^k)`` by explicit matrix powers."""
    s = np.asarray(s, dtype=float)
    if not 1 <= k <= 6 or s.shape[0] > 64:
        raise BoundExceeded("trace_power_difference is limited to k <= 6, order <= 64")
    sub = principal_submatrix(s)
    return float(np.trace(np.linalg.matrix_power(s, k)) - np.trace(np.linalg.matrix_power(sub, k)))
