"""Interlacing sequences and the rectangular / continual Young diagrams built on them.

A rectangular diagram with minima ``x_1 >= ... >= x_n`` and maxima
``y_1 >= ... >= y_{n-1}`` is evaluated through the closed form

    w(t) = sum_i |t - x_i| - sum_j |t - y_j|,

which has slope +-1 between consecutive extrema and equals ``|t - z0|`` far
from the extrema, ``z0 = sum x_i - sum y_j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InterlacingViolation, LengthMismatch, NonpositiveScale


def _frozen(values) -> np.ndarray:
    a = np.array(values, dtype=float).reshape(-1)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class InterlacingPair:
    minima: np.ndarray
    maxima: np.ndarray

    @property
    def n(self) -> int:
        return len(self.minima)

    @property
    def center(self) -> float:
        return math.fsum(np.concatenate([self.minima, -self.maxima]))

    def scaled(self, s: float) -> "InterlacingPair":
        return InterlacingPair(_frozen(self.minima / s), _frozen(self.maxima / s))


def interlacing_gap(minima, maxima) -> float:
    """Largest amount by which a descending pair violates weak interlacing (0 if none)."""
    x = np.asarray(minima, dtype=float)
    y = np.asarray(maxima, dtype=float)
    if len(y) == 0:
        return 0.0
    return float(max(0.0, np.max(y - x[:-1]), np.max(x[1:] - y)))


def validate_interlacing(minima, maxima, tol: float = 0.0) -> InterlacingPair:
    """Sort both sequences descending and check weak interlacing.

    A maximum that overshoots a neighbouring minimum by at most ``tol`` is
    clamped onto that minimum; larger violations raise
    :class:`InterlacingViolation` with the 1-based index of the maximum.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    x = -np.sort(-np.asarray(minima, dtype=float).reshape(-1))
    y = -np.sort(-np.asarray(maxima, dtype=float).reshape(-1))
    if len(x) == 0 or len(x) != len(y) + 1:
        raise LengthMismatch(f"need len(minima) == len(maxima) + 1, got {len(x)} and {len(y)}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("interlacing input must be finite")

    above = y - x[:-1]  # y_j > x_j
    below = x[1:] - y  # y_j < x_{j+1}
    gaps = np.maximum(above, below)
    if len(gaps) and gaps.max() > tol:
        j = int(np.argmax(gaps > tol))
        raise InterlacingViolation(j + 1, float(gaps[j]))
    y = np.where(above > 0, x[:-1], y)
    y = np.where(below > 0, x[1:], y)
    return InterlacingPair(_frozen(x), _frozen(y))


class ContinualDiagram:
    """A 1-Lipschitz function equal to ``|t - center|`` outside ``support``."""

    def __init__(self, evaluator: Callable[[np.ndarray], np.ndarray], center: float,
                 support: tuple[float, float], breakpoints=()):
        self._evaluator = evaluator
        self.center = float(center)
        self.support = (float(support[0]), float(support[1]))
        self._breakpoints = np.asarray(breakpoints, dtype=float)

    def __call__(self, t):
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        lo, hi = self.support
        out = np.abs(t_arr - self.center)
        inner = (t_arr > lo) & (t_arr < hi)
        if inner.any():
            out[inner] = self._evaluator(t_arr[inner])
        return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))

    def breakpoints(self) -> np.ndarray:
        return np.unique(np.concatenate([self._breakpoints, self.support]))


class RectDiagram(ContinualDiagram):
    def __init__(self, pair: InterlacingPair):
        self.pair = pair
        self._x = np.sort(pair.minima)
        self._y = np.sort(pair.maxima)
        self._px = np.concatenate([[0.0], np.cumsum(self._x)])
        self._py = np.concatenate([[0.0], np.cumsum(self._y)])
        super().__init__(self._closed_form, pair.center,
                         (self._x[0], self._x[-1]),
                         np.concatenate([self._x, self._y]))

    @staticmethod
    def _abs_sum(t, a, prefix):
        # sum_i |t - a_i| for ascending a, via prefix sums
        k = np.searchsorted(a, t)
        left = k * t - prefix[k]
        right = (prefix[-1] - prefix[k]) - (len(a) - k) * t
        return left + right

    def _closed_form(self, t):
        return self._abs_sum(t, self._x, self._px) - self._abs_sum(t, self._y, self._py)

    def __call__(self, t):
        # the closed form already equals |t - center| outside the support
        out = self._closed_form(np.asarray(t, dtype=float))
        return float(out) if np.ndim(t) == 0 else out


def build_diagram(pair: InterlacingPair) -> RectDiagram:
    return RectDiagram(pair)


def evaluate(diagram: ContinualDiagram, t):
    return diagram(t)


def rescale(diagram: ContinualDiagram, s: float) -> ContinualDiagram:
    """Return ``t -> diagram(s * t) / s``."""
    if not s > 0:
        raise NonpositiveScale(f"scale must be positive, got {s}")
    if isinstance(diagram, RectDiagram):
        return RectDiagram(diagram.pair.scaled(s))
    lo, hi = diagram.support
    return ContinualDiagram(lambda t: diagram(s * t) / s, diagram.center / s,
                            (lo / s, hi / s), diagram.breakpoints() / s)


def sup_distance(d1: ContinualDiagram, d2: ContinualDiagram, grid_step: float = 1e-3) -> float:
    """Max of ``|d1 - d2|`` over breakpoints plus a uniform grid.

    Both functions are 1-Lipschitz, so the true supremum exceeds the returned
    value by at most ``grid_step``. Outside the union of supports the
    difference is monotone, so the window edges capture it.
    """
    if not grid_step > 0:
        raise ValueError("grid_step must be positive")
    lo = min(d1.support[0], d2.support[0]) - grid_step
    hi = max(d1.support[1], d2.support[1]) + grid_step
    n = int(math.ceil((hi - lo) / grid_step))
    pts = np.concatenate([lo + grid_step * np.arange(n + 1), [hi],
                          d1.breakpoints(), d2.breakpoints()])
    return float(np.max(np.abs(d1(pts) - d2(pts))))


def tilde_p(pair: InterlacingPair, k: int) -> float:
    """k-th moment of the atomic measure sum delta(x_i) - sum delta(y_j) - delta(0)."""
    if k < 1:
        raise ValueError("tilde_p is defined for k >= 1")
    return math.fsum(np.concatenate([pair.minima ** k, -(pair.maxima ** k)]))


@dataclass(frozen=True)
class SigmaAtoms:
    positive_atoms: tuple
    negative_atoms: tuple


def sigma_atoms(pair: InterlacingPair) -> SigmaAtoms:
    return SigmaAtoms(tuple(pair.minima.tolist()), tuple(pair.maxima.tolist()) + (0.0,))
