"""Seeded Wigner and Wishart samplers.

Every draw comes from a Philox-4x64-10 counter-based stream keyed by
``(seed, stream)``; Gaussians use the Box-Muller transform on pairs of
uniform doubles, so the output depends only on the key.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .linalg import sym_matrix

RNG_ALGORITHM = "philox4x64-10/box-muller"


class EntryDist(str, enum.Enum):
    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"
    UNIFORM_SCALED = "uniform"

    @property
    def fourth_moment(self) -> float:
        return {"gaussian": 3.0, "rademacher": 1.0, "uniform": 1.8}[self.value]


@dataclass(frozen=True)
class RngSpec:
    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed, self.stream], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


def draw(dist: EntryDist | str, count: int, rng: RngSpec) -> np.ndarray:
    """``count`` i.i.d. mean-zero unit-variance draws."""
    dist = EntryDist(dist)
    gen = rng.generator()
    if dist is EntryDist.GAUSSIAN:
        half = (count + 1) // 2
        u1 = gen.random(half)
        u2 = gen.random(half)
        radius = np.sqrt(-2.0 * np.log1p(-u1))  # 1 - u1 lies in (0, 1]
        z = np.empty(2 * half)
        z[0::2] = radius * np.cos(2.0 * np.pi * u2)
        z[1::2] = radius * np.sin(2.0 * np.pi * u2)
        return z[:count]
    u = gen.random(count)
    if dist is EntryDist.RADEMACHER:
        return np.where(u < 0.5, -1.0, 1.0)
    return math.sqrt(3.0) * (2.0 * u - 1.0)


def sample_wigner(n: int, dist: EntryDist | str, rng: RngSpec) -> np.ndarray:
    """Symmetric matrix with i.i.d. entries on and above the diagonal."""
    if n < 1:
        raise ValueError("n must be positive")
    iu = np.triu_indices(n)
    upper = np.zeros((n, n))
    upper[iu] = draw(dist, len(iu[0]), rng)
    return sym_matrix(upper)


def m_of_n(n: int, alpha: float) -> int:
    """``round(alpha * n)`` with halves rounded up."""
    return int(math.floor(alpha * n + 0.5))


def sample_wishart(n: int, alpha: float, dist: EntryDist | str, rng: RngSpec) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be positive")
    if not alpha >= 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    m = m_of_n(n, alpha)
    w = draw(dist, n * m, rng).reshape(n, m)
    return sym_matrix(w @ w.T)
