"""Dense symmetric eigenvalues: Householder tridiagonalization + implicit QL.

Only eigenvalues are computed. Off-diagonal ``e_i`` deflates once
``|e_i| <= eps * (|d_i| + |d_{i+1}|)``.
"""
from __future__ import annotations

import math
import sys

import numpy as np

from .diagram import InterlacingPair, validate_interlacing
from .errors import NoConvergence, OrderTooSmall

EPS = sys.float_info.epsilon


def sym_matrix(a) -> np.ndarray:
    """Read-only symmetric copy of ``a``; the upper triangle is mirrored down."""
    a = np.array(a, dtype=float, ndmin=2)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    upper = np.triu(a)
    s = upper + np.triu(a, 1).T
    s.setflags(write=False)
    return s


def principal_submatrix(s: np.ndarray) -> np.ndarray:
    """Drop the last row and column."""
    s = np.asarray(s)
    if s.shape[0] < 2:
        raise OrderTooSmall("principal submatrix needs order >= 2")
    return s[:-1, :-1]


def tridiagonalize(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction; returns the diagonal and the subdiagonal."""
    a = np.array(s, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        tail = x[1:] @ x[1:]
        if tail == 0.0:
            continue
        norm = math.sqrt(x[0] * x[0] + tail)
        alpha = -norm if x[0] >= 0 else norm
        v = x.copy()
        v[0] -= alpha
        v /= math.sqrt(v @ v)
        b = a[k + 1:, k + 1:]
        p = b @ v
        w = 2.0 * (p - (v @ p) * v)
        b -= np.outer(v, w) + np.outer(w, v)
        a[k + 1, k] = alpha
    return np.diag(a).copy(), np.diag(a, -1).copy()


def tridiagonal_eigenvalues(d, e, max_sweeps: int | None = None) -> np.ndarray:
    """Implicitly shifted QL on a symmetric tridiagonal matrix (ascending output)."""
    d = [float(v) for v in d]
    e = [float(v) for v in e] + [0.0]
    n = len(d)
    budget = 50 * n if max_sweeps is None else max_sweeps
    sweeps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= EPS * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > budget:
                raise NoConvergence(l)
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d))


def eigenvalues(s: np.ndarray, max_sweeps: int | None = None) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, sorted descending."""
    s = np.asarray(s, dtype=float)
    if s.shape[0] == 1:
        return s.reshape(1).copy()
    d, e = tridiagonalize(s)
    return tridiagonal_eigenvalues(d, e, max_sweeps)[::-1].copy()


def default_tol(spectrum) -> float:
    radius = float(np.max(np.abs(spectrum))) if len(spectrum) else 0.0
    return 1e-8 * max(1.0, radius)


def interlacing_from_matrix(s: np.ndarray, tol: float | None = None) -> InterlacingPair:
    """Spectra of ``s`` (minima) and of its leading principal submatrix (maxima)."""
    minima = eigenvalues(s)
    maxima = eigenvalues(principal_submatrix(s))
    if tol is None:
        tol = default_tol(minima)
    return validate_interlacing(minima, maxima, tol)
