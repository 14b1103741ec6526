"""Exact polynomials in ``alpha`` and in ``(alpha, beta)`` with rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _frac(c) -> Fraction | int:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class Poly:
    """Univariate polynomial in alpha; ``coeffs[i]`` multiplies ``alpha**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def alpha(cls) -> "Poly":
        return cls([0, 1])

    @staticmethod
    def _lift(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, Rational):
            return Poly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if not isinstance(k, Rational):
            return NotImplemented
        return Poly(Fraction(c) / k for c in self.coeffs)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, alpha):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * alpha + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            coef = "" if (mag == 1 and i > 0) else str(mag)
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            body = f"{coef}*{mono}" if coef and mono else coef + mono
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class BiPoly:
    """Polynomial in (alpha, beta); keys are ``(alpha_power, beta_power)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: _frac(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def monomial(cls, c, alpha_power=0, beta_power=0) -> "BiPoly":
        return cls({(alpha_power, beta_power): c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __mul__(self, other):
        out = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + v1 * v2
        return BiPoly(out)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def d_beta(self) -> "BiPoly":
        return BiPoly({(a, b - 1): v * b for (a, b), v in self.terms.items() if b})

    def at_beta(self, beta) -> Poly:
        """Substitute a rational ``beta`` and return the polynomial in alpha."""
        n = 1 + max((a for a, _ in self.terms), default=-1)
        coeffs = [0] * n
        for (a, b), v in self.terms.items():
            coeffs[a] += v * Fraction(beta) ** b
        return Poly(coeffs)

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))!r})"
