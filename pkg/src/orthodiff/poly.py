"""Dense univariate polynomials with exact coefficients."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .exactfield import GaussianRational, as_scalar, format_scalar


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> Poly:
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> Poly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_scalar(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(not isinstance(c, GaussianRational) or c.is_real() for c in self.coeffs)

    # ring operations

    @staticmethod
    def _lift(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, s) -> Poly:
        s = as_scalar(s)
        return Poly(c * s for c in self.coeffs)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: Poly):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lc
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lc
            quot[i] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * b
        return Poly(quot), Poly(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # calculus / evaluation

    def __call__(self, x0):
        """Horner evaluation at an exact scalar."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    evaluate = __call__

    def derivative(self, k: int = 1) -> Poly:
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        if k > self.degree:
            return Poly()
        # falling factorial i (i-1) ... (i-k+1) = i! / (i-k)!
        return Poly(
            self.coeffs[i] * (math.factorial(i) // math.factorial(i - k))
            for i in range(k, len(self.coeffs))
        )

    def taylor_shift(self, s) -> Poly:
        """Return q with q(x) = p(x + s), by repeated synthetic division."""
        s = as_scalar(s)
        a = list(self.coeffs)
        n = len(a)
        if s == 0 or n <= 1:
            return self
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                a[j] = a[j] + s * a[j + 1]
        return Poly(a)

    def substitute_scaled(self, c) -> Poly:
        """Return q with q(x) = p(c*x)."""
        c = as_scalar(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lc) if self.lc != 1 else self

    # text / JSON

    def to_json(self) -> dict:
        return {"coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> Poly:
        if isinstance(obj, dict):
            obj = obj["coeffs"]
        return cls(as_scalar(c) for c in obj)

    def __repr__(self):
        return f"Poly([{', '.join(format_scalar(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            text = format_scalar(c)
            if isinstance(c, GaussianRational) and not c.is_real():
                text = f"({text})"
            if mono and text in ("1", "-1"):
                text = text[:-1]
            elif mono:
                text += "*"
            terms.append(text + mono)
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
