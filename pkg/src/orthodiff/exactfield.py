"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals.

Every scalar handled by the package is either an ``int``/``Fraction`` or a
``GaussianRational``. Nothing here ever touches a float.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
Scalar = Union[Fraction, "GaussianRational"]


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts.

    Compares equal to a ``Fraction``/``int`` when the imaginary part is zero,
    and hashes consistently with it.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    real = re
    imag = im

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus, always a nonnegative rational."""
        return self._re * self._re + self._im * self._im

    def is_real(self) -> bool:
        return self._im == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self):
        return format_scalar(self)


def binom(n: int, k: int) -> Fraction:
    """C(n, k) as a Fraction; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def gen_binom(top, k: int) -> Fraction:
    """Generalized binomial ``top (top-1) ... (top-k+1) / k!`` for rational ``top``."""
    if k < 0:
        return Fraction(0)
    top = Fraction(top)
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / math.factorial(k)


def is_real(s) -> bool:
    if isinstance(s, GaussianRational):
        return s.is_real()
    return isinstance(s, (int, Fraction))


def to_rational(s) -> Fraction:
    """Return ``s`` as a Fraction, raising ValueError if it has an imaginary part."""
    if isinstance(s, GaussianRational):
        if not s.is_real():
            raise ValueError(f"scalar {s} is not real")
        return s.re
    return Fraction(s)


def as_scalar(value) -> Scalar:
    """Normalize ints, strings and scalars into Fraction or GaussianRational."""
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"not an exact scalar: {value!r}")


_RAT = r"[+-]?\d+(?:/\d+)?"
_GAUSS_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RAT})(?=[+-]|\s*$))?\s*"
    rf"(?:(?P<im>[+-]?(?:\d+(?:/\d+)?)?)\s*\*?\s*i)?\s*$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"``, ``"p"`` or ``"p/q+r/s*i"`` (also ``"-i"``, ``"3/2*i"``)."""
    text = text.strip()
    if "i" not in text:
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"invalid rational literal: {text!r}") from None
    m = _GAUSS_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"invalid Gaussian rational literal: {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_text = m.group("im")
    if im_text in ("", "+"):
        im_part = Fraction(1)
    elif im_text == "-":
        im_part = Fraction(-1)
    else:
        im_part = Fraction(im_text)
    return GaussianRational(re_part, im_part)


def format_scalar(s) -> str:
    """Canonical text form: ``"p/q"``, ``"p"``, or ``"p/q+r/s*i"``.

    Gaussian rationals with zero imaginary part print as plain rationals.
    """
    if isinstance(s, GaussianRational):
        if s.im == 0:
            return str(s.re)
        sign = "-" if s.im < 0 else "+"
        return f"{s.re}{sign}{abs(s.im)}*i"
    return str(Fraction(s))
