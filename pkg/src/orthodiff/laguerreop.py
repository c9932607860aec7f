"""Closed-form differential operator carrying x^n to the Laguerre polynomial L_n.

With ``a_r = (-1)^r sum_{l<=r} C(r, l) / l!`` the operator is

    T = sum_k p_k(x) D^k / k!,   p_n(x) = sum_{r<=n} C(n, r) a_r x^r,

and ``T[x^n] = L_n(x)``. The ``a_r`` also solve
``a_r = (-1)^r / r! - sum_{k<r} C(r, k) a_k`` with ``a_0 = 1``; both routes are
kept separate so each can check the other.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .diffop import DiffOp, apply
from .exactfield import binom
from .opsfam import laguerre
from .poly import Poly
from .classify import Check


def a_closed(r: int) -> Fraction:
    if r < 0:
        raise ValueError("r must be nonnegative")
    total = sum((binom(r, l) / math.factorial(l) for l in range(r + 1)), Fraction(0))
    return total if r % 2 == 0 else -total


@lru_cache(maxsize=None)
def _a_recursive_table(r: int) -> tuple:
    a = [Fraction(1)]
    for m in range(1, r + 1):
        s = sum((binom(m, k) * a[k] for k in range(m)), Fraction(0))
        a.append(Fraction((-1) ** m, math.factorial(m)) - s)
    return tuple(a)


def a_recursive(r: int) -> Fraction:
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _a_recursive_table(r)[r]


def a_table(R: int) -> list[Fraction]:
    """a_0 .. a_R from the closed form."""
    return [a_closed(r) for r in range(R + 1)]


def build_p(n: int) -> Poly:
    """p_n(x) = sum_r C(n, r) a_r x^r, using the closed form for a_r."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly(binom(n, r) * a_closed(r) for r in range(n + 1))


def laguerre_operator(N: int) -> DiffOp:
    return DiffOp([build_p(n) for n in range(N + 1)])


def identity_double_sum(r: int) -> Fraction:
    """sum_{k<=r} sum_{l<=k} C(r,k) C(k,l) (-1)^k / l!, summed term by term."""
    total = Fraction(0)
    for k in range(r + 1):
        sign = -1 if k % 2 else 1
        for l in range(k + 1):
            total += Fraction(sign * math.comb(r, k) * math.comb(k, l), math.factorial(l))
    return total


def identity_check(r: int) -> bool:
    return identity_double_sum(r) == Fraction((-1) ** r, math.factorial(r))


def verify_theorem(N: int) -> Check:
    """apply(p_0..p_N, x^n) == L_n for all n <= N; reports the first mismatch."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    op = laguerre_operator(N)
    for n in range(N + 1):
        if apply(op, Poly.monomial(n)) != laguerre(0, n):
            return Check(False, n)
    return Check(True)


def binomial_swap_counterexample(max_r: int = 12, form: str = "alternate") -> Optional[tuple]:
    """First (r, k, l) with 0 <= l <= k <= r <= max_r where C(r,k) C(k,l) differs
    from the right-hand side, or None if the identity holds throughout.

    form="standard":  C(r,l) C(r-l, k-l)  (trinomial revision)
    form="alternate": C(r,l) C(r-k, k-1)
    """
    for r in range(max_r + 1):
        for k in range(r + 1):
            for l in range(k + 1):
                lhs = math.comb(r, k) * math.comb(k, l)
                if form == "standard":
                    rhs = binom(r, l) * binom(r - l, k - l)
                elif form == "alternate":
                    rhs = binom(r, l) * binom(r - k, k - 1)
                else:
                    raise ValueError(f"unknown form {form!r}")
                if lhs != rhs:
                    return (r, k, l)
    return None
