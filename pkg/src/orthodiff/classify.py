"""Decide whether a constant-coefficient operator ``phi(D)`` yields an OPS.

``phi(D) x^n`` is an OPS exactly when the scaled Maclaurin coefficients obey

    gamma_n = -b gamma_{n-1} - a (n-1) gamma_{n-2},   n >= 1, gamma_{-1} = 0,

with ``gamma_0 != 0`` and ``a != 0``; then ``phi(x) = gamma_0 exp(-a x^2/2 - b x)``.
All verdicts below only speak for the indices actually checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .diffop import ExpOpParams, GammaSeq, apply_gamma
from .exactfield import as_scalar
from .poly import Poly


class SequenceTooShortError(ValueError):
    pass


@dataclass(frozen=True)
class ExpForm:
    params: ExpOpParams

    verdict = "exp_form"

    def __bool__(self):
        return True

    def to_json(self) -> dict:
        return {"verdict": self.verdict, **self.params.to_json()}


@dataclass(frozen=True)
class NotOps:
    index: int
    reason: str  # "gamma0_zero" | "alpha_zero" | "recursion"

    verdict = "not_ops"

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "index": self.index, "reason": self.reason}


ClassifyResult = Union[ExpForm, NotOps]


@dataclass(frozen=True)
class Check:
    """Boolean outcome plus the first failing index, if any."""

    ok: bool
    index: Optional[int] = None

    def __bool__(self):
        return self.ok


def _gammas(g) -> tuple:
    if isinstance(g, GammaSeq):
        return g.gammas
    return tuple(as_scalar(c) for c in g)


def _recursion_residual(gs, a, b, n):
    prev2 = gs[n - 2] if n >= 2 else 0
    return gs[n] + b * gs[n - 1] + a * (n - 1) * prev2


def recover_ab(g) -> tuple:
    """(a, b) forced by the recursion at n = 1 and n = 2. Needs gamma_0 != 0."""
    gs = _gammas(g)
    if len(gs) < 3:
        raise SequenceTooShortError("need gamma_0, gamma_1, gamma_2")
    g0, g1, g2 = gs[0], gs[1], gs[2]
    if g0 == 0:
        raise ZeroDivisionError("gamma_0 is zero")
    b = -g1 / g0
    a = (-b * g1 - g2) / g0
    return a, b


def classify_gamma(g: GammaSeq | Sequence, N: int | None = None) -> ClassifyResult:
    gs = _gammas(g)
    if N is None:
        N = len(gs) - 1
    if len(gs) < max(4, N + 1):
        raise SequenceTooShortError(
            f"need at least {max(4, N + 1)} coefficients, got {len(gs)}"
        )
    if gs[0] == 0:
        return NotOps(0, "gamma0_zero")
    a, b = recover_ab(gs)
    if a == 0:
        return NotOps(2, "alpha_zero")
    for n in range(1, N + 1):
        if _recursion_residual(gs, a, b, n) != 0:
            return NotOps(n, "recursion")
    return ExpForm(ExpOpParams(gs[0], a, b))


def check_ode_coeffs(g, a, b, N: int, start: int = 2) -> Check:
    """Coefficient form of ``phi'' + (a x + b) phi' + a phi = 0``.

    The ODE itself only pins the recursion for ``n >= 2`` (``start=2``); pass
    ``start=1`` to also demand gamma_1 = -b gamma_0, which is the OPS condition.
    """
    gs = _gammas(g)
    if len(gs) <= N:
        raise SequenceTooShortError(f"need {N + 1} coefficients, got {len(gs)}")
    if start not in (1, 2):
        raise ValueError("start must be 1 or 2")
    a, b = as_scalar(a), as_scalar(b)
    for n in range(start, N + 1):
        if _recursion_residual(gs, a, b, n) != 0:
            return Check(False, n)
    return Check(True)


def verify_ttr_equivalence(g, N: int) -> Check:
    """Check P_n = (x - b) P_{n-1} - a (n-1) P_{n-2} with P_n = phi(D) x^n, 1 <= n <= N.

    a and b are read off gamma_1, gamma_2. Fails at index 0 if gamma_0 = 0 and
    at index 2 if a = 0 (the recurrence would have lam_n = 0).
    """
    gs = _gammas(g)
    if len(gs) <= max(N, 2):
        raise SequenceTooShortError(f"need {max(N, 2) + 1} coefficients, got {len(gs)}")
    if gs[0] == 0:
        return Check(False, 0)
    a, b = recover_ab(gs)
    if a == 0:
        return Check(False, 2)
    x_minus_b = Poly([-b, 1])
    prev, cur = Poly(), apply_gamma(gs, 0)
    for n in range(1, N + 1):
        pn = apply_gamma(gs, n)
        if pn != x_minus_b * cur - prev.scale(a * (n - 1)):
            return Check(False, n)
        prev, cur = cur, pn
    return Check(True)


def result_from_json(obj: dict) -> ClassifyResult:
    if obj["verdict"] == "exp_form":
        return ExpForm(ExpOpParams(obj["gamma0"], obj["alpha"], obj["beta"]))
    return NotOps(int(obj["index"]), obj["reason"])
