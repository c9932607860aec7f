"""Linear polynomial transforms written as differential operators.

A transform ``T`` acting on polynomials is stored as the finite list
``p_0, p_1, ..., p_K`` of polynomial coefficients in

    T[f] = sum_k p_k(x) * f^(k)(x) / k!

Constant-coefficient operators ``phi(D) = sum_k gamma_k D^k / k!`` are the
special case where every ``p_k`` is the constant ``gamma_k``; those are kept
as a plain ``GammaSeq`` of scalars.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactfield import as_scalar, binom, format_scalar
from .poly import Poly


@dataclass(frozen=True)
class DiffOp:
    pk: tuple

    def __init__(self, pk: Sequence):
        object.__setattr__(self, "pk", tuple(p if isinstance(p, Poly) else Poly(p) for p in pk))

    @classmethod
    def from_gammas(cls, gammas: GammaSeq | Sequence) -> DiffOp:
        if isinstance(gammas, GammaSeq):
            gammas = gammas.gammas
        return cls([Poly.constant(g) for g in gammas])

    def __len__(self):
        return len(self.pk)

    def __getitem__(self, k: int) -> Poly:
        return self.pk[k]

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)

    def to_json(self) -> dict:
        return {"pk": [p.to_json() for p in self.pk]}

    @classmethod
    def from_json(cls, obj: dict) -> DiffOp:
        return cls(Poly.from_json(p) for p in obj["pk"])


@dataclass(frozen=True)
class GammaSeq:
    """gamma_0 .. gamma_N of ``phi(x) = sum gamma_k x^k / k!``."""

    gammas: tuple

    def __init__(self, gammas: Sequence):
        object.__setattr__(self, "gammas", tuple(as_scalar(g) for g in gammas))

    def __len__(self):
        return len(self.gammas)

    def __getitem__(self, k):
        return self.gammas[k]

    def __iter__(self):
        return iter(self.gammas)

    def to_json(self) -> dict:
        return {"gammas": [format_scalar(g) for g in self.gammas]}

    @classmethod
    def from_json(cls, obj) -> GammaSeq:
        if isinstance(obj, dict):
            obj = obj["gammas"]
        return cls(obj)


@dataclass(frozen=True)
class ExpOpParams:
    """Parameters of ``gamma0 * exp(-alpha/2 x^2 - beta x)``."""

    gamma0: object
    alpha: object
    beta: object

    def __post_init__(self):
        for name in ("gamma0", "alpha", "beta"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def to_json(self) -> dict:
        return {
            "gamma0": format_scalar(self.gamma0),
            "alpha": format_scalar(self.alpha),
            "beta": format_scalar(self.beta),
        }


def apply(op: DiffOp, f: Poly) -> Poly:
    """Apply ``op`` to ``f``.

    Terms beyond ``len(op)`` are treated as zero, so a truncated operator is
    exact on every polynomial of degree below its length.
    """
    out = Poly()
    for k in range(min(f.degree + 1, len(op.pk))):
        pk = op.pk[k]
        if pk.is_zero():
            continue
        # f^(k)/k! has coefficients C(i, k) a_i at x^(i-k)
        dk = Poly(binom(i, k) * f.coeffs[i] for i in range(k, f.degree + 1))
        out = out + pk * dk
    return out


def apply_gamma(g: GammaSeq | Sequence, n: int) -> Poly:
    """``phi(D) x^n = sum_{k=0}^n gamma_{n-k} C(n, k) x^k``."""
    gammas = g.gammas if isinstance(g, GammaSeq) else tuple(as_scalar(c) for c in g)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if len(gammas) <= n:
        raise ValueError(f"gamma sequence of length {len(gammas)} too short for degree {n}")
    return Poly(gammas[n - k] * binom(n, k) for k in range(n + 1))


def extract(images: Sequence[Poly], N: int | None = None) -> DiffOp:
    """Recover ``p_0 .. p_N`` from the images ``T[x^n]``, ``0 <= n <= N``.

    Uses ``p_n = T[x^n] - sum_{k<n} p_k D^k x^n / k!``; the representation is
    unique, so the result is determined by the supplied images alone.
    """
    if N is None:
        N = len(images) - 1
    if len(images) <= N:
        raise ValueError(f"need images of x^0..x^{N}, got {len(images)}")
    pk: list[Poly] = []
    for n in range(N + 1):
        acc = images[n]
        for k, p in enumerate(pk):
            acc = acc - p * Poly.monomial(n - k, binom(n, k))
        pk.append(acc)
    return DiffOp(pk)


def exp_gamma(params: ExpOpParams, N: int) -> GammaSeq:
    """Scaled Maclaurin coefficients of ``gamma0 * exp(-alpha x^2/2 - beta x)``.

    gamma_1 = -beta * gamma0 and gamma_n = -beta gamma_{n-1} - alpha (n-1) gamma_{n-2}.
    Returns gamma_0 .. gamma_N.
    """
    if params.alpha == 0:
        raise ValueError("alpha must be nonzero")
    if params.gamma0 == 0:
        raise ValueError("gamma0 must be nonzero")
    if N < 0:
        raise ValueError("N must be nonnegative")
    a, b = params.alpha, params.beta
    gs = [params.gamma0]
    if N >= 1:
        gs.append(-b * params.gamma0)
    for n in range(2, N + 1):
        gs.append(-b * gs[n - 1] - a * (n - 1) * gs[n - 2])
    return GammaSeq(gs)
