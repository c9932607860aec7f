"""Three-term recurrence engines and named orthogonal polynomial families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactfield import GaussianRational, as_scalar, format_scalar, gen_binom, is_real
from .poly import Poly


class InvalidSpecError(ValueError):
    """A recurrence table is missing an entry or has a forbidden zero."""


def _table(values) -> tuple:
    return tuple(None if v is None else as_scalar(v) for v in values)


@dataclass(frozen=True)
class TTRSpec:
    """Finite three-term recurrence data.

    All tables are indexed directly by n; entries that the recurrence never
    reads are ignored and may be ``None``.

    monic:   P_n = (x - c[n]) P_{n-1} - lam[n] P_{n-2},        n >= 1
             (c read from index 1, lam from index 2; lam[1] multiplies P_{-1} = 0)
    general: P_{n+1} = (A[n] x + B[n]) P_n - C[n] P_{n-1},     n >= 0
             (C[0] multiplies P_{-1} = 0 and is never read)
    """

    kind: str = "monic"
    c: tuple = ()
    lam: tuple = ()
    A: tuple = ()
    B: tuple = ()
    C: tuple = ()
    p0: object = Fraction(1)

    def __post_init__(self):
        if self.kind not in ("monic", "general"):
            raise InvalidSpecError(f"unknown recurrence kind {self.kind!r}")
        for name in ("c", "lam", "A", "B", "C"):
            object.__setattr__(self, name, _table(getattr(self, name)))
        object.__setattr__(self, "p0", as_scalar(self.p0))

    @classmethod
    def monic(cls, c: Sequence, lam: Sequence, p0=1) -> TTRSpec:
        return cls(kind="monic", c=tuple(c), lam=tuple(lam), p0=p0)

    @classmethod
    def general(cls, A: Sequence, B: Sequence, C: Sequence, p0=1) -> TTRSpec:
        return cls(kind="general", A=tuple(A), B=tuple(B), C=tuple(C), p0=p0)

    @classmethod
    def from_functions(cls, c, lam, N: int, p0=1) -> TTRSpec:
        """Materialize a monic spec from callables ``c(n)``, ``lam(n)`` up to N."""
        cs = [None] + [c(n) for n in range(1, N + 1)]
        lams = [None, None] + [lam(n) for n in range(2, N + 1)]
        return cls.monic(cs, lams, p0)

    def to_json(self) -> dict:
        def enc(t):
            return [None if v is None else format_scalar(v) for v in t]

        out = {"kind": self.kind, "p0": format_scalar(self.p0)}
        if self.kind == "monic":
            out.update(c=enc(self.c), lam=enc(self.lam))
        else:
            out.update(A=enc(self.A), B=enc(self.B), C=enc(self.C))
        return out

    @classmethod
    def from_json(cls, obj: dict) -> TTRSpec:
        kind = obj.get("kind", "monic")
        p0 = obj.get("p0", "1")
        if kind == "monic":
            return cls.monic(obj.get("c", []), obj.get("lam", []), p0)
        return cls.general(obj.get("A", []), obj.get("B", []), obj.get("C", []), p0)


def _entry(table: tuple, name: str, n: int):
    if n >= len(table) or table[n] is None:
        raise InvalidSpecError(f"missing table entry {name}[{n}]")
    return table[n]


def ttr_generate(spec: TTRSpec, N: int) -> list[Poly]:
    """Return P_0 .. P_N generated by the recurrence in ``spec``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if spec.p0 == 0:
        raise InvalidSpecError("p0 must be nonzero")
    x = Poly.x()
    prev, cur = Poly(), Poly.constant(spec.p0)
    out = [cur]
    if spec.kind == "monic":
        for n in range(1, N + 1):
            cn = _entry(spec.c, "c", n)
            nxt = (x - cn) * cur
            if n >= 2:
                lam = _entry(spec.lam, "lam", n)
                if lam == 0:
                    raise InvalidSpecError(f"lam[{n}] is zero")
                nxt = nxt - prev.scale(lam)
            prev, cur = cur, nxt
            out.append(cur)
    else:
        for n in range(N):
            a = _entry(spec.A, "A", n)
            if a == 0:
                raise InvalidSpecError(f"A[{n}] is zero")
            b = _entry(spec.B, "B", n)
            nxt = (x.scale(a) + b) * cur
            if n >= 1:
                c = _entry(spec.C, "C", n)
                if c == 0:
                    raise InvalidSpecError(f"C[{n}] is zero")
                nxt = nxt - prev.scale(c)
            prev, cur = cur, nxt
            out.append(cur)
    return out


def hermite_std(n: int) -> Poly:
    """Physicists' Hermite polynomial: H_{k+1} = 2x H_k - 2k H_{k-1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    two_x = Poly([0, 2])
    prev, cur = Poly(), Poly([1])
    for k in range(n):
        prev, cur = cur, two_x * cur - prev.scale(2 * k)
    return cur


def hermite_gen(alpha, n: int) -> Poly:
    """Generalized Hermite H_n^alpha: H_n = x H_{n-1} - alpha (n-1) H_{n-2}.

    ``alpha = 0`` is allowed here and gives x^n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = as_scalar(alpha)
    x = Poly.x()
    prev, cur = Poly(), Poly([1])
    for k in range(1, n + 1):
        prev, cur = cur, x * cur - prev.scale(alpha * (k - 1))
    return cur


def laguerre(alpha, n: int) -> Poly:
    """L_n^alpha(x) = sum_r (-1)^r / r! * C(n + alpha, n - r) x^r."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha = Fraction(alpha)
    coeffs = []
    r_fact = 1
    for r in range(n + 1):
        if r:
            r_fact *= r
        coeffs.append(Fraction((-1) ** r, r_fact) * gen_binom(n + alpha, n - r))
    return Poly(coeffs)


def shift_system(ps: Sequence[Poly], s) -> list[Poly]:
    """R_n(x) = Q_n(x + s) for every member.

    A monic system with recurrence data (c_n, lam_n) maps to one with
    (c_n - s, lam_n).
    """
    return [p.taylor_shift(s) for p in ps]


@dataclass(frozen=True)
class PDCheck:
    ok: bool
    index: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def pd_check(spec: TTRSpec, N: int) -> PDCheck:
    """Favard positivity test on n <= N: every c_n real and every lam_n > 0.

    A pass means "positive-definite up to N" only. Non-real coefficients are
    reported as a violation at their index rather than raised.
    """
    if spec.kind != "monic":
        raise InvalidSpecError("pd_check requires a monic recurrence")
    for n in range(1, N + 1):
        cn = _entry(spec.c, "c", n)
        if not is_real(cn):
            return PDCheck(False, n, "c_n not real")
        if n >= 2:
            lam = _entry(spec.lam, "lam", n)
            if not is_real(lam):
                return PDCheck(False, n, "lam_n not real")
            lam_r = lam.re if isinstance(lam, GaussianRational) else lam
            if lam_r <= 0:
                return PDCheck(False, n, "lam_n not positive")
    return PDCheck(True)


def hermite_spec(alpha, N: int, beta=0) -> TTRSpec:
    """Monic recurrence data (c_n = beta, lam_n = alpha (n-1)) of H_n^alpha(x - beta)."""
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    return TTRSpec.from_functions(lambda n: beta, lambda n: alpha * (n - 1), N)
