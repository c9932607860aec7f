"""Exact real-root counting, isolation and interlacing via Sturm chains.

Chains are built on integer coefficient lists with signed pseudo-remainders
and content removal, so coefficient growth stays polynomial. Counting uses
the half-open convention: ``V(a) - V(b)`` is the number of distinct roots in
``(a, b]``, which holds even when ``a`` or ``b`` is itself a root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .diffop import DiffOp, ExpOpParams, apply, exp_gamma
from .exactfield import format_scalar, is_real, to_rational
from .poly import Poly, poly_gcd


class NotRealRootedError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class RootReport:
    degree: int
    distinct_real_roots: int
    all_roots_real: bool
    isolating_intervals: List[Interval] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "distinct_real_roots": self.distinct_real_roots,
            "all_roots_real": self.all_roots_real,
            "isolating_intervals": [
                [format_scalar(lo), format_scalar(hi)] for lo, hi in self.isolating_intervals
            ],
        }


def _real_poly(p: Poly) -> Poly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if not p.is_real():
        raise ValueError("polynomial has non-real coefficients")
    return Poly(to_rational(c) for c in p.coeffs)


def squarefree(p: Poly) -> Poly:
    """p / gcd(p, p'), normalized to be monic."""
    p = _real_poly(p)
    if p.degree <= 0:
        return p.monic()
    g = poly_gcd(p, p.derivative())
    q, r = divmod(p, g)
    assert r.is_zero()
    return q.monic()


def _primitive(coeffs: Sequence[Fraction]) -> list[int]:
    """Integer multiple of ``coeffs`` by a positive factor, content removed."""
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    while ints and ints[-1] == 0:
        ints.pop()
    return ints


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over the integers."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = len(a) - len(b) + 1
    for _ in range(steps):
        if len(r) - 1 < db:
            r = [v * lb for v in r]
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [v * lb for v in r]
        for j, bj in enumerate(b):
            r[shift + j] -= lr * bj
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def sturm_chain(p: Poly) -> list[list[int]]:
    """Sturm chain of a real polynomial as integer coefficient lists (low to high)."""
    p = _real_poly(p)
    chain = [_primitive(p.coeffs)]
    if p.degree == 0:
        return chain
    chain.append(_primitive(p.derivative().coeffs))
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        r = _prem(a, b)
        if not r:
            break
        # -rem(a, b) has the sign of -prem(a, b) / lc(b)^(deg a - deg b + 1)
        delta = len(a) - len(b) + 1
        if b[-1] > 0 or delta % 2 == 0:
            r = [-v for v in r]
        chain.append(_primitive(r))
    return chain


def _sign_at(coeffs: list[int], x: Fraction) -> int:
    """Sign of p(x), via the integer den^d * p(num/den)."""
    num, den = x.numerator, x.denominator
    acc = coeffs[-1]
    power = 1
    for i in range(len(coeffs) - 2, -1, -1):
        power *= den
        acc = acc * num + coeffs[i] * power
    return (acc > 0) - (acc < 0)


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def _v_at(chain, x: Fraction) -> int:
    return _variations(_sign_at(c, x) for c in chain)


def _v_inf(chain, positive: bool) -> int:
    signs = []
    for c in chain:
        s = 1 if c[-1] > 0 else -1
        if not positive and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def cauchy_bound(p: Poly) -> Fraction:
    """Power of two strictly exceeding every root modulus."""
    p = _real_poly(p)
    lc = abs(p.lc)
    bound = 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def _isolate(chain, lo: Fraction, hi: Fraction, count: int, out: list) -> None:
    if count == 0:
        return
    if count == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    vmid = _v_at(chain, mid)
    left = _v_at(chain, lo) - vmid
    _isolate(chain, lo, mid, left, out)
    _isolate(chain, mid, hi, count - left, out)


def count_real_roots(p: Poly) -> RootReport:
    """Distinct real roots of p, with isolating intervals (lo, hi] at dyadic endpoints."""
    p = _real_poly(p)
    if p.degree == 0:
        return RootReport(0, 0, True, [])
    sf = squarefree(p)
    chain = sturm_chain(sf)
    n = _v_inf(chain, positive=False) - _v_inf(chain, positive=True)
    b = cauchy_bound(sf)
    intervals: list[Interval] = []
    _isolate(chain, -b, b, n, intervals)
    return RootReport(p.degree, n, n == sf.degree, intervals)


def _refine(chain, iv: Interval) -> Interval:
    lo, hi = iv
    mid = (lo + hi) / 2
    if _v_at(chain, lo) - _v_at(chain, mid) == 1:
        return (lo, mid)
    return (mid, hi)


def _overlap(a: Interval, b: Interval) -> bool:
    # half-open (lo, hi]
    return a[0] < b[1] and b[0] < a[1]


def interlace(p: Poly, q: Poly) -> bool:
    """Strict interlacing: each gap between consecutive roots of p holds exactly one root of q.

    Requires deg p = deg q + 1 and both polynomials real-rooted with simple roots.
    A shared root returns False.
    """
    p, q = _real_poly(p), _real_poly(q)
    if p.degree != q.degree + 1:
        raise PreconditionError("interlace needs deg p = deg q + 1")
    intervals = []
    for name, poly in (("p", p), ("q", q)):
        rep = count_real_roots(poly)
        if not rep.all_roots_real:
            raise NotRealRootedError(f"{name} is not real-rooted")
        if rep.distinct_real_roots != poly.degree:
            raise PreconditionError(f"{name} has repeated roots")
        intervals.append(list(rep.isolating_intervals))
    if poly_gcd(p, q).degree > 0:
        return False
    cp, cq = sturm_chain(p), sturm_chain(q)
    ip, iq = intervals
    # no common roots, so refinement terminates
    changed = True
    while changed:
        changed = False
        for i in range(len(ip)):
            for j in range(len(iq)):
                if _overlap(ip[i], iq[j]):
                    ip[i] = _refine(cp, ip[i])
                    iq[j] = _refine(cq, iq[j])
                    changed = True
    tagged = sorted([(iv[0], "p") for iv in ip] + [(iv[0], "q") for iv in iq])
    pattern = "".join(t for _, t in tagged)
    return pattern == "p" + "qp" * q.degree


def is_real_rooted(p: Poly) -> bool:
    return count_real_roots(p).all_roots_real


def preservation_test(params: ExpOpParams, f: Poly) -> bool:
    """Apply gamma0 exp(-alpha D^2/2 - beta D) to a real-rooted f; True iff the image is real-rooted."""
    for name in ("gamma0", "alpha", "beta"):
        if not is_real(getattr(params, name)):
            raise PreconditionError(f"{name} must be real")
    if to_rational(params.alpha) <= 0:
        raise PreconditionError("alpha must be positive")
    if params.gamma0 == 0:
        raise PreconditionError("gamma0 must be nonzero")
    if not is_real_rooted(f):
        raise NotRealRootedError("input polynomial is not real-rooted")
    op = DiffOp.from_gammas(exp_gamma(params, max(f.degree, 0)))
    image = apply(op, f)
    return is_real_rooted(image)
