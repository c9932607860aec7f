"""Seeded verification suites run by ``orthodiff verify``.

Each check returns a ``CheckResult``; a suite is a list of them. Random inputs
come from a ``random.Random(seed)`` so a given seed reproduces the report
byte for byte.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .classify import (
    ExpForm,
    NotOps,
    check_ode_coeffs,
    classify_gamma,
    verify_ttr_equivalence,
)
from .diffop import ExpOpParams, apply, apply_gamma, exp_gamma, extract
from .exactfield import GaussianRational
from .laguerreop import (
    a_closed,
    a_recursive,
    build_p,
    identity_check,
    verify_theorem,
)
from .opsfam import hermite_gen, hermite_spec, hermite_std, laguerre, pd_check
from .poly import Poly
from .rootcheck import count_real_roots, interlace, preservation_test

SUITES = ("all", "main-theorem", "laguerre", "roots", "operator")


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        detail = f" ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}  [{self.anchor}]{detail}"

    def to_json(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "ok": self.ok, "detail": self.detail}


# random inputs


def random_rational(rng: random.Random, span: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if q or not nonzero:
            return q


def random_gaussian(rng: random.Random, span: int = 9, nonzero: bool = False) -> GaussianRational:
    while True:
        z = GaussianRational(random_rational(rng, span), random_rational(rng, span))
        if z or not nonzero:
            return z


def random_exp_params(rng: random.Random, complex_: bool = False) -> ExpOpParams:
    draw = random_gaussian if complex_ else random_rational
    return ExpOpParams(draw(rng, nonzero=True), draw(rng, nonzero=True), draw(rng))


def random_real_rooted(rng: random.Random, max_deg: int = 10, span: int = 9) -> tuple[Poly, list]:
    """Product of (x - r_i) for random rationals r_i, times a nonzero rational."""
    deg = rng.randint(0, max_deg)
    roots = [random_rational(rng, span) for _ in range(deg)]
    return Poly.from_roots(roots, lead=random_rational(rng, span, nonzero=True)), roots


def random_poly(rng: random.Random, deg: int, span: int = 9, exact_degree: bool = False) -> Poly:
    cs = [random_rational(rng, span) for _ in range(deg + 1)]
    if exact_degree and deg >= 0:
        cs[-1] = random_rational(rng, span, nonzero=True)
    return Poly(cs)


# independent oracles


def exp_series_oracle(params: ExpOpParams, N: int) -> list:
    """gamma_k for gamma0 exp(-alpha x^2/2) exp(-beta x) by multiplying the two
    Maclaurin series term by term and rescaling by k!."""
    gauss = [Fraction(0)] * (N + 1)
    for j in range(N // 2 + 1):
        gauss[2 * j] = (-params.alpha / 2) ** j / math.factorial(j)
    shift = [(-params.beta) ** j / math.factorial(j) for j in range(N + 1)]
    out = []
    for k in range(N + 1):
        ck = sum((gauss[i] * shift[k - i] for i in range(k + 1)), Fraction(0))
        out.append(params.gamma0 * ck * math.factorial(k))
    return out


def recursion_fails_at(gs, a, b, n) -> bool:
    prev2 = gs[n - 2] if n >= 2 else 0
    return gs[n] != -b * gs[n - 1] - a * (n - 1) * prev2


# suites


def _result(name, anchor, ok, detail="") -> CheckResult:
    return CheckResult(name, anchor, bool(ok), detail)


def laguerre_suite(N: int, seed: int = 0) -> list[CheckResult]:
    out = []
    chk = verify_theorem(N)
    out.append(_result(
        "laguerre-operator", "Laguerre operator theorem", chk,
        f"n<={N}" if chk else f"first mismatch n={chk.index}",
    ))
    bad = [r for r in range(N + 1) if a_closed(r) != a_recursive(r)]
    out.append(_result(
        "a-closed-vs-recursive", "a_r closed form solves its recursion", not bad,
        f"r<={N}" if not bad else f"first mismatch r={bad[0]}",
    ))
    spots = (a_closed(1), a_closed(2), a_closed(3)) == (-2, Fraction(7, 2), Fraction(-17, 3))
    out.append(_result("a-spot-values", "q_{n,1} = -2 C(n,1)", spots, "a_1=-2, a_2=7/2, a_3=-17/3"))
    bad = [r for r in range(N + 1) if not identity_check(r)]
    out.append(_result(
        "double-sum-identity", "double-sum identity for (-1)^r/r!", not bad,
        f"r<={N}" if not bad else f"first failure r={bad[0]}",
    ))
    ext = extract([laguerre(0, n) for n in range(N + 1)], N)
    bad = [n for n in range(N + 1) if ext[n] != build_p(n)]
    out.append(_result(
        "closed-vs-extracted", "differential operator representation", not bad,
        f"n<={N}" if not bad else f"first mismatch n={bad[0]}",
    ))
    ok = all(
        ext[n].coeff(r) == math.comb(n, r) * ext[r].coeff(r)
        for n in range(N + 1)
        for r in range(n + 1)
    )
    out.append(_result("q-independent-of-n", "q_{n,r} = C(n,r) a_r", ok, f"n<={N}"))
    return out


def main_theorem_suite(N: int, seed: int = 0, trials: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    N = max(N, 3)

    failures = 0
    for t in range(trials):
        params = random_exp_params(rng, complex_=(t % 2 == 1))
        g = exp_gamma(params, N)
        res = classify_gamma(g, N)
        if not (isinstance(res, ExpForm) and res.params == params and verify_ttr_equivalence(g, N)):
            failures += 1
    out.append(_result(
        "classify-soundness", "exp-form classification", failures == 0,
        f"{trials} random (gamma0, alpha, beta), N={N}, failures={failures}",
    ))

    res = classify_gamma([math.factorial(k) for k in range(N + 1)], N)
    ok = isinstance(res, NotOps) and res.index == 3 and res.reason == "recursion"
    out.append(_result("factorial-refuted", "exp-form classification", ok, f"got {res.to_json()}"))

    failures = 0
    for _ in range(trials // 4):
        params = random_exp_params(rng, complex_=rng.random() < 0.5)
        gs = list(exp_gamma(params, N))
        j = rng.randint(3, N)
        gs[j] = gs[j] + 1
        res = classify_gamma(gs, N)
        ttr = verify_ttr_equivalence(gs, N)
        if not (isinstance(res, NotOps) and res.index == j and not ttr and ttr.index == j):
            failures += 1
    out.append(_result(
        "corruption-refuted", "exp-form classification", failures == 0,
        f"{trials // 4} single-coefficient corruptions, failures={failures}",
    ))

    failures = 0
    for _ in range(trials // 4):
        gs = [random_rational(rng, nonzero=True) for _ in range(N + 1)]
        res = classify_gamma(gs, N)
        verdicts = {bool(res), bool(verify_ttr_equivalence(gs, N))}
        if not isinstance(res, NotOps):
            failures += 1
            continue
        if res.reason == "recursion":
            a = (gs[1] * gs[1] / gs[0] - gs[2]) / gs[0]
            b = -gs[1] / gs[0]
            verdicts.add(bool(check_ode_coeffs(gs, a, b, N, start=1)))
            if not recursion_fails_at(gs, a, b, res.index):
                failures += 1
        if len(verdicts) != 1:
            failures += 1
    out.append(_result(
        "random-sequences-refuted", "equivalent OPS conditions", failures == 0,
        f"{trials // 4} random sequences, failures={failures}",
    ))

    failures = 0
    for _ in range(trials // 4):
        params = random_exp_params(rng, complex_=rng.random() < 0.5)
        if exp_series_oracle(params, N) != list(exp_gamma(params, N)):
            failures += 1
    out.append(_result(
        "exp-gamma-series", "gamma_n = -beta gamma_{n-1} - alpha (n-1) gamma_{n-2}", failures == 0,
        f"series oracle, failures={failures}",
    ))

    failures = 0
    M = min(N, 20)
    for _ in range(50):
        params = ExpOpParams(random_rational(rng, nonzero=True), random_rational(rng, nonzero=True),
                             random_rational(rng))
        g = exp_gamma(params, M)
        for n in range(M + 1):
            if apply_gamma(g, n) != hermite_gen(params.alpha, n).taylor_shift(-params.beta).scale(params.gamma0):
                failures += 1
                break
    out.append(_result(
        "shifted-hermite", "shifted Hermite identity", failures == 0,
        f"50 random real (alpha, beta), n<={M}, failures={failures}",
    ))

    M = min(N, 15)
    ok = all(
        hermite_gen(2, n) == hermite_std(n).substitute_scaled(Fraction(1, 2))
        and hermite_gen(Fraction(1, 2), n) == hermite_std(n).scale(Fraction(1, 2**n))
        and hermite_gen(8, n) == hermite_std(n).substitute_scaled(Fraction(1, 4)).scale(2**n)
        for n in range(M + 1)
    )
    out.append(_result("hermite-scaling", "Hermite scaling identity", ok, f"alpha in {{2, 1/2, 8}}, n<={M}"))

    ok = all(
        hermite_gen(alpha, n) == apply_gamma(exp_gamma(ExpOpParams(1, alpha, 0), n), n)
        for alpha in (Fraction(1), Fraction(-3, 2), Fraction(5))
        for n in range(min(N, 20) + 1)
    )
    out.append(_result("hermite-exp-operator", "H_n^alpha = exp(-alpha D^2/2) x^n", ok))
    return out


def roots_suite(N: int, seed: int = 0, trials: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    out = []
    N = max(N, 2)
    for alpha in (Fraction(1), Fraction(1, 2), Fraction(3)):
        hs = [hermite_gen(alpha, n) for n in range(N + 1)]
        bad = [
            n for n in range(2, N + 1)
            if count_real_roots(hs[n]).distinct_real_roots != n or not interlace(hs[n], hs[n - 1])
        ]
        pd = pd_check(hermite_spec(alpha, N), N)
        out.append(_result(
            f"hermite-roots-alpha={alpha}", "positive-definite root structure", not bad and pd,
            f"2<=n<={N}" if not bad else f"first failure n={bad[0]}",
        ))
    h2 = hermite_gen(-1, 2)
    pd = pd_check(hermite_spec(-1, N), N)
    ok = count_real_roots(h2).distinct_real_roots == 0 and not pd and pd.index == 2
    out.append(_result("hermite-alpha=-1", "Favard positivity", ok, f"H_2 = {h2}"))

    failures = 0
    max_deg = min(N, 10)
    for _ in range(trials):
        f, _roots = random_real_rooted(rng, max_deg)
        params = ExpOpParams(random_rational(rng, nonzero=True),
                             Fraction(rng.randint(1, 9), rng.randint(1, 9)),
                             random_rational(rng))
        if not preservation_test(params, f):
            failures += 1
    out.append(_result(
        "real-root-preservation", "Laguerre-Polya operators preserve real roots", failures == 0,
        f"{trials} random inputs deg<={max_deg}, failures={failures}",
    ))
    return out


def operator_suite(N: int, seed: int = 0, trials: int = 20) -> list[CheckResult]:
    rng = random.Random(seed)
    M = min(N, 15)
    rt_fail = deg_fail = 0
    for t in range(trials):
        exact = t % 2 == 0
        images = [random_poly(rng, n if exact else rng.randint(0, 2 * M), exact_degree=exact)
                  for n in range(M + 1)]
        op = extract(images, M)
        if any(apply(op, Poly.monomial(n)) != images[n] for n in range(M + 1)):
            rt_fail += 1
        if exact and any(op[n].degree > n for n in range(M + 1)):
            deg_fail += 1
    return [
        _result("extract-apply-roundtrip", "differential operator representation", rt_fail == 0,
                f"{trials} random transforms, n<={M}, failures={rt_fail}"),
        _result("extract-degree-bound", "p_n has degree at most n", deg_fail == 0,
                f"failures={deg_fail}"),
    ]


_SUITE_FUNCS: dict[str, Callable[..., list[CheckResult]]] = {
    "laguerre": laguerre_suite,
    "main-theorem": main_theorem_suite,
    "roots": roots_suite,
    "operator": operator_suite,
}


def run_suite(name: str, N: int, seed: int = 0) -> list[CheckResult]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    results = []
    for s in names:
        results.extend(_SUITE_FUNCS[s](N, seed))
    return results
