"""Acceptance criteria. All comparisons are exact (zero tolerance).

Each test records one PASS/FAIL line, repeated in the terminal summary.
"""
import math
import random
from fractions import Fraction

from orthodiff.classify import ExpForm, NotOps, classify_gamma, verify_ttr_equivalence
from orthodiff.diffop import DiffOp, ExpOpParams, apply, apply_gamma, exp_gamma, extract
from orthodiff.exactfield import GaussianRational
from orthodiff.laguerreop import a_closed, a_recursive, build_p, identity_double_sum
from orthodiff.opsfam import hermite_gen, hermite_spec, hermite_std, laguerre, pd_check
from orthodiff.poly import Poly
from orthodiff.rootcheck import count_real_roots, interlace, preservation_test

SEED = 20261016


def rat(rng, span=9, nonzero=False):
    while True:
        q = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if q or not nonzero:
            return q


def gauss(rng, span=9, nonzero=False):
    while True:
        z = GaussianRational(rat(rng, span), rat(rng, span))
        if z or not nonzero:
            return z


def test_01_laguerre_operator_theorem(report):
    N = 25
    op = DiffOp([build_p(n) for n in range(N + 1)])
    bad = [n for n in range(N + 1) if apply(op, Poly.monomial(n)) != laguerre(0, n)]
    report("1 Laguerre operator reproduces L_n, n<=25", not bad, f"mismatches={bad}")


def test_02_a_closed_vs_recursive(report):
    bad = [r for r in range(41) if a_closed(r) != a_recursive(r)]
    spots = [a_closed(1), a_closed(2), a_closed(3)] == [-2, Fraction(7, 2), Fraction(-17, 3)]
    report("2 a_r closed form = recursion, r<=40; a_1..a_3 = -2, 7/2, -17/3",
           not bad and spots, f"mismatches={bad}, spots={spots}")


def test_03_double_sum_identity(report):
    bad = [r for r in range(41) if identity_double_sum(r) != Fraction((-1) ** r, math.factorial(r))]
    report("3 double sum equals (-1)^r/r!, r<=40", not bad, f"failures={bad}")


def test_04_classification_soundness(report):
    rng = random.Random(SEED + 4)
    N = 25
    failures = []
    for t in range(200):
        draw = gauss if t % 2 else rat
        params = ExpOpParams(draw(rng, nonzero=True), draw(rng, nonzero=True), draw(rng))
        g = exp_gamma(params, N)
        res = classify_gamma(g, N)
        if not (isinstance(res, ExpForm) and res.params == params and verify_ttr_equivalence(g, N)):
            failures.append(params)
    report("4 exp-form soundness: 200 random (rational + Gaussian), N=25",
           not failures, f"failures={len(failures)}")


def test_05_refutation(report):
    fact = [math.factorial(k) for k in range(26)]
    res = classify_gamma(fact, 25)
    ok = res == NotOps(3, "recursion")
    rng = random.Random(SEED + 5)
    wrong = 0
    for t in range(100):
        draw = gauss if t % 2 else rat
        params = ExpOpParams(draw(rng, nonzero=True), draw(rng, nonzero=True), draw(rng))
        gs = list(exp_gamma(params, 25))
        j = rng.randint(3, 25)
        gs[j] = gs[j] + draw(rng, nonzero=True)
        res_j = classify_gamma(gs, 25)
        ttr = verify_ttr_equivalence(gs, 25)
        if not (res_j == NotOps(j, "recursion") and not ttr and ttr.index == j):
            wrong += 1
    report("5 gamma_k = k! rejected at n=3; corruptions rejected at corrupted index",
           ok and wrong == 0, f"k! -> {res.to_json()}, wrong witnesses={wrong}")


def test_06_shifted_hermite(report):
    rng = random.Random(SEED + 6)
    failures = 0
    for _ in range(50):
        params = ExpOpParams(rat(rng, nonzero=True), rat(rng, nonzero=True), rat(rng))
        g = exp_gamma(params, 20)
        for n in range(21):
            target = hermite_gen(params.alpha, n).taylor_shift(-params.beta).scale(params.gamma0)
            if apply_gamma(g, n) != target:
                failures += 1
                break
    report("6 exp-form images = gamma0 H_n^alpha(x - beta), n<=20, 50 random", failures == 0,
           f"failures={failures}")


def test_07_scaling_identities(report):
    bad = [
        n for n in range(16)
        if hermite_gen(2, n) != hermite_std(n).substitute_scaled(Fraction(1, 2))
        or hermite_gen(Fraction(1, 2), n) != hermite_std(n).scale(Fraction(1, 2**n))
    ]
    report("7 H_n^2(x) = H_n(x/2), H_n^(1/2) = 2^-n H_n, n<=15", not bad, f"failures={bad}")


def test_08_positive_definite_roots(report):
    bad = []
    for alpha in (Fraction(1), Fraction(1, 2), Fraction(3)):
        for n in range(2, 16):
            h = hermite_gen(alpha, n)
            if count_real_roots(h).distinct_real_roots != n or not interlace(h, hermite_gen(alpha, n - 1)):
                bad.append((alpha, n))
    neg = count_real_roots(hermite_gen(-1, 2)).distinct_real_roots == 0
    pd_neg = pd_check(hermite_spec(-1, 15), 15)
    pd_pos = all(pd_check(hermite_spec(a, 15), 15) for a in (1, Fraction(1, 2), 3))
    ok = not bad and neg and not pd_neg and pd_neg.index == 2 and pd_pos
    report("8 H_n^alpha real-rooted and interlacing for alpha in {1,1/2,3}; H_2^-1 has no real roots",
           ok, f"failures={bad}, alpha=-1 roots ok={neg}")


def test_09_real_root_preservation(report):
    rng = random.Random(SEED + 9)
    failures = []
    for _ in range(200):
        deg = rng.randint(0, 10)
        f = Poly.from_roots([rat(rng) for _ in range(deg)], lead=rat(rng, nonzero=True))
        params = ExpOpParams(rat(rng, nonzero=True), Fraction(rng.randint(1, 9), rng.randint(1, 9)), rat(rng))
        if not preservation_test(params, f):
            failures.append((params, f))
    report("9 exp(-alpha D^2/2 - beta D) keeps 200 random real-rooted inputs real-rooted",
           not failures, f"counterexamples={len(failures)}")


def test_10_extract_apply_round_trip(report):
    rng = random.Random(SEED + 10)
    N = 15
    rt_fail = deg_fail = 0
    for t in range(30):
        exact = t % 2 == 0
        images = []
        for n in range(N + 1):
            d = n if exact else rng.randint(0, 2 * N)
            cs = [rat(rng) for _ in range(d + 1)]
            if exact:
                cs[-1] = rat(rng, nonzero=True)
            images.append(Poly(cs))
        op = extract(images, N)
        if any(apply(op, Poly.monomial(n)) != images[n] for n in range(N + 1)):
            rt_fail += 1
        if exact and any(op[n].degree > n for n in range(N + 1)):
            deg_fail += 1
    report("10 extract-then-apply reproduces images of x^0..x^15; deg p_n <= n",
           rt_fail == 0 and deg_fail == 0, f"round-trip failures={rt_fail}, degree failures={deg_fail}")
