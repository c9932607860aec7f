from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orthodiff.diffop import ExpOpParams, apply_gamma, exp_gamma
from orthodiff.exactfield import GaussianRational
from orthodiff.opsfam import (
    InvalidSpecError,
    TTRSpec,
    hermite_gen,
    hermite_spec,
    hermite_std,
    laguerre,
    pd_check,
    shift_system,
    ttr_generate,
)
from orthodiff.poly import Poly

from conftest import rationals

x = Poly.x()


def test_ttr_generate_hermite():
    spec = TTRSpec.from_functions(lambda n: 0, lambda n: n - 1, 3)
    assert ttr_generate(spec, 3) == [Poly([1]), x, x**2 - 1, x**3 - 3 * x]
    assert ttr_generate(spec, 0) == [Poly([1])]


@given(rationals(9, nonzero=True), rationals(9))
def test_ttr_generate_shifted(alpha, beta):
    spec = hermite_spec(alpha, 2, beta)
    assert ttr_generate(spec, 2) == [Poly([1]), x - beta, (x - beta) ** 2 - alpha]


def test_ttr_general_kind_matches_hermite_std():
    N = 8
    spec = TTRSpec.general([2] * N, [0] * N, [None] + [2 * n for n in range(1, N)])
    assert ttr_generate(spec, N) == [hermite_std(n) for n in range(N + 1)]


def test_ttr_errors():
    with pytest.raises(InvalidSpecError):
        ttr_generate(TTRSpec.monic([None, 0, 0], [None, None]), 2)
    with pytest.raises(InvalidSpecError):
        ttr_generate(TTRSpec.monic([None, 0, 0], [None, None, 0]), 2)
    with pytest.raises(InvalidSpecError):
        ttr_generate(TTRSpec.general([1, 0], [0, 0], [None, 1]), 2)
    with pytest.raises(InvalidSpecError):
        ttr_generate(TTRSpec.general([1, 1], [0, 0], [None, 0]), 2)


@given(st.lists(rationals(9), min_size=12, max_size=12), st.lists(rationals(9, nonzero=True), min_size=12, max_size=12))
def test_ttr_monic_degrees(cs, lams):
    ps = ttr_generate(TTRSpec.monic([None] + cs, [None, None] + lams), 11)
    assert all(p.degree == n and p.lc == 1 for n, p in enumerate(ps))


def test_hermite_std():
    assert hermite_std(0) == Poly([1])
    assert hermite_std(2) == 4 * x**2 - 2
    assert hermite_std(3) == 8 * x**3 - 12 * x


@given(rationals(20))
def test_hermite_gen_low_degree(alpha):
    assert hermite_gen(alpha, 1) == x
    assert hermite_gen(alpha, 2) == x**2 - alpha


def test_hermite_gen_alpha_one():
    assert hermite_gen(1, 4) == x**4 - 6 * x**2 + 3


def test_laguerre_examples():
    assert laguerre(0, 1) == 1 - x
    assert laguerre(0, 2) == Poly([1, -2, Fraction(1, 2)])
    assert laguerre(Fraction(1, 2), 1) == Poly([Fraction(3, 2), -1])


def test_laguerre_leading_coefficient():
    import math

    for n in range(20):
        assert laguerre(0, n).lc == Fraction((-1) ** n, math.factorial(n))


def test_laguerre_matches_classical_recurrence():
    # (n+1) L_{n+1} = (2n + 1 + a - x) L_n - (n + a) L_{n-1}
    for a in (Fraction(0), Fraction(1, 2), Fraction(3)):
        for n in range(1, 12):
            lhs = laguerre(a, n + 1).scale(n + 1)
            rhs = (Poly([2 * n + 1 + a, -1])) * laguerre(a, n) - laguerre(a, n - 1).scale(n + a)
            assert lhs == rhs


def test_scaling_identities():
    for n in range(16):
        assert hermite_gen(2, n) == hermite_std(n).substitute_scaled(Fraction(1, 2))
        assert hermite_gen(Fraction(1, 2), n) == hermite_std(n).scale(Fraction(1, 2**n))


@settings(max_examples=25)
@given(rationals(9, nonzero=True))
def test_hermite_gen_is_exp_operator(alpha):
    g = exp_gamma(ExpOpParams(1, alpha, 0), 20)
    assert all(hermite_gen(alpha, n) == apply_gamma(g, n) for n in range(21))


@settings(max_examples=25)
@given(rationals(9, nonzero=True), rationals(9))
def test_shifted_identity(alpha, beta):
    g = exp_gamma(ExpOpParams(1, alpha, beta), 20)
    assert all(apply_gamma(g, n) == hermite_gen(alpha, n).taylor_shift(-beta) for n in range(21))


def test_shift_system_examples():
    hs = [hermite_gen(1, n) for n in range(6)]
    shifted = shift_system(hs, 1)
    assert shifted[1] == x + 1
    g = exp_gamma(ExpOpParams(1, 1, 1), 5)
    assert shift_system(hs, -1) == [apply_gamma(g, n) for n in range(6)]
    assert shift_system(hs, 0) == hs
    assert shift_system([Poly([1]), x - 3], 3) == [Poly([1]), x]


@given(rationals(9), rationals(9, nonzero=True), rationals(9))
def test_shift_system_recurrence(beta, alpha, s):
    N = 8
    ps = ttr_generate(hermite_spec(alpha, N, beta), N)
    assert shift_system(ps, s) == ttr_generate(hermite_spec(alpha, N, beta - s), N)


def test_pd_check():
    assert pd_check(hermite_spec(1, 20), 20)
    res = pd_check(hermite_spec(-1, 20), 20)
    assert not res and res.index == 2
    spec = TTRSpec.monic([None] + [GaussianRational(0, 1)] * 5, [None, None] + [1] * 4)
    res = pd_check(spec, 5)
    assert not res and res.index == 1
    with pytest.raises(InvalidSpecError):
        pd_check(TTRSpec.general([1], [0], [None]), 1)


def test_ttrspec_json():
    spec = hermite_spec(Fraction(1, 2), 4, 3)
    obj = spec.to_json()
    assert obj["lam"][:3] == [None, None, "1/2"]
    assert TTRSpec.from_json(obj) == spec
