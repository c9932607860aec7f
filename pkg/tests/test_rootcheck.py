import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orthodiff.diffop import ExpOpParams
from orthodiff.opsfam import hermite_gen
from orthodiff.poly import Poly
from orthodiff.rootcheck import (
    NotRealRootedError,
    PreconditionError,
    count_real_roots,
    interlace,
    preservation_test,
    squarefree,
)
from orthodiff.suites import random_rational

from conftest import rationals

x = Poly.x()


def test_squarefree():
    assert squarefree((x - 1) ** 2) == x - 1
    assert squarefree(x**2 - 1) == x**2 - 1
    assert squarefree(x**3 - 3 * x) == x**3 - 3 * x
    with pytest.raises(ValueError):
        squarefree(Poly())


@pytest.mark.parametrize(
    "p,count", [(x**2 + 1, 0), (x**2 - 2, 2), (Poly([3, 0, -6, 0, 1]), 4), (Poly([5]), 0)]
)
def test_count_examples(p, count):
    rep = count_real_roots(p)
    assert rep.distinct_real_roots == count
    assert len(rep.isolating_intervals) == count


def test_count_rejects_zero_and_complex():
    from orthodiff.exactfield import GaussianRational

    with pytest.raises(ValueError):
        count_real_roots(Poly())
    with pytest.raises(ValueError):
        count_real_roots(Poly([1, GaussianRational(0, 1)]))


def _check_intervals(p, rep):
    for lo, hi in rep.isolating_intervals:
        assert lo < hi
    ivs = rep.isolating_intervals
    assert all(ivs[i][1] <= ivs[i + 1][0] for i in range(len(ivs) - 1))


def test_intervals_contain_known_roots():
    roots = [Fraction(-7, 3), Fraction(0), Fraction(1, 2), Fraction(4)]
    p = Poly.from_roots(roots + [Fraction(1, 2)], lead=-3)
    rep = count_real_roots(p)
    assert rep.distinct_real_roots == 4 and rep.all_roots_real and rep.degree == 5
    _check_intervals(p, rep)
    for r, (lo, hi) in zip(sorted(roots), rep.isolating_intervals):
        assert lo < r <= hi


def test_count_against_rational_root_oracle():
    rng = random.Random(2024)
    for _ in range(500):
        deg = rng.randint(1, 12)
        roots = [random_rational(rng, 6) for _ in range(deg)]
        extra = Poly.constant(1)
        if rng.random() < 0.3:
            extra = x**2 + Fraction(rng.randint(1, 9), rng.randint(1, 9))  # no real roots
        p = Poly.from_roots(roots, lead=random_rational(rng, 9, nonzero=True)) * extra
        rep = count_real_roots(p)
        assert rep.distinct_real_roots == len(set(roots))
        assert rep.all_roots_real == (extra.degree == 0)
        for r, (lo, hi) in zip(sorted(set(roots)), rep.isolating_intervals):
            assert lo < r <= hi


def test_interlace_examples():
    assert interlace(x**3 - 3 * x, x**2 - 1)
    assert interlace(x**2 - 1, x)
    with pytest.raises(NotRealRootedError):
        interlace(x**2 + 1, x)
    with pytest.raises(PreconditionError):
        interlace(x**3 - x, x)
    assert not interlace(x**2 - 1, x - 1)  # shared root
    assert not interlace(x**2 - 1, x - 2)  # root outside
    assert not interlace(Poly.from_roots([0, 1, 2]), Poly.from_roots([Fraction(1, 4), Fraction(1, 2)]))


def test_interlace_close_roots():
    p = Poly.from_roots([0, Fraction(1, 1000), 1])
    q = Poly.from_roots([Fraction(1, 2000), Fraction(999, 1000)])
    assert interlace(p, q)


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(1, 2), Fraction(3)])
def test_positive_definite_hermite(alpha):
    for n in range(2, 16):
        h = hermite_gen(alpha, n)
        assert count_real_roots(h).distinct_real_roots == n
        assert interlace(h, hermite_gen(alpha, n - 1))


def test_negative_alpha_hermite():
    assert count_real_roots(hermite_gen(-1, 2)).distinct_real_roots == 0


def test_preservation_examples():
    assert preservation_test(ExpOpParams(1, 1, 0), Poly.from_roots([1, -1, 2]))
    assert preservation_test(ExpOpParams(1, 1, 0), Poly([Fraction(5, 3)]))
    assert preservation_test(ExpOpParams(1, 1, 5), x**2)


def test_preservation_preconditions():
    with pytest.raises(PreconditionError):
        preservation_test(ExpOpParams(1, -1, 0), x)
    with pytest.raises(NotRealRootedError):
        preservation_test(ExpOpParams(1, 1, 0), x**2 + 1)


def test_negative_alpha_can_break_real_roots():
    # exp(+D^2/2) x^2 = x^2 + 1: the sign condition matters
    from orthodiff.diffop import DiffOp, apply, exp_gamma

    image = apply(DiffOp.from_gammas(exp_gamma(ExpOpParams(1, -1, 0), 2)), x**2)
    assert image == x**2 + 1
    assert not count_real_roots(image).all_roots_real


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals(6), max_size=8), st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9), rationals(9))
def test_preservation_property(roots, alpha, beta):
    assert preservation_test(ExpOpParams(1, alpha, beta), Poly.from_roots(roots))


def test_report_json():
    rep = count_real_roots(x**2 - 2)
    obj = rep.to_json()
    assert obj["distinct_real_roots"] == 2 and obj["all_roots_real"] is True
    assert all(isinstance(v, str) for iv in obj["isolating_intervals"] for v in iv)
