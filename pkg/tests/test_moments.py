from fractions import Fraction

import pytest

from mahonstat.errors import InvalidArgument
from mahonstat.mahonian import build
from mahonstat.moments import (RationalSeries, alpha_asymptotic, binomial_moments_recurrence,
                               binomial_power_series, central_from_binomial,
                               exact_binomial_moments, exact_central_moments,
                               generalized_binomial, moment_table, p_series,
                               standardized_moment, stirling2)
from mahonstat.verify import all_compositions

AB = [(a, b) for a in range(1, 7) for b in range(1, 7)]


def test_generalized_binomial():
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert generalized_binomial(Fraction(7, 3), 0) == 1


def test_series_arithmetic():
    s = binomial_power_series(Fraction(1, 2), 6)
    assert (s * s).coeffs == (1, 1, 0, 0, 0, 0, 0)
    inv = binomial_power_series(-1, 5)
    assert (inv * RationalSeries((Fraction(1), Fraction(1), 0, 0, 0, 0))).coeffs[:6] == (
        1, 0, 0, 0, 0, 0)
    with pytest.raises(ZeroDivisionError):
        RationalSeries((Fraction(0), Fraction(1))).reciprocal()


@pytest.mark.parametrize("a,b", AB)
def test_p_series_low_order(a, b):
    p = p_series(a, b, 4)
    assert p[0] == 1 and p[1] == 0
    assert p[2] == Fraction((2 * a + b) * b, 24)
    assert p[3] == -Fraction((2 * a + b) * b, 24)
    z4 = -Fraction(8 * a**3 - 8 * a**2 * b - 12 * a * b**2 - 3 * b**3 - 440 * a - 220 * b,
                   5760) * b
    assert p[4] == z4


def test_p_series_two_two():
    assert p_series(2, 2, 4)[4] == Fraction(1, 2)


def test_p_series_closed_form_one_one():
    # P(1, 1, z) = (1 + z/2) (1+z)^(-1/2)
    half = binomial_power_series(Fraction(-1, 2), 8)
    expected = [half[k] + (half[k - 1] / 2 if k else 0) for k in range(9)]
    assert list(p_series(1, 1, 8).coeffs) == expected


def test_p_series_rejects():
    with pytest.raises(InvalidArgument):
        p_series(1, 1, 0)
    with pytest.raises(InvalidArgument):
        p_series(0, 1, 3)


def test_recurrence_examples():
    A = binomial_moments_recurrence(2, 2, 4)
    assert A[0] == 1 and A[1] == 0
    assert A[2] == Fraction(5, 6)
    for a in range(1, 6):
        for b in range(1, 6):
            A = binomial_moments_recurrence(a, b, 3)
            assert (A[0], A[1]) == (1, 0)
            assert A[2] == build((a, b)).sigma2 / 2


def test_recurrence_leading_order():
    ratios = []
    for t in (10, 40, 160):
        A2 = binomial_moments_recurrence(t, t, 2)[2]
        ratios.append(float(A2 / Fraction(t * t * 2 * t, 24)))
    assert all(abs(r - 1) > abs(s - 1) for r, s in zip(ratios, ratios[1:]))
    assert ratios[-1] == pytest.approx(1, abs=0.005)


def test_recurrence_matches_direct():
    for a in range(1, 10):
        for b in range(1, 11 - a):
            d = build((a, b))
            rec = binomial_moments_recurrence(a, b, 8)
            assert rec == exact_binomial_moments(d, 8)
            assert central_from_binomial(rec) == exact_central_moments(d, 8)


def test_stirling():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1


def test_central_from_binomial_identities():
    A = [Fraction(1), Fraction(0), Fraction(5, 6), Fraction(-5, 6), Fraction(1)]
    mu = central_from_binomial(A)
    assert mu[2] == 2 * A[2] == Fraction(5, 3)
    assert mu[3] == 0


def test_exact_central_examples():
    mu = exact_central_moments(build((1, 1)), 4)
    assert mu[:5] == (1, 0, Fraction(1, 4), 0, Fraction(1, 16))
    assert exact_central_moments(build((2, 2)), 2)[2] == Fraction(5, 3)


def test_odd_central_moments_vanish():
    for parts in all_compositions(7):
        mu = exact_central_moments(build(parts), 7)
        assert mu[1] == mu[3] == mu[5] == mu[7] == 0


def test_moment_table_methods_agree():
    d = build((3, 4))
    assert moment_table(d, 6, "exact") == moment_table(d, 6, "recurrence")
    with pytest.raises(InvalidArgument):
        moment_table(build((1, 1, 1)), 2, "recurrence")
    with pytest.raises(InvalidArgument):
        moment_table(d, 2, "bogus")


def test_alpha_asymptotic():
    for a, b, t in [(1, 1, 5), (2, 3, 7), (1, 4, 100)]:
        assert alpha_asymptotic(1, a, b, t) == 1
    assert alpha_asymptotic(2, 1, 1, 10**12) == pytest.approx(3)
    assert alpha_asymptotic(2, 1, 1, 100) == pytest.approx(3 * (1 - 3 / 500))
    with pytest.raises(InvalidArgument):
        alpha_asymptotic(0, 1, 1, 1)


def test_alpha_remainder_shrinks_quadratically():
    err = {t: abs(float(standardized_moment(build((t, t)), 2)) - alpha_asymptotic(2, 1, 1, t))
           for t in (25, 50)}
    assert 3.0 <= err[25] / err[50] <= 5.0
