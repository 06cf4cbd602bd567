import cmath
import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from mahonstat.errors import InvalidArgument, NotDivisible
from mahonstat.qpoly import (ExactPolynomial, eval_unit_circle, exact_div_one_minus_qk,
                             gaussian_binomial, mul, mul_one_minus_qk, q_integer,
                             q_multinomial)
from mahonstat.verify import all_compositions

P = ExactPolynomial
coeff_lists = st.lists(st.integers(-10**30, 10**30), max_size=25)


def test_trimmed_form():
    p = P([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert P([0, 0]).is_zero()
    assert P([]).degree == -1
    assert p[5] == 0 and p[-1] == 0


def test_mul_examples():
    assert mul(P([1, 1]), P([1, 1])) == P([1, 2, 1])
    p = P([3, -1, 4])
    assert mul(p, P.one()) == p
    assert mul(P([1, 1, 1]), P([1, -1])) == P([1, 0, 0, -1])
    assert mul(p, P()) == P()


@given(coeff_lists, coeff_lists)
def test_mul_degree_adds(a, b):
    p, r = P(a), P(b)
    prod = p * r
    if p.is_zero() or r.is_zero():
        assert prod.is_zero()
    else:
        assert prod.degree == p.degree + r.degree
    assert prod == r * p


def test_mul_one_minus_qk_examples():
    assert mul_one_minus_qk(P([1]), 3) == P([1, 0, 0, -1])
    assert mul_one_minus_qk(P([1, 1, 1]), 3) == P([1, 1, 1, -1, -1, -1])
    assert mul_one_minus_qk(P(), 2) == P()
    with pytest.raises(InvalidArgument):
        mul_one_minus_qk(P([1]), 0)


def test_exact_div_examples():
    assert exact_div_one_minus_qk(P([1, 0, 0, 0, -1]), 2) == P([1, 0, 1])
    assert exact_div_one_minus_qk(P([1, 0, 0, -1]), 1) == P([1, 1, 1])
    with pytest.raises(NotDivisible):
        exact_div_one_minus_qk(P([1, 1]), 2)
    with pytest.raises(NotDivisible):
        exact_div_one_minus_qk(P([5]), 3)
    with pytest.raises(InvalidArgument):
        exact_div_one_minus_qk(P([1]), 0)


@given(coeff_lists, st.integers(1, 30))
def test_div_undoes_mul(c, k):
    p = P(c)
    assert exact_div_one_minus_qk(mul_one_minus_qk(p, k), k) == p


@given(coeff_lists, st.integers(1, 30))
def test_mul_matches_convolution(c, k):
    factor = P([1] + [0] * (k - 1) + [-1])
    assert mul_one_minus_qk(P(c), k) == mul(P(c), factor)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 2).coeffs == (1, 1, 2, 1, 1)
    for a in range(6):
        assert gaussian_binomial(a, 0) == P([1])
    for b in range(8):
        assert gaussian_binomial(1, b) == q_integer(b + 1)
    assert gaussian_binomial(3, 2) == gaussian_binomial(2, 3)


@pytest.mark.parametrize("a", range(0, 31, 3))
def test_gaussian_binomial_invariants(a):
    for b in range(31):
        g = gaussian_binomial(a, b)
        assert g.degree == a * b
        assert g.is_palindromic()
        assert g.is_nonnegative()
        assert g.value_at_one() == math.comb(a + b, a)


def test_q_multinomial_examples():
    assert q_multinomial((1, 1, 1)).coeffs == (1, 2, 2, 1)
    assert q_multinomial((7,)) == P([1])
    assert q_multinomial((2, 2)) == gaussian_binomial(2, 2)
    # frozen from brute-force word enumeration
    assert q_multinomial((1, 2, 1)).coeffs == (1, 2, 3, 3, 2, 1)
    assert q_multinomial((2, 1, 2)).coeffs == (1, 2, 4, 5, 6, 5, 4, 2, 1)
    assert q_multinomial((3, 2)).coeffs == (1, 1, 2, 2, 2, 1, 1)
    assert q_multinomial((1, 1, 1, 1)).coeffs == (1, 3, 5, 6, 5, 3, 1)
    for bad in [(), (0, 2), (2, -1)]:
        with pytest.raises(InvalidArgument):
            q_multinomial(bad)


def test_q_multinomial_is_product_of_binomials():
    for parts in [(3, 1, 2), (2, 2, 2, 1), (4, 5), (1, 3, 1, 2)]:
        expected, prefix = P.one(), parts[0]
        for aj in parts[1:]:
            expected = expected * gaussian_binomial(prefix, aj)
            prefix += aj
        assert q_multinomial(parts) == expected


def test_q_multinomial_permutation_invariant():
    for parts in all_compositions(10):
        base = q_multinomial(parts)
        for perm in set(permutations(parts)):
            assert q_multinomial(perm) == base


def test_convolution_identity():
    # words with multiplicities a, plus independent orderings within each letter
    # class, are equidistributed with permutations of N letters
    for parts in all_compositions(8):
        lhs = q_multinomial(parts)
        for a in parts:
            lhs = lhs * q_multinomial((1,) * a)
        assert lhs == q_multinomial((1,) * sum(parts))


def test_eval_unit_circle():
    assert eval_unit_circle(P([1, 2, 3]), 0.0) == pytest.approx(6)
    assert abs(eval_unit_circle(P([1, 1]), math.pi)) < 1e-15
    assert eval_unit_circle(P([1, 1, 2, 1, 1]), math.pi) == pytest.approx(2)
    assert eval_unit_circle(P(), 1.0) == 0


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=30), st.floats(-7, 7))
def test_eval_unit_circle_matches_direct_sum(c, theta):
    direct = sum(v * cmath.exp(1j * theta * i) for i, v in enumerate(c))
    assert eval_unit_circle(P(c), theta) == pytest.approx(direct, abs=1e-9 * (1 + sum(map(abs, c))))
