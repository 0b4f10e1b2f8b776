from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercatalan.errors import DomainError, NotDivisible
from supercatalan.qpoly import (
    ONE, Q, ZERO, PolyFraction, QPoly, add, ballot_q, ballot_q_binomial_form, eval_at_one,
    exact_div, gaussian_binomial, is_nonnegative, is_unimodal, mul, neg, q_factorial, q_int,
    shift, sub, super_catalan, super_catalan_q, super_catalan_t_q,
)

from oracles import (
    evaluate, gaussian_by_word_inversions, q_factorial_by_inversions, super_catalan_value,
)

P = QPoly.parse

qpolys = st.builds(
    QPoly,
    st.lists(st.integers(-40, 40), max_size=7),
    st.integers(-6, 6),
)
nonzero_qpolys = qpolys.filter(lambda p: not p.is_zero())
points = st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5, 3)])


class TestCanonicalForm:
    def test_trailing_and_leading_zeros_are_stripped(self):
        p = QPoly([0, 0, 1, 2, 0], min_deg=-1)
        assert p.min_deg == 1
        assert p.coeffs == (1, 2)
        assert p.degree == 2

    def test_zero_is_unique(self):
        assert QPoly([0, 0], 5) == ZERO
        assert ZERO.coeffs == () and ZERO.min_deg == 0

    def test_immutable(self):
        with pytest.raises(AttributeError):
            ONE.min_deg = 3

    def test_rendering(self):
        assert str(P("1 + 2*q + q^3")) == "1 + 2*q + q^3"
        assert str(QPoly([1, 0, -1])) == "1 - q^2"
        assert str(QPoly.monomial(-1)) == "q^-1"
        assert str(ZERO) == "0"

    def test_json_uses_decimal_strings(self):
        big = QPoly([10**30, -1], -2)
        js = big.to_json()
        assert js == {"min_deg": -2, "coeffs": [str(10**30), "-1"]}
        assert QPoly.from_json(js) == big


class TestArithmeticExamples:
    def test_add_identity(self):
        assert add(P("1 + q"), ZERO) == P("1 + q")

    def test_difference_of_squares(self):
        assert mul(P("1 + q"), P("1 - q")) == P("1 - q^2")

    def test_negative_shift(self):
        assert shift(P("q^2"), -3) == QPoly.monomial(-1)

    def test_sub_and_neg(self):
        assert sub(P("q"), P("q")) == ZERO
        assert neg(P("1 - q")) == P("-1 + q")


@given(qpolys, qpolys)
def test_add_neg_cancels_and_mul_commutes(a, b):
    assert a + (-a) == ZERO
    assert a * b == b * a


@given(qpolys, st.integers(-10, 10))
def test_shift_roundtrip(a, k):
    assert a.shift(k).shift(-k) == a


@given(qpolys, qpolys, points)
def test_ring_ops_agree_with_rational_evaluation(a, b, x):
    assert evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x)
    assert evaluate(a - b, x) == evaluate(a, x) - evaluate(b, x)
    assert evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x)


@given(qpolys, nonzero_qpolys)
def test_exact_div_roundtrip(c, b):
    assert exact_div(b * c, b) == c


@given(qpolys, nonzero_qpolys)
def test_exact_div_either_succeeds_exactly_or_raises(a, b):
    try:
        c = exact_div(a, b)
    except NotDivisible:
        return
    assert b * c == a


@given(qpolys)
def test_parse_inverts_str(a):
    assert QPoly.parse(str(a)) == a


@given(qpolys)
def test_json_roundtrip(a):
    assert QPoly.from_json(a.to_json()) == a


class TestExactDiv:
    def test_exact(self):
        assert exact_div(P("1 - q^2"), P("1 + q")) == P("1 - q")

    def test_not_divisible_carries_remainder(self):
        # long division: 1 + q + q^2 = (1 + q) * q + 1
        with pytest.raises(NotDivisible) as info:
            exact_div(P("1 + q + q^2"), P("1 + q"))
        assert info.value.remainder is not None and not info.value.remainder.is_zero()

    def test_super_catalan_one_one_over_one_plus_q(self):
        assert exact_div(super_catalan_q(1, 1), P("1 + q")) == ONE

    def test_laurent_operands(self):
        assert exact_div(P("q^-3 + q^-1"), P("q^-1")) == P("q^-2 + 1")

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(ONE, ZERO)

    def test_non_integer_quotient_is_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_div(P("1 + q"), P("2"))


class TestQNumbers:
    @pytest.mark.parametrize("r, expected", [(0, "0"), (1, "1"), (3, "1 + q + q^2")])
    def test_q_int(self, r, expected):
        assert q_int(r) == P(expected)

    @pytest.mark.parametrize("n, expected", [(0, "1"), (2, "1 + q"), (3, "1 + 2*q + 2*q^2 + q^3")])
    def test_q_factorial_examples(self, n, expected):
        assert q_factorial(n) == P(expected)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_q_factorial_against_permutation_inversions(self, n):
        assert q_factorial(n) == q_factorial_by_inversions(n)

    @pytest.mark.parametrize("n, k, expected", [
        (2, 1, "1 + q"),
        (4, 2, "1 + q + 2*q^2 + q^3 + q^4"),
        (3, 5, "0"),
        (3, -1, "0"),
    ])
    def test_gaussian_examples(self, n, k, expected):
        assert gaussian_binomial(n, k) == P(expected)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_gaussian_against_word_inversions(self, n):
        for k in range(-1, n + 2):
            assert gaussian_binomial(n, k) == gaussian_by_word_inversions(n, k)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            q_factorial(-1)


class TestSuperCatalan:
    @pytest.mark.parametrize("m, n, expected", [
        (0, 1, "1 + q"),
        (1, 1, "1 + q"),
        (2, 2, "1 + q + 2*q^2 + q^3 + q^4"),
    ])
    def test_s_q_examples(self, m, n, expected):
        assert super_catalan_q(m, n) == P(expected)

    def test_s_q_two_two_factors(self):
        assert super_catalan_q(2, 2) == P("1 + q^2") * P("1 + q + q^2")

    @pytest.mark.parametrize("m, n, expected", [(1, 1, "1"), (1, 2, "1 + q"), (2, 2, "1 + q + q^2")])
    def test_t_q_examples(self, m, n, expected):
        assert super_catalan_t_q(m, n) == P(expected)

    def test_t_q_rejects_n_zero(self):
        with pytest.raises(DomainError):
            super_catalan_t_q(3, 0)

    @pytest.mark.parametrize("m", range(0, 6))
    @pytest.mark.parametrize("n", range(0, 6))
    def test_s_q_against_rational_evaluation(self, m, n):
        for x in (Fraction(2), Fraction(-1, 3), Fraction(7, 5)):
            assert evaluate(super_catalan_q(m, n), x) == super_catalan_value(m, n, x)

    def test_symmetric(self):
        for m in range(11):
            for n in range(11):
                assert super_catalan_q(m, n) == super_catalan_q(n, m)

    def test_nonnegative_up_to_twenty(self):
        for m in range(21):
            for n in range(21 - m):
                assert is_nonnegative(super_catalan_q(m, n))

    def test_t_is_half_of_s_at_one(self):
        for m in range(1, 9):
            for n in range(1, 9):
                s = eval_at_one(super_catalan_q(m, n))
                assert s == super_catalan(m, n)
                assert eval_at_one(super_catalan_t_q(m, n)) * 2 == s

    def test_eval_at_one_s_two_two(self):
        assert eval_at_one(super_catalan_q(2, 2)) == 6


class TestBallot:
    @pytest.mark.parametrize("n, r, expected", [(1, 1, "1"), (2, 1, "1 + q"), (2, 2, "1")])
    def test_examples(self, n, r, expected):
        assert ballot_q(n, r) == P(expected)

    def test_both_forms_agree(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                assert ballot_q(n, r) == ballot_q_binomial_form(n, r)

    def test_r_equals_n_is_one(self):
        for n in range(1, 9):
            assert ballot_q(n, n) == ONE

    @pytest.mark.parametrize("n, r", [(2, 0), (2, 3), (0, 0)])
    def test_domain(self, n, r):
        with pytest.raises(DomainError):
            ballot_q(n, r)
        with pytest.raises(DomainError):
            ballot_q_binomial_form(n, r)


class TestPredicates:
    def test_unimodal(self):
        assert is_unimodal(P("1 + 2*q + q^2"))
        assert not is_unimodal(P("1 + q^2"))
        assert is_unimodal(P("3"))
        assert is_unimodal(P("1 + q + q^2 + 5*q^3"))

    def test_unimodal_zero_undefined(self):
        with pytest.raises(ValueError):
            is_unimodal(ZERO)

    def test_nonnegative(self):
        assert is_nonnegative(P("1 + 2*q"))
        assert not is_nonnegative(P("1 - q"))


class TestPolyFraction:
    def test_cross_multiplied_equality(self):
        assert PolyFraction(P("1 + q"), P("1 - q")) == PolyFraction(P("1 - q^2"), P("1 - 2*q + q^2"))

    def test_sum(self):
        half = PolyFraction(ONE, P("2"))
        assert half + half == PolyFraction(ONE)

    def test_to_poly(self):
        assert PolyFraction(P("1 + q^2") * P("1 + q") ** 2, P("1 + q")).to_poly() == P("1 + q^2") * P("1 + q")
        with pytest.raises(NotDivisible):
            PolyFraction(ONE, Q + 1).to_poly()

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            PolyFraction(ONE, ZERO)

    @settings(max_examples=50)
    @given(qpolys, nonzero_qpolys, qpolys, nonzero_qpolys)
    def test_add_mul_match_evaluation(self, a, b, c, d):
        x = Fraction(3, 2)
        if evaluate(b, x) == 0 or evaluate(d, x) == 0:
            return
        f, g = PolyFraction(a, b), PolyFraction(c, d)
        lhs = f + g
        assert evaluate(lhs.num, x) / evaluate(lhs.den, x) == evaluate(a, x) / evaluate(b, x) + evaluate(c, x) / evaluate(d, x)
        prod = f * g
        assert evaluate(prod.num, x) * evaluate(b, x) * evaluate(d, x) == evaluate(a, x) * evaluate(c, x) * evaluate(prod.den, x)
