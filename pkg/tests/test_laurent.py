"""Exact Laurent polynomial and rational-function arithmetic."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kacdepth import LaurentPoly, RatFunc

from helpers import random_laurent, random_nonzero_laurent, random_ratfunc

Q = LaurentPoly.q()


def st_fraction():
    return st.builds(
        Fraction,
        st.integers(min_value=-6, max_value=6),
        st.integers(min_value=1, max_value=4),
    )


def laurents_st(max_terms=4):
    return st.dictionaries(
        st.integers(min_value=-3, max_value=4), st_fraction(), max_size=max_terms
    ).map(LaurentPoly)


class TestLaurentPoly:
    def test_zero_is_empty(self):
        assert LaurentPoly({0: 0, 2: 0}).is_zero()
        assert LaurentPoly.zero() == LaurentPoly({})

    def test_canonical_no_zero_coefficients(self):
        poly = LaurentPoly({2: 1}) - LaurentPoly({2: 1})
        assert poly.is_zero()
        assert len(poly) == 0

    def test_str(self):
        assert str(Q**2 + 2 * Q + 1) == "q^2+2q+1"
        assert str(LaurentPoly({-1: 1, 0: 1})) == "1+q^-1"
        assert str(LaurentPoly.zero()) == "0"

    def test_pow_and_shift(self):
        assert (Q + 1) ** 2 == Q**2 + 2 * Q + 1
        assert (Q + 1).shift(-1) == LaurentPoly({0: 1, -1: 1})

    def test_evaluate(self):
        assert (Q**2 - 1).evaluate(3) == 8
        assert LaurentPoly({-1: 1}).evaluate(Fraction(1, 2)) == 2

    def test_triples_roundtrippable(self):
        poly = LaurentPoly({-1: Fraction(1, 2), 3: -2})
        assert poly.to_triples() == [[-1, "1", "2"], [3, "-2", "1"]]

    @given(laurents_st(), laurents_st(), laurents_st())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + LaurentPoly.zero() == a
        assert a * LaurentPoly.one() == a
        assert a + b == b + a
        assert a * b == b * a

    @given(laurents_st(), laurents_st())
    def test_evaluation_commutes_with_arithmetic(self, a, b):
        x = Fraction(3, 2)
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


class TestRatFuncNormalize:
    def test_factor_cancellation(self):
        assert RatFunc(Q**2 - 1, Q - 1) == RatFunc(Q + 1)

    def test_identity_case(self):
        assert RatFunc(Q, Q) == RatFunc.one()

    def test_scalar_denominator_cross_multiplication(self):
        num = (Q + 1) * (Q - 1) ** 2
        den = 2 * (Q - 1)
        r = RatFunc(num, den)
        # independent check: cross-multiplication against the raw pair
        assert r.num * den == num * r.den
        assert r.den == LaurentPoly.one()
        assert r.num == (Q**2 - 1) * Fraction(1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError, match="division by zero"):
            RatFunc(Q, LaurentPoly.zero())

    def test_denominator_monic_with_constant_term(self):
        r = RatFunc(LaurentPoly.one(), 2 * Q - 2)
        assert r.den.coeff(r.den.max_exp()) == 1
        assert r.den.min_exp() == 0

    def test_negative_exponents_go_to_numerator(self):
        r = RatFunc(LaurentPoly.one(), Q**2)
        assert r.den == LaurentPoly.one()
        assert r.num == LaurentPoly({-2: 1})

    def test_normalize_idempotent_and_equality_respecting(self):
        rng = random.Random(2024)
        for _ in range(300):
            a, b = random_laurent(rng), random_nonzero_laurent(rng)
            r = RatFunc(a, b)
            again = RatFunc(r.num, r.den)
            assert again.num == r.num and again.den == r.den
            # a/b == c/d (cross multiplication) implies identical forms
            scale = LaurentPoly({rng.randint(-2, 2): Fraction(3, 2)})
            assert RatFunc(a * scale, b * scale) == r


class TestRatFuncArithmetic:
    def test_substitute_power_examples(self):
        assert RatFunc(Q + 1).substitute_power(2) == RatFunc(Q**2 + 1)
        one_minus_qinv = RatFunc(LaurentPoly({0: 1, -1: -1}))
        sub = one_minus_qinv.inverse().substitute_power(2)
        assert sub == RatFunc(LaurentPoly({0: 1, -2: -1})).inverse()
        assert RatFunc(Q + 1, Q - 1).substitute_power(3) == RatFunc(Q**3 + 1, Q**3 - 1)

    def test_substitute_power_invalid_index(self):
        with pytest.raises(ValueError, match="invalid Adams index"):
            RatFunc(Q).substitute_power(0)

    def test_substitution_is_homomorphism(self):
        rng = random.Random(7)
        for _ in range(200):
            f, g = random_ratfunc(rng), random_ratfunc(rng)
            m = rng.randint(1, 4)
            assert (f * g).substitute_power(m) == f.substitute_power(m) * g.substitute_power(m)
            assert (f + g).substitute_power(m) == f.substitute_power(m) + g.substitute_power(m)
            n = rng.randint(1, 3)
            assert f.substitute_power(m).substitute_power(n) == f.substitute_power(m * n)

    def test_field_axioms_random(self):
        rng = random.Random(99)
        for _ in range(200):
            a, b, c = (random_ratfunc(rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            assert (a * b) * c == a * (b * c)
            if not b.is_zero():
                assert a / b * b == a

    def test_evaluate(self):
        r = RatFunc(Q + 1, Q - 1)
        assert r.evaluate(3) == 2
        with pytest.raises(ZeroDivisionError):
            r.evaluate(1)

    def test_series_at_infinity_geometric(self):
        # 1/(q-1) = q^-1 + q^-2 + ...
        r = RatFunc(LaurentPoly.one(), Q - 1)
        series = r.series_at_infinity(-4)
        assert series == {-1: 1, -2: 1, -3: 1, -4: 1}

    def test_series_at_infinity_consistent_with_polynomials(self):
        rng = random.Random(11)
        for _ in range(100):
            num = random_laurent(rng)
            den = random_nonzero_laurent(rng)
            r = RatFunc(num, den)
            series = r.series_at_infinity(-6)
            # multiply the truncated expansion back by den: must match num
            # above the truncation noise floor
            prod = LaurentPoly(series) * r.den
            diff = prod - r.num
            assert diff.is_zero() or diff.max_exp() < -6 + r.den.max_exp()
