"""Truncated power series: arithmetic, exp and log."""

import random
from fractions import Fraction

import pytest

from kacdepth import LaurentPoly, RatFunc, TSeries

from helpers import random_series

Q = LaurentPoly.q()


def t_series(nvars, bound, terms):
    return TSeries(nvars, bound, terms)


class TestBasics:
    def test_truncation_drops_terms(self):
        s = t_series(1, (2,), {(1,): 1})
        assert (s * s * s).is_zero()

    def test_mixed_bounds_rejected(self):
        a = t_series(1, (2,), {(1,): 1})
        b = t_series(1, (3,), {(1,): 1})
        with pytest.raises(ValueError):
            a + b

    def test_mul_componentwise_bound(self):
        s = t_series(2, (1, 2), {(1, 0): 1, (0, 1): 1})
        sq = s * s
        assert sq.coefficient((1, 1)) == RatFunc(2)
        assert sq.coefficient((0, 2)) == RatFunc.one()
        assert sq.coefficient((2, 0)).is_zero()


class TestExpLog:
    def test_exp_zero(self):
        z = TSeries.zero(1, (3,))
        assert z.exp() == TSeries.one(1, (3,))

    def test_exp_of_t(self):
        s = t_series(1, (3,), {(1,): 1})
        e = s.exp()
        assert e.coefficient((0,)) == RatFunc.one()
        assert e.coefficient((1,)) == RatFunc.one()
        assert e.coefficient((2,)) == RatFunc(Fraction(1, 2))
        assert e.coefficient((3,)) == RatFunc(Fraction(1, 6))

    def test_exp_of_qt(self):
        s = t_series(1, (2,), {(1,): RatFunc(Q)})
        e = s.exp()
        assert e.coefficient((1,)) == RatFunc(Q)
        assert e.coefficient((2,)) == RatFunc(Q**2) * Fraction(1, 2)

    def test_exp_requires_zero_constant(self):
        s = t_series(1, (2,), {(0,): 1})
        with pytest.raises(ValueError, match="augmentation-ideal"):
            s.exp()

    def test_log_of_one(self):
        assert TSeries.one(1, (3,)).log().is_zero()

    def test_log_geometric(self):
        s = t_series(1, (3,), {(0,): 1, (1,): 1, (2,): 1, (3,): 1})
        lg = s.log()
        assert lg.coefficient((1,)) == RatFunc.one()
        assert lg.coefficient((2,)) == RatFunc(Fraction(1, 2))
        assert lg.coefficient((3,)) == RatFunc(Fraction(1, 3))

    def test_log_requires_unit_constant(self):
        with pytest.raises(ValueError, match="unit constant term"):
            TSeries.zero(1, (2,)).log()

    def test_round_trip_example(self):
        s = t_series(1, (3,), {(1,): RatFunc(Q), (2,): 1})
        assert s.exp().log() == s

    def test_round_trip_random(self):
        rng = random.Random(5)
        for _ in range(150):
            s = random_series(rng, 2, (2, 2))
            assert s.exp().log() == s
            assert (s.exp()).log().exp() == s.exp()

    def test_exp_additive_to_multiplicative(self):
        rng = random.Random(17)
        for _ in range(100):
            a = random_series(rng, 2, (2, 2))
            b = random_series(rng, 2, (2, 2))
            assert (a + b).exp() == a.exp() * b.exp()


def test_json_shape():
    s = t_series(2, (1, 1), {(1, 0): RatFunc(Q, Q - 1)})
    data = s.to_json()
    assert data == [[[1, 0], {"num": [[1, "1", "1"]], "den": [[0, "-1", "1"], [1, "1", "1"]]}]]
