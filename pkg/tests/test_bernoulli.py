from fractions import Fraction
import threading

import pytest
from hypothesis import given, settings, strategies as st

from logfamily.bernoulli import (
    BernoulliCache,
    bernoulli_at_half,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    poly_eval,
)
from oracles import akiyama_tanigawa, pascal_binomial

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=12)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert all(binomial(n, 0) == 1 for n in range(20))
    assert binomial(52, 26) == pascal_binomial(52, 26) == 495918532948104


def test_binomial_k_exceeds_n():
    with pytest.raises(ValueError):
        binomial(3, 4)


@pytest.mark.parametrize("m, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)), (2, Fraction(1, 6)), (4, Fraction(-1, 30)), (5, Fraction(0)), (6, Fraction(1, 42))])
def test_bernoulli_number_examples(m, expected):
    assert bernoulli_number(m) == expected


def test_bernoulli_numbers_match_independent_algorithm():
    assert [bernoulli_number(m) for m in range(61)] == akiyama_tanigawa(60)


def test_bernoulli_numbers_satisfy_recurrence():
    for m in range(1, 80):
        assert sum(binomial(m + 1, j) * bernoulli_number(j) for j in range(m + 1)) == 0


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(0) == [1]
    assert bernoulli_polynomial(1) == [Fraction(-1, 2), 1]
    assert bernoulli_polynomial(2) == [Fraction(1, 6), -1, 1]


def test_bernoulli_at_half_examples():
    assert bernoulli_at_half(3) == 0
    assert bernoulli_at_half(2) == Fraction(-1, 12)
    assert bernoulli_at_half(0) == 1


def test_bernoulli_at_half_matches_polynomial():
    for n in range(31):
        assert bernoulli_at_half(n) == poly_eval(bernoulli_polynomial(n), Fraction(1, 2))


@settings(max_examples=40)
@given(small_rationals, small_rationals, st.integers(0, 12))
def test_addition_theorem(x, y, n):
    lhs = poly_eval(bernoulli_polynomial(n), x + y)
    rhs = sum(binomial(n, j) * poly_eval(bernoulli_polynomial(j), x) * y ** (n - j) for j in range(n + 1))
    assert lhs == rhs


@settings(max_examples=40)
@given(small_rationals, st.integers(0, 12))
def test_reflection(x, n):
    half = Fraction(1, 2)
    c = bernoulli_polynomial(n)
    assert poly_eval(c, half - x) == (-1) ** n * poly_eval(c, half + x)


@settings(max_examples=40)
@given(small_rationals, st.integers(1, 12))
def test_difference_equation(x, n):
    c = bernoulli_polynomial(n)
    assert poly_eval(c, x + 1) - poly_eval(c, x) == n * x ** (n - 1)


def test_even_bernoulli_sign_alternates():
    for j in range(1, 31):
        assert (-1) ** (j - 1) * bernoulli_number(2 * j) > 0


def test_cache_is_consistent_under_threads():
    cache = BernoulliCache()
    results = {}

    def work(m):
        results[m] = cache.get(m)

    threads = [threading.Thread(target=work, args=(m,)) for m in (40, 10, 64, 2, 33)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    ref = akiyama_tanigawa(64)
    assert all(results[m] == ref[m] for m in results)
    assert len(cache) == 65


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
