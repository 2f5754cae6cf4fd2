from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from logfamily.exact import LogPoly, PiExpr, logpoly_eval, piexpr_op, rat_make

PI2 = PiExpr.monomial(1, 1)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
piexprs = st.dictionaries(st.integers(0, 4), rationals, max_size=4).map(PiExpr)
logpolys = st.lists(piexprs, max_size=5).map(LogPoly)


@pytest.mark.parametrize(
    "p, q, expected",
    [(2, 4, (1, 2)), (-3, -6, (1, 2)), (0, 7, (0, 1)), (3, -9, (-1, 3))],
)
def test_rat_make_normalizes(p, q, expected):
    r = rat_make(p, q)
    assert (r.numerator, r.denominator) == expected
    assert r.denominator > 0
    assert math.gcd(r.numerator, r.denominator) == 1


def test_rat_make_zero_denominator():
    with pytest.raises(ValueError):
        rat_make(1, 0)


def test_piexpr_examples():
    assert piexpr_op("mul", PI2, PI2) == PiExpr.monomial(1, 2)
    assert piexpr_op("add", PiExpr({1: Fraction(1, 6)}), PiExpr({1: Fraction(1, 3)})) == PiExpr({1: Fraction(1, 2)})
    x = PiExpr({0: 3, 2: Fraction(-5, 7)})
    assert piexpr_op("eq", PiExpr(), piexpr_op("add", x, piexpr_op("neg", x))) is True


def test_piexpr_unknown_kind():
    with pytest.raises(ValueError):
        piexpr_op("pow", PI2, PI2)


def test_piexpr_drops_zero_coefficients():
    x = PiExpr({0: 0, 1: 2, 3: Fraction(0, 5)})
    assert x.terms() == ((1, Fraction(2)),)
    assert x.degree() == 1
    assert PiExpr({1: 1}) + PiExpr({1: -1}) == PiExpr()


@given(rationals, rationals, rationals)
def test_rational_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + (-x) == 0
    if x != 0:
        assert x * (1 / x) == 1


@given(piexprs, piexprs, piexprs)
def test_piexpr_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x + (-x)).is_zero()


@given(piexprs, piexprs)
def test_piexpr_degree_additive(x, y):
    if x and y:
        assert (x * y).degree() == x.degree() + y.degree()


@given(logpolys, logpolys, st.floats(-5, 5))
def test_logpoly_eval_linear(p, q, b):
    lhs = logpoly_eval(p + q, b, math.pi)
    rhs = logpoly_eval(p, b, math.pi) + logpoly_eval(q, b, math.pi)
    scale = sum(
        abs(c.to_float(math.pi)) * abs(b) ** i
        for poly in (p, q)
        for i, c in enumerate(poly.coeffs)
    )
    assert abs(lhs - rhs) <= 1e-13 * max(scale, 1e-300)


def test_logpoly_eval_examples():
    P = LogPoly([PI2, 0, 1])
    assert math.isclose(logpoly_eval(P, 0.0, math.pi), 9.869604401089358, rel_tol=1e-15)
    assert math.isclose(logpoly_eval(P, 1.0, math.pi), 10.869604401089358, rel_tol=1e-15)
    assert logpoly_eval(LogPoly(), 3.7, math.pi) == 0.0


def test_logpoly_trims_and_multiplies():
    s = LogPoly([PI2, 0, 1, PiExpr()])
    assert s.degree() == 2
    sq = s * s
    assert sq == LogPoly([PiExpr.monomial(1, 2), 0, 2 * PI2, 0, 1])
    assert s**2 == sq
    assert (sq / 4).coeff(2) == PiExpr.monomial(Fraction(1, 2), 1)
    assert LogPoly([0, 1, 0, 1]).reflect() == LogPoly([0, -1, 0, -1])
