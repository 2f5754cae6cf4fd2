from fractions import Fraction
import json
import math

import mpmath
import pytest

from logfamily.closedform import (
    ClosedForm,
    emit,
    f_closed_eval,
    f_polylog_eval,
    h_poly,
    inversion_check,
    normalized_poly,
)
from logfamily.exact import LogPoly, PiExpr

B = LogPoly.b_power(1)


def sq(c=1, k=1):
    """c b^2 + k pi^2"""
    return LogPoly([PiExpr.monomial(k, 1), 0, c])


# Table forms of h_n = (1+a) f_n(a), written as factored products.
TABLE_H = {
    2: sq() / 2,
    3: B * sq() / 3,
    4: sq() * sq() / 4,
    5: B * sq() * sq(3, 7) / 15,
    6: sq() * sq() * sq(1, 3) / 6,
}


def mp_f(n, a):
    """f_n(a) straight from the definition with mpmath quadrature."""
    with mpmath.workdps(30):
        g = lambda x: mpmath.log(x) ** (n - 1) / ((x - 1) * (x + a))  # noqa: E731
        return float(mpmath.quad(g, [0, 0.5, 1, 2, mpmath.inf]))


def test_normalized_poly_examples():
    pi2, pi4 = PiExpr.monomial(1, 1), PiExpr.monomial(1, 2)
    assert normalized_poly(2).P == LogPoly([pi2, 0, 1])
    assert normalized_poly(3).P == LogPoly([0, pi2, 0, 1])
    assert normalized_poly(5).P == LogPoly([0, pi4 * Fraction(7, 3), 0, pi2 * Fraction(10, 3), 0, 1])


@pytest.mark.parametrize("n", sorted(TABLE_H))
def test_h_poly_matches_table(n):
    assert h_poly(n).poly == TABLE_H[n]
    assert h_poly(n).poly * n == normalized_poly(n).P


def test_bad_n():
    for bad in (1, 0, 2.0, True):
        with pytest.raises(ValueError):
            normalized_poly(bad)
        with pytest.raises(ValueError):
            h_poly(bad)


def test_closed_form_structure():
    for n in range(2, 30):
        P = normalized_poly(n).P
        assert P.degree() == n
        for m, c in enumerate(P.coeffs):
            if (n - m) % 2:
                assert c.is_zero()
            else:
                assert c.terms() and c.is_monomial() and c.terms()[0][0] == (n - m) // 2


def test_f_closed_examples():
    assert math.isclose(f_closed_eval(2, 1.0), math.pi**2 / 4, rel_tol=1e-15)
    assert f_closed_eval(3, 1.0) == 0.0
    ref = (math.pi**2 + math.log(10) ** 2) ** 2 / 44
    assert math.isclose(f_closed_eval(4, 10.0), ref, rel_tol=1e-14)
    assert math.isclose(f_closed_eval(4, 10.0), 5.231238374056971, rel_tol=1e-12)
    with pytest.raises(ValueError):
        f_closed_eval(2, 0.0)


def test_f_polylog_examples():
    assert math.isclose(f_polylog_eval(2, 1.0), 2.4674011002723395, rel_tol=1e-12)
    assert f_polylog_eval(5, 1.0) == 0.0
    e = math.e
    assert math.isclose(f_polylog_eval(3, e), (math.pi**2 + 1) / (3 * (1 + e)), rel_tol=1e-12)
    assert abs(f_polylog_eval(3, e) - 0.9744289524528421) < 1e-12
    with pytest.raises(ValueError):
        f_polylog_eval(3, -1.0)


@pytest.mark.parametrize("n, a", [(2, 0.5), (4, 3.0), (5, 0.2), (7, 0.3), (8, 40.0)])
def test_closed_form_against_mpmath_quadrature(n, a):
    assert math.isclose(f_closed_eval(n, a), mp_f(n, a), rel_tol=1e-12)


def test_reflection_symmetry():
    for n in range(2, 21):
        P = normalized_poly(n).P
        assert P.reflect() == P * (-1) ** n
    for n in range(2, 9):
        for a in (0.1, 0.5, 2.0, 10.0):
            lhs = (1 + 1 / a) * f_closed_eval(n, 1 / a)
            rhs = (-1) ** n * (1 + a) * f_closed_eval(n, a)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_coefficients_positive():
    for n in range(2, 51):
        for c in h_poly(n).poly.coeffs:
            assert all(r > 0 for _, r in c.terms())


def test_odd_n_has_no_constant_term():
    for n in range(3, 20, 2):
        assert normalized_poly(n).P.coeff(0).is_zero()


def test_inversion_check_examples():
    assert inversion_check(2, 1.0) <= 1e-12
    assert inversion_check(3, 1.0) == 0.0
    assert inversion_check(4, 7.0) <= 1e-10
    with pytest.raises(ValueError):
        inversion_check(4, 0.0)


def test_emit_text():
    assert emit(h_poly(2), "text") == "(b^2 + pi^2)/2"
    assert emit(normalized_poly(3), "text") == "b^3 + pi^2 b"
    assert emit(normalized_poly(5)) == "b^5 + 10/3 pi^2 b^3 + 7/3 pi^4 b"
    assert emit(h_poly(4)) == "(b^4 + 2 pi^2 b^2 + pi^4)/4"


def test_emit_text_general_coefficients():
    form = ClosedForm(2, LogPoly([PiExpr({0: 1, 1: -2}), PiExpr({0: Fraction(-1, 2)}), PiExpr({0: 3, 2: 1})]))
    assert emit(form) == "(3 + pi^4) b^2 - 1/2 b + 1 - 2 pi^2"


def test_emit_latex():
    assert emit(normalized_poly(3), "latex") == r"\ln^{3} a + \pi^{2} \ln a"
    assert emit(h_poly(5), "latex") == (
        r"\frac{1}{5}\left(\ln^{5} a + \frac{10}{3} \pi^{2} \ln^{3} a + \frac{7}{3} \pi^{4} \ln a\right)"
    )


def test_emit_json():
    doc = json.loads(emit(h_poly(2), "json"))
    assert doc == {"n": 2, "normalization": "h", "terms": [[0, 2, 1, 2], [1, 0, 1, 2]]}
    doc = json.loads(emit(normalized_poly(4), "json"))
    assert doc["normalization"] == "P"
    assert doc["terms"] == [[0, 4, 1, 1], [1, 2, 2, 1], [2, 0, 1, 1]]
    b_powers = [t[1] for t in doc["terms"]]
    assert b_powers == sorted(b_powers, reverse=True)


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit(h_poly(2), "html")


def test_emit_deterministic():
    assert emit(h_poly(9), "json") == emit(h_poly(9), "json")
