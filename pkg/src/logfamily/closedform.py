"""Exact closed form of f_n(a) = int_0^inf ln^(n-1)x / ((x-1)(x+a)) dx.

With b = ln a the integral is a polynomial in b divided by n(1+a):

    n(1+a) f_n(a) = (-1)^n n! [1 + (-1)^n] zeta(n)
                    + sum_j C(n,2j) (2^(2j) - 2) (-1)^(j-1) B_2j pi^(2j) b^(n-2j).

``P`` below is that numerator polynomial; ``h = P/n = (1+a) f_n(a)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List

from . import quadrature
from .bernoulli import bernoulli_number, binomial
from .exact import LogPoly, PiExpr, logpoly_eval
from .special import (
    inversion_poly,
    polylog_numeric,
    zeta_even_exact,
    zeta_numeric,
)

__all__ = [
    "ClosedForm",
    "normalized_poly",
    "h_poly",
    "f_closed_eval",
    "f_polylog_eval",
    "inversion_check",
    "emit",
    "FORMATS",
]

NORMALIZATIONS = ("P", "h")
FORMATS = ("text", "latex", "json")


@dataclass(frozen=True)
class ClosedForm:
    """``P`` satisfies P(ln a) = n(1+a) f_n(a); ``normalization`` picks P or h = P/n."""

    n: int
    P: LogPoly
    normalization: str = "P"

    def __post_init__(self) -> None:
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {NORMALIZATIONS}")

    @property
    def poly(self) -> LogPoly:
        return self.P if self.normalization == "P" else self.P / self.n


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def _check_a(a: float) -> None:
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")


@lru_cache(maxsize=None)
def _numerator_poly(n: int) -> LogPoly:
    coeffs: List[PiExpr] = [PiExpr()] * (n + 1)
    for j in range(n // 2 + 1):
        c = binomial(n, 2 * j) * (4**j - 2) * (-1) ** (j - 1) * bernoulli_number(2 * j)
        coeffs[n - 2 * j] = PiExpr.monomial(c, j)
    if n % 2 == 0:
        # 2 n! zeta(n), exact; odd n has no zeta contribution
        coeffs[0] = coeffs[0] + zeta_even_exact(n) * (2 * math.factorial(n))
    return LogPoly(coeffs)


def normalized_poly(n: int) -> ClosedForm:
    _check_n(n)
    return ClosedForm(n, _numerator_poly(n), "P")


def h_poly(n: int) -> ClosedForm:
    _check_n(n)
    return ClosedForm(n, _numerator_poly(n), "h")


def f_closed_eval(n: int, a: float) -> float:
    _check_n(n)
    _check_a(a)
    return logpoly_eval(_numerator_poly(n), math.log(a), math.pi) / (n * (1.0 + a))


def f_polylog_eval(n: int, a: float) -> float:
    """f_n(a) from zeta(n), Li_n(-a) and Li_n(-1/a) in floating point."""
    _check_n(n)
    _check_a(a)
    odd = n % 2 == 1
    zeta_part = 0.0 if odd else 2.0 * zeta_numeric(n)
    li_a = polylog_numeric(n, -a)
    li_inv = polylog_numeric(n, -1.0 / a)
    bracket = zeta_part - li_inv + (li_a if odd else -li_a)
    sign = -1.0 if odd else 1.0
    return sign * math.factorial(n - 1) / (1.0 + a) * bracket


def _polylog_independent(n: int, x: float) -> float:
    # |x| <= 1: series; x < -1: Li_n(x) = x/(n-1)! int_0^inf t^(n-1)/(e^t - x) dt
    if x >= -1.0:
        return polylog_numeric(n, x)
    a = -x
    res = quadrature.tanh_sinh(
        lambda t: math.exp((n - 1) * math.log(t) - t) / (1.0 + a * math.exp(-t)),
        0.0,
        math.inf,
        eps=1e-13,
    )
    return -a * res.value / math.factorial(n - 1)


def inversion_check(n: int, a: float) -> float:
    """|(-1)^(n-1) Li_n(-a) - Li_n(-1/a) - R_n(ln a)|.

    The left side never goes through the inversion formula: arguments
    beyond -1 are integrated numerically. R_n is the exact Bernoulli
    expansion from :func:`logfamily.special.inversion_poly`.
    """
    _check_n(n)
    _check_a(a)
    lhs_a = _polylog_independent(n, -a)
    lhs_inv = _polylog_independent(n, -1.0 / a)
    lhs = (lhs_a if n % 2 else -lhs_a) - lhs_inv
    rhs = logpoly_eval(inversion_poly(n), math.log(a), math.pi)
    return abs(lhs - rhs)


def _rat_text(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _pi_text(k: int) -> str:
    return f"pi^{2 * k}"


def _b_text(m: int) -> str:
    return "b" if m == 1 else f"b^{m}"


def _rat_latex(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"\\frac{{{r.numerator}}}{{{r.denominator}}}"


def _pi_latex(k: int) -> str:
    return f"\\pi^{{{2 * k}}}"


def _b_latex(m: int) -> str:
    return "\\ln a" if m == 1 else f"\\ln^{{{m}}} a"


def _monomial(r: Fraction, k: int, m: int, rat, pi, bpow, sep: str):
    toks = []
    if abs(r) != 1 or (k == 0 and m == 0):
        toks.append(rat(abs(r)))
    if k:
        toks.append(pi(k))
    if m:
        toks.append(bpow(m))
    return ("-" if r < 0 else "+", sep.join(toks))


def _join(pieces) -> str:
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _render(poly: LogPoly, rat, pi, bpow, sep: str) -> str:
    # signed monomials in descending powers of b
    pieces = []
    for m in range(poly.degree(), -1, -1):
        c = poly.coeff(m)
        if c.is_zero():
            continue
        if c.is_monomial() or m == 0:
            pieces.extend(_monomial(r, k, m, rat, pi, bpow, sep) for k, r in c.terms())
        else:
            inner = _join([_monomial(r, k, 0, rat, pi, bpow, sep) for k, r in c.terms()])
            pieces.append(("+", f"({inner}){sep}{bpow(m)}"))
    return _join(pieces)


def _json_terms(poly: LogPoly) -> List[List[int]]:
    terms = []
    for m in range(poly.degree(), -1, -1):
        for k, r in poly.coeff(m).terms():
            terms.append([k, m, r.numerator, r.denominator])
    return terms


def emit(form: ClosedForm, format: str = "text") -> str:
    """Canonical rendering of a closed form.

    text:  ``b^4 + 2 pi^2 b^2 + pi^4``; the h normalization prints as ``(P)/n``.
    latex: powers of ``\\ln a`` and ``\\pi^{2k}``.
    json:  ``{"n", "normalization", "terms"}`` with each term
           ``[pi_power_over_2, b_power, num, den]``, descending b power.
    """
    if format == "json":
        return json.dumps(
            {"n": form.n, "normalization": form.normalization, "terms": _json_terms(form.poly)}
        )
    if format == "text":
        body = _render(form.P, _rat_text, _pi_text, _b_text, " ")
        return body if form.normalization == "P" else f"({body})/{form.n}"
    if format == "latex":
        body = _render(form.P, _rat_latex, _pi_latex, _b_latex, " ")
        if form.normalization == "P":
            return body
        return f"\\frac{{1}}{{{form.n}}}\\left({body}\\right)"
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
