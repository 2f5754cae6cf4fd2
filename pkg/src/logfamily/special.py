"""Binary64 special functions: zeta, polylog on the negative axis, gamma,
digamma, Hurwitz zeta and the Dirichlet L-function of the character mod 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bernoulli import bernoulli_number, binomial
from .errors import PoleError, UnsupportedDomainError
from .exact import LogPoly, PiExpr, logpoly_eval

__all__ = [
    "NumericConfig",
    "DEFAULT_CONFIG",
    "zeta_even_exact",
    "zeta_numeric",
    "inversion_poly",
    "polylog_numeric",
    "gamma_numeric",
    "log_gamma_numeric",
    "digamma_numeric",
    "hurwitz_zeta_numeric",
    "hurwitz_zeta_s_derivative_at0",
    "dirichlet_L_numeric",
]


@dataclass(frozen=True)
class NumericConfig:
    target_eps: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self) -> None:
        if not 0 < self.target_eps < 1e-3:
            raise ValueError("target_eps must lie in (0, 1e-3)")
        if self.max_terms < 1000:
            raise ValueError("max_terms must be at least 1000")


DEFAULT_CONFIG = NumericConfig()


def _check_int(name: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{name} must be an integer, got {v!r}")
    return v


def zeta_even_exact(two_m: int) -> PiExpr:
    """zeta(2m) as an exact rational multiple of pi^(2m)."""
    _check_int("two_m", two_m)
    if two_m < 2 or two_m % 2:
        raise ValueError(f"zeta_even_exact needs an even argument >= 2, got {two_m}")
    m = two_m // 2
    c = (-1) ** (m + 1) * Fraction(2**two_m) * bernoulli_number(two_m) / (2 * math.factorial(two_m))
    return PiExpr.monomial(c, m)


# Euler-Maclaurin parameters for the Hurwitz zeta sum. Negative s uses a
# shorter direct sum: (k+q)^|s| grows fast and cancels against the tail.
_EM_SHIFT = 12
_EM_SHIFT_NEG = 6
_EM_TERMS = 8


@lru_cache(maxsize=None)
def _em_weights() -> tuple:
    return tuple(float(bernoulli_number(2 * k) / math.factorial(2 * k)) for k in range(1, _EM_TERMS + 1))


def _hurwitz_em(s: float, q: float) -> float:
    # direct sum, then Euler-Maclaurin tail from k = shift
    shift = _EM_SHIFT if s >= 0 else _EM_SHIFT_NEG
    total = math.fsum((k + q) ** -s for k in range(shift))
    x = shift + q
    tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x**-s
    rising = s  # s (s+1) ... (s+2k-2)
    xp = x ** (-s - 1.0)
    for k, w in enumerate(_em_weights(), start=1):
        tail += w * rising * xp
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        xp /= x * x
    return total + tail


def hurwitz_zeta_numeric(s: float, q: float) -> float:
    """Hurwitz zeta(s, q) for q in (0, 1], s >= -5, s != 1."""
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q}")
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if s < -5:
        raise UnsupportedDomainError(f"s = {s} is below the supported range s >= -5")
    return _hurwitz_em(float(s), float(q))


def zeta_numeric(n: int, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Riemann zeta(n) for integer n >= 2."""
    _check_int("n", n)
    if n < 2:
        raise ValueError(f"zeta_numeric needs n >= 2, got {n}")
    return _hurwitz_em(float(n), 1.0)


def hurwitz_zeta_s_derivative_at0(q: float, h: float = 1e-4) -> float:
    """d/ds zeta(s, q) at s = 0 by central difference."""
    return (hurwitz_zeta_numeric(h, q) - hurwitz_zeta_numeric(-h, q)) / (2 * h)


def dirichlet_L_numeric(s: float) -> float:
    """L(s) = 1 - 3^-s + 5^-s - ... via Hurwitz zeta at q = 1/4, 3/4."""
    if s == 1:
        return math.pi / 4
    if s < -5:
        raise UnsupportedDomainError(f"s = {s} is below the supported range s >= -5")
    return 4.0**-s * (hurwitz_zeta_numeric(s, 0.25) - hurwitz_zeta_numeric(s, 0.75))


@lru_cache(maxsize=None)
def inversion_poly(n: int) -> LogPoly:
    """R_n(b) with (-1)^(n-1) Li_n(-a) - Li_n(-1/a) = R_n(ln a).

    Real form of the Bernoulli-polynomial inversion:
    R_n(b) = (1/n!) sum_j C(n,2j) (2^(1-2j) - 1) B_2j (2 pi)^(2j) (-1)^(n+j) b^(n-2j).
    """
    _check_int("n", n)
    if n < 1:
        raise ValueError("inversion_poly needs n >= 1")
    coeffs = [PiExpr()] * (n + 1)
    for j in range(n // 2 + 1):
        c = (
            binomial(n, 2 * j)
            * (Fraction(2, 4**j) - 1)
            * bernoulli_number(2 * j)
            * 4**j
            * (-1) ** (n + j)
            / Fraction(math.factorial(n))
        )
        coeffs[n - 2 * j] = PiExpr.monomial(c, j)
    return LogPoly(coeffs)


# Cohen-Villegas-Zagier acceleration length; error ~ (3 + sqrt 8)^-N.
_CVZ_TERMS = 40


def _alternating_cvz(a) -> float:
    """sum_{k>=0} (-1)^k a(k) for a totally monotone sequence a."""
    n = _CVZ_TERMS
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * a(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def _polylog_series(n: int, x: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Li_n(x) by the defining power series, |x| <= 1."""
    if x == 0:
        return 0.0
    total = 0.0
    xk = 1.0
    for k in range(1, config.max_terms + 1):
        xk *= x
        term = xk / k**n
        total += term
        if abs(term) <= config.target_eps * 1e-3 * abs(total):
            return total
    return total


def polylog_numeric(n: int, x: float, config: NumericConfig = DEFAULT_CONFIG) -> float:
    """Li_n(x) for integer n >= 2 and real x <= 0.

    |x| <= 1/2 sums the power series; 1/2 < |x| <= 1 accelerates the
    alternating series; x < -1 uses the inversion through Li_n(1/x).
    """
    _check_int("n", n)
    if n < 2:
        raise ValueError(f"polylog_numeric needs n >= 2, got {n}")
    if x > 0:
        raise UnsupportedDomainError(f"polylog_numeric supports x <= 0 only, got {x}")
    if x == 0:
        return 0.0
    if x >= -0.5:
        return _polylog_series(n, x, config)
    if x >= -1.0:
        ax = -x
        return -_alternating_cvz(lambda k: ax ** (k + 1) / (k + 1) ** n)
    a = -x
    r = logpoly_eval(inversion_poly(n), math.log(a), math.pi)
    return (-1) ** (n - 1) * (r + polylog_numeric(n, -1.0 / a, config))


_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def log_gamma_numeric(x: float) -> float:
    """ln Gamma(x) for x > 0 (Lanczos, g = 7)."""
    if not x > 0:
        raise UnsupportedDomainError(f"log_gamma_numeric needs x > 0, got {x}")
    if x < 0.5:
        return log_gamma_numeric(x + 1.0) - math.log(x)
    z = x - 1.0
    s = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        s += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2 * math.pi) + (z + 0.5) * math.log(t) - t + math.log(s)


def gamma_numeric(x: float) -> float:
    """Gamma(x) for x > 0."""
    if not x > 0:
        raise UnsupportedDomainError(f"gamma_numeric needs x > 0, got {x}")
    if float(x).is_integer() and x <= 171:
        return float(math.factorial(int(x) - 1))
    if x < 0.5:
        return gamma_numeric(x + 1.0) / x
    z = x - 1.0
    s = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        s += _LANCZOS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    if x > 140:
        return math.exp(log_gamma_numeric(x))
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * math.exp(-t) * s


@lru_cache(maxsize=None)
def _digamma_weights() -> tuple:
    return tuple(float(bernoulli_number(2 * k)) / (2 * k) for k in range(1, 8))


def digamma_numeric(x: float) -> float:
    """psi(x) = Gamma'(x)/Gamma(x) for x > 0."""
    if not x > 0:
        raise UnsupportedDomainError(f"digamma_numeric needs x > 0, got {x}")
    shift = 0.0
    while x < 12.0:
        shift += 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    p = inv2
    for w in _digamma_weights():
        tail += w * p
        p *= inv2
    return math.log(x) - 0.5 / x - tail - shift
