"""Double-exponential quadrature and the integrals it checks.

Everything here integrates straight from the defining integrands; nothing
is borrowed from the closed-form or special-function modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Tuple

from .errors import ConvergenceError

__all__ = [
    "QuadResult",
    "tanh_sinh",
    "integrate_f",
    "integrate_f_pieces",
    "integrate_realline",
    "integrate_gr_4_229_4",
    "integrate_gr_4_229_7",
]

DEFAULT_EPS = 1e-10
DEFAULT_MAX_LEVEL = 12
_MIN_LEVEL = 3
_HALF_PI = 0.5 * math.pi
# t-range of the transformed trapezoid sum
_T_FINITE = 6.5
_T_INF_LOW = 6.5
_T_INF_HIGH = 4.5
# floor on the error estimate, relative to the integral of |f|
_ROUNDING = 64 * 2.220446049250313e-16

# Removable-singularity guard radius around x = 1 (and t = 0).
_SERIES_RADIUS = 1e-4


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    levels_used: int

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.err_estimate + other.err_estimate,
            max(self.levels_used, other.levels_used),
        )


def _finite_nodes(lo: float, hi: float, h: float, odd_only: bool) -> Iterator[Tuple[float, float]]:
    half = 0.5 * (hi - lo)
    kmax = int(math.ceil(_T_FINITE / h))
    step = 2 if odd_only else 1
    start = 1 if odd_only else 0
    for k in range(start, kmax + 1, step):
        t = k * h
        s = _HALF_PI * math.sinh(t)
        e = math.exp(-2.0 * s)
        d = half * 2.0 * e / (1.0 + e)  # distance to the nearer endpoint
        if d == 0.0:
            break
        w = half * _HALF_PI * math.cosh(t) * 4.0 * e / (1.0 + e) ** 2
        if k == 0:
            yield lo + half, w
            continue
        # nodes that round onto an endpoint are dropped
        x = hi - d
        if x < hi:
            yield x, w
        x = lo + d
        if x > lo:
            yield x, w


def _semi_infinite_nodes(lo: float, h: float, odd_only: bool) -> Iterator[Tuple[float, float]]:
    step = 2 if odd_only else 1
    start_lo = -int(math.ceil(_T_INF_LOW / h))
    stop_hi = int(math.ceil(_T_INF_HIGH / h))
    if odd_only and start_lo % 2 == 0:
        start_lo += 1
    for k in range(start_lo, stop_hi + 1, step):
        t = k * h
        y = math.exp(_HALF_PI * math.sinh(t))
        if lo + y > lo:
            yield lo + y, _HALF_PI * math.cosh(t) * y


def tanh_sinh(
    integrand: Callable[[float], float],
    lo: float,
    hi: float,
    eps: float = DEFAULT_EPS,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> QuadResult:
    """Integrate over [lo, hi] by tanh-sinh, or exp-sinh when hi is +inf.

    The step halves each level; iteration stops once two successive levels
    differ by less than ``eps`` times the integral of |integrand|. Endpoint
    singularities (logarithmic or integrable power) need no special care,
    and the integrand is never called at an endpoint. Singular endpoints
    are resolved best at 0, where nodes can approach to within denormals.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if math.isinf(lo):
        raise ValueError("lower limit must be finite")
    if math.isinf(hi):
        nodes = lambda h, odd: _semi_infinite_nodes(lo, h, odd)  # noqa: E731
    else:
        nodes = lambda h, odd: _finite_nodes(lo, hi, h, odd)  # noqa: E731

    h = 1.0
    total = 0.0
    abs_total = 0.0
    for x, w in nodes(h, False):
        fx = integrand(x)
        total += w * fx
        abs_total += w * abs(fx)
    prev = total * h
    best = prev
    for level in range(1, max_level + 1):
        h *= 0.5
        for x, w in nodes(h, True):
            fx = integrand(x)
            total += w * fx
            abs_total += w * abs(fx)
        best = total * h
        scale = abs_total * h
        diff = abs(best - prev)
        if level >= _MIN_LEVEL and diff <= eps * scale:
            return QuadResult(best, max(diff, _ROUNDING * scale), level)
        prev = best
    raise ConvergenceError(
        f"no convergence after {max_level} levels",
        best=QuadResult(best, abs(best - prev), max_level),
    )


def _log_ratio(x: float) -> float:
    """ln(x)/(x - 1), continuous through x = 1."""
    d = x - 1.0
    if abs(d) < _SERIES_RADIUS:
        return 1.0 - d * (0.5 - d * (1.0 / 3.0 - d * (0.25 - d * 0.2)))
    return math.log(x) / d


def _t_ratio(t: float) -> float:
    """t/(1 - e^-t), continuous through t = 0."""
    if abs(t) < _SERIES_RADIUS:
        return 1.0 + t * (0.5 + t / 12.0)
    return t / -math.expm1(-t)


def _check_na(n: int, a: float) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if not a > 0:
        raise ValueError(f"a must be positive, got {a}")


def _log_power_over(x: float, n: int) -> float:
    """ln^(n-1)(x)/(x - 1) with the x = 1 singularity removed."""
    r = _log_ratio(x)
    return r * (r * (x - 1.0)) ** (n - 2)


def integrate_f_pieces(
    n: int, a: float, eps: float = DEFAULT_EPS, max_level: int = DEFAULT_MAX_LEVEL
) -> Tuple[QuadResult, QuadResult]:
    """The [0, 1] and the (1/x-mapped) [1, inf) contributions to f_n(a)."""
    _check_na(n, a)
    sign = -1.0 if n % 2 else 1.0
    inner = tanh_sinh(lambda x: _log_power_over(x, n) / (x + a), 0.0, 1.0, eps, max_level)
    outer = tanh_sinh(lambda x: sign * _log_power_over(x, n) / (1.0 + a * x), 0.0, 1.0, eps, max_level)
    return inner, outer


def integrate_f(n: int, a: float, eps: float = DEFAULT_EPS, max_level: int = DEFAULT_MAX_LEVEL) -> QuadResult:
    """f_n(a) = int_0^inf ln^(n-1)x / ((x-1)(x+a)) dx, folded onto [0, 1]."""
    _check_na(n, a)
    sign = -1.0 if n % 2 else 1.0

    def g(x: float) -> float:
        return _log_power_over(x, n) * (1.0 / (x + a) + sign / (1.0 + a * x))

    return tanh_sinh(g, 0.0, 1.0, eps, max_level)


def integrate_realline(
    n: int, a: float, eps: float = DEFAULT_EPS, max_level: int = DEFAULT_MAX_LEVEL
) -> QuadResult:
    """int_{-inf}^{inf} t^(n-1) / ((1 - e^-t)(a + e^t)) dt, split at t = 0."""
    _check_na(n, a)

    def pos(t: float) -> float:
        # t^(n-2) e^-t in log space; the rest is bounded
        return _t_ratio(t) * math.exp((n - 2) * math.log(t) - t) / (1.0 + a * math.exp(-t))

    def neg(s: float) -> float:
        # integrand at t = -s
        return _t_ratio(s) * math.exp((n - 2) * math.log(s) - s) / (a + math.exp(-s))

    right = tanh_sinh(pos, 0.0, math.inf, eps, max_level)
    left = tanh_sinh(neg, 0.0, math.inf, eps, max_level)
    if n % 2:
        left = QuadResult(-left.value, left.err_estimate, left.levels_used)
    return right + left


def integrate_gr_4_229_4(mu: float, eps: float = DEFAULT_EPS, max_level: int = DEFAULT_MAX_LEVEL) -> QuadResult:
    """int_0^1 ln(ln 1/x) ln^(mu-1)(1/x) dx, as int_0^inf ln v v^(mu-1) e^-v dv."""
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")

    def g(v: float) -> float:
        lv = math.log(v)
        return lv * math.exp((mu - 1.0) * lv - v)

    return tanh_sinh(g, 0.0, math.inf, eps, max_level)


def integrate_gr_4_229_7(eps: float = DEFAULT_EPS, max_level: int = DEFAULT_MAX_LEVEL) -> QuadResult:
    """int_{pi/4}^{pi/2} ln ln tan x dx, as int_0^inf ln u / (2 cosh u) du."""

    def g(u: float) -> float:
        e = math.exp(-u)
        return math.log(u) * e / (1.0 + e * e)

    return tanh_sinh(g, 0.0, math.inf, eps, max_level)
