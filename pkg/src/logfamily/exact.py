"""Exact arithmetic: rationals, the pi^2-graded constant ring, polynomials in b = ln a.

Rationals are :class:`fractions.Fraction`. A :class:`PiExpr` is a finite
sum ``sum_k c_k * pi^(2k)`` with rational ``c_k``; a :class:`LogPoly` is a
dense polynomial in ``b`` whose coefficients are ``PiExpr``. All values are
immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

__all__ = ["Rational", "rat_make", "PiExpr", "LogPoly", "piexpr_op", "logpoly_eval"]

Rational = Fraction
Scalar = Union[int, Fraction]


def rat_make(p: int, q: int = 1) -> Fraction:
    """Normalized fraction p/q; the sign is carried by the numerator."""
    if q == 0:
        raise ValueError("denominator must be nonzero")
    return Fraction(p, q)


class PiExpr:
    """Polynomial in pi^2 with rational coefficients.

    ``PiExpr({1: Fraction(1, 6)})`` is pi^2/6. Zero coefficients are never
    stored, so structural equality is ring equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        terms: Dict[int, Fraction] = {}
        for k, c in (coeffs or {}).items():
            if k < 0:
                raise ValueError("pi^2 power must be non-negative")
            c = Fraction(c)
            if c:
                terms[k] = terms.get(k, Fraction(0)) + c
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(
            sorted((k, c) for k, c in terms.items() if c)
        )

    @classmethod
    def const(cls, c: Scalar) -> "PiExpr":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "PiExpr":
        """``c * pi^(2k)``."""
        return cls({k: c})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        """``(k, c)`` pairs sorted by ascending power of pi^2."""
        return self._terms

    def coeff(self, k: int) -> Fraction:
        return dict(self._terms).get(k, Fraction(0))

    def degree(self) -> int:
        """Highest power of pi^2; -1 for zero."""
        return self._terms[-1][0] if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiExpr.const(other)
        if not isinstance(other, PiExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "PiExpr | Scalar") -> "PiExpr":
        other = _as_piexpr(other)
        out = dict(self._terms)
        for k, c in other._terms:
            out[k] = out.get(k, Fraction(0)) + c
        return PiExpr(out)

    __radd__ = __add__

    def __neg__(self) -> "PiExpr":
        return PiExpr({k: -c for k, c in self._terms})

    def __sub__(self, other: "PiExpr | Scalar") -> "PiExpr":
        return self + (-_as_piexpr(other))

    def __rsub__(self, other: Scalar) -> "PiExpr":
        return _as_piexpr(other) - self

    def __mul__(self, other: "PiExpr | Scalar") -> "PiExpr":
        if isinstance(other, (int, Fraction)):
            return PiExpr({k: c * other for k, c in self._terms})
        if not isinstance(other, PiExpr):
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                out[k1 + k2] = out.get(k1 + k2, Fraction(0)) + c1 * c2
        return PiExpr(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "PiExpr":
        return self * (Fraction(1) / Fraction(other))

    def to_float(self, pi_value: float) -> float:
        pi2 = pi_value * pi_value
        return sum(float(c) * pi2**k for k, c in self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "PiExpr(0)"
        return "PiExpr(" + " + ".join(f"{c}*pi^{2 * k}" for k, c in self._terms) + ")"


def _as_piexpr(x: "PiExpr | Scalar") -> PiExpr:
    if isinstance(x, PiExpr):
        return x
    if isinstance(x, (int, Fraction)):
        return PiExpr.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to PiExpr")


def piexpr_op(kind: str, x: PiExpr, y: PiExpr | None = None) -> PiExpr | bool:
    """Dispatch ``add``, ``mul``, ``neg`` or ``eq`` on PiExpr operands."""
    if kind == "neg":
        return -x
    if y is None:
        raise ValueError(f"{kind} needs two operands")
    if kind == "add":
        return x + y
    if kind == "mul":
        return x * y
    if kind == "eq":
        return x == y
    raise ValueError(f"unknown PiExpr operation {kind!r}")


class LogPoly:
    """Dense polynomial in b with PiExpr coefficients (index = power of b)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[PiExpr | Scalar] = ()):
        cs = [_as_piexpr(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs: Tuple[PiExpr, ...] = tuple(cs)

    @classmethod
    def b_power(cls, m: int, coeff: PiExpr | Scalar = 1) -> "LogPoly":
        return cls([PiExpr()] * m + [_as_piexpr(coeff)])

    @property
    def coeffs(self) -> Tuple[PiExpr, ...]:
        return self._coeffs

    def coeff(self, m: int) -> PiExpr:
        return self._coeffs[m] if 0 <= m < len(self._coeffs) else PiExpr()

    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "LogPoly") -> "LogPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return LogPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> "LogPoly":
        return LogPoly(-c for c in self._coeffs)

    def __sub__(self, other: "LogPoly") -> "LogPoly":
        return self + (-other)

    def __mul__(self, other: "LogPoly | PiExpr | Scalar") -> "LogPoly":
        if isinstance(other, (int, Fraction, PiExpr)):
            return LogPoly(c * other for c in self._coeffs)
        if not isinstance(other, LogPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LogPoly()
        out = [PiExpr()] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            for j, y in enumerate(other._coeffs):
                out[i + j] = out[i + j] + x * y
        return LogPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "LogPoly":
        inv = Fraction(1) / Fraction(other)
        return LogPoly(c * inv for c in self._coeffs)

    def __pow__(self, e: int) -> "LogPoly":
        out = LogPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def reflect(self) -> "LogPoly":
        """The polynomial P(-b)."""
        return LogPoly(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def __call__(self, b: float, pi_value: float) -> float:
        return logpoly_eval(self, b, pi_value)

    def __repr__(self) -> str:
        return f"LogPoly({list(self._coeffs)!r})"


def logpoly_eval(P: LogPoly, b: float, pi_value: float) -> float:
    """Horner evaluation of P at b with pi replaced by ``pi_value``."""
    acc = 0.0
    for c in reversed(P.coeffs):
        acc = acc * b + c.to_float(pi_value)
    return acc


def from_rationals(coeffs: Sequence[Scalar]) -> LogPoly:
    """LogPoly with pi-free rational coefficients (ascending powers)."""
    return LogPoly(PiExpr.const(c) for c in coeffs)
