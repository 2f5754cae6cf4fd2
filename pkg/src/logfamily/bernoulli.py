"""Exact Bernoulli numbers and polynomials.

Convention B_1 = -1/2, i.e. B_m = B_m(0). Numbers come from the recurrence
``sum_{j=0}^{m} C(m+1, j) B_j = 0`` and are memoized.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import List

__all__ = [
    "MAX_SUPPORTED",
    "BernoulliCache",
    "binomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_at_half",
    "poly_eval",
]

# CLI validation bound only; arbitrary precision has no overflow.
MAX_SUPPORTED = 256


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    if k > n:
        raise ValueError(f"binomial({n}, {k}): k exceeds n")
    return comb(n, k)


class BernoulliCache:
    """Growable table of B_0, B_1, ... guarded by a lock."""

    def __init__(self) -> None:
        self._memo: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def get(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("Bernoulli index must be non-negative")
        if m < len(self._memo):
            return self._memo[m]
        with self._lock:
            memo = self._memo
            for k in range(len(memo), m + 1):
                if k >= 3 and k % 2 == 1:
                    memo.append(Fraction(0))
                    continue
                s = sum(comb(k + 1, j) * memo[j] for j in range(k))
                memo.append(-s / (k + 1))
            return memo[m]


_CACHE = BernoulliCache()


def bernoulli_number(m: int) -> Fraction:
    """Exact B_m (B_1 = -1/2)."""
    return _CACHE.get(m)


def bernoulli_polynomial(n: int) -> List[Fraction]:
    """Coefficients of B_n(x) in ascending powers of x (length n + 1).

    Uses ``B_n(x) = sum_j C(n, j) B_j x^(n-j)``.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = comb(n, j) * bernoulli_number(j)
    return coeffs


def bernoulli_at_half(n: int) -> Fraction:
    """B_n(1/2): zero for odd n, (2^(1-n) - 1) B_n for even n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n % 2:
        return Fraction(0)
    return (Fraction(2, 2**n) - 1) * bernoulli_number(n)


def poly_eval(coeffs: List[Fraction], x: Fraction) -> Fraction:
    """Exact Horner evaluation of an ascending coefficient list."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
