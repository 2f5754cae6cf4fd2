"""Exact evaluation of the logarithmic integrals

    f_n(a) = int_0^inf ln^(n-1)x / ((x-1)(x+a)) dx,   n >= 2, a > 0,

with independent numerical checks against quadrature and table entries.
"""

from .bernoulli import bernoulli_at_half, bernoulli_number, bernoulli_polynomial, binomial
from .closedform import (
    ClosedForm,
    emit,
    f_closed_eval,
    f_polylog_eval,
    h_poly,
    inversion_check,
    normalized_poly,
)
from .corpus import GrEntry, Report, corpus, verify_entry
from .errors import ConvergenceError, PoleError, UnknownEntryError, UnsupportedDomainError
from .exact import LogPoly, PiExpr, logpoly_eval, rat_make
from .quadrature import QuadResult, integrate_f, integrate_realline, tanh_sinh

__version__ = "0.1.0"
