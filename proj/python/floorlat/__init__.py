"""Congruence counts in shifted floor sequences and lattice-point counts.

Shifts and offsets are exact: pass them as strings ("1/2", "0.25") or as
fractions.Fraction. Floats are refused wherever the result is an exact count.
"""

from fractions import Fraction

from . import _core
from ._core import (
    PreconditionError,
    c_seq,
    circle_count,
    digamma,
    divisor_count,
    divisor_count_mod,
    divisor_summatory,
    eisenstein_count,
    enumerate_form_count,
    f_seq,
    find_alpha0,
    parity_f,
    r2,
    r_seq,
    r_seq_round_down,
    rep_count_x2_2y2,
    rep_count_x2_xy_y2,
    run_cli,
    z_sqrt_minus2_count,
)

__all__ = [
    "PreconditionError",
    "c_seq",
    "canonical",
    "circle_count",
    "count",
    "count_rational_alpha",
    "digamma",
    "divisor_count",
    "divisor_count_mod",
    "divisor_summatory",
    "eisenstein_count",
    "enumerate_form_count",
    "f_seq",
    "find_alpha0",
    "parity_f",
    "r2",
    "r_seq",
    "r_seq_round_down",
    "rep_count_x2_2y2",
    "rep_count_x2_xy_y2",
    "run_cli",
    "sequence_terms",
    "slope",
    "slope_table",
    "threshold_count",
    "z_sqrt_minus2_count",
]


def _exact(value):
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact value expected, got {type(value).__name__}; use a string or Fraction")
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    return str(value)


def canonical(value):
    return _core.canonical(_exact(value))


def sequence_terms(n, alpha="0", nu="0"):
    return _core.sequence_terms(n, _exact(alpha), _exact(nu))


def count(n, r, m, alpha="0", nu="0", method="direct"):
    return _core.count(n, r, m, _exact(alpha), _exact(nu), method)


def count_rational_alpha(n, p, q, nu="0", m=2):
    return _core.count_rational_alpha(n, p, q, _exact(nu), m)


def threshold_count(n, k, alpha="0", nu="0"):
    return _core.threshold_count(n, k, _exact(alpha), _exact(nu))


def slope(alpha, r, m, method="quadrature"):
    # densities are floating point anyway, so a float shift is fine here
    text = str(Fraction(alpha)) if isinstance(alpha, float) else _exact(alpha)
    return _core.slope(text, r, m, method)


def slope_table(alpha, m_max):
    return _core.slope_table(_exact(alpha), m_max)
