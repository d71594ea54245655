"""Downstream bounds expressed through C(r, m, n)."""

from __future__ import annotations

from fractions import Fraction
from math import comb, log2

from .. import limits
from ..counts import Huge, checked, short
from ..errors import ValueExceedsLimit
from .cbound import c_bound, c_value
from .report import BoundReport, FormulaPath


def _int(v, expr):
    if isinstance(v, Huge):
        raise ValueExceedsLimit(expr, v.bit_length(), limits.bit_cap())
    return v


def checked_pow(base, e, expr):
    """base**e with the bit cap enforced before the power is formed."""
    if e < 0:
        raise ValueError("negative exponent")
    if base > 1 and e * log2(base) > limits.bit_cap():
        raise ValueExceedsLimit(expr, int(e * log2(base)), limits.bit_cap())
    return base ** e


def alpha(ell, m):
    """Number of monomials of degree <= ell in m variables: C(ell + m, m)."""
    if ell < 0:
        raise ValueError("alpha needs ell >= 0")
    ell = _int(ell, f"alpha_{short(ell)}")
    if m * ell.bit_length() > limits.bit_cap():
        raise ValueExceedsLimit(f"alpha_{short(ell)}", m * ell.bit_length(), limits.bit_cap())
    return comb(ell + m, m)


def char_set_order_bound(r, m, n=1) -> BoundReport:
    rep = c_bound(r, m, n)
    return BoundReport(rep.value, FormulaPath.CHAR_SET, {"C": rep.value})


def component_order_bound(r, m, n=1) -> BoundReport:
    c = _int(c_value(r, m, n), f"C({r},{m},{n})")
    cm = checked_pow(c, m, f"C({r},{m},{n})^{m}")
    return BoundReport(checked(n * cm), FormulaPath.COMPONENT_ORDER, {"C": c})


def nullstellensatz_T(r, m, n=1) -> BoundReport:
    """T = r + 1 when m = 1, otherwise C(r, m, n); with alpha_{T-1} and alpha_T."""
    T = r + 1 if m == 1 else _int(c_value(r, m, n), f"C({r},{m},{n})")
    inter = {"T": T, "alpha_T": alpha(T, m)}
    if T >= 1:
        inter["alpha_T-1"] = alpha(T - 1, m)
    notes = []
    if m > 1:
        notes.append("T is replaced by its upper bound C")
    notes.append("the Nullstellensatz degree bound itself carries an unspecified constant; only T and alpha are computed")
    return BoundReport(T, FormulaPath.NULLSTELLENSATZ, inter, notes)


def bezout_exponents(n, r, m, dim_v) -> BoundReport:
    """Exponents of deg V (the report value) and deg W (``intermediates["e_W"]``)
    in the Bezout-type degree bound.

    With a = alpha_{r-1}, d' = a * dim_v, T' = C(1, m, n*a) and
    k = d' * alpha_{T'-1}:
      e_V = a * alpha_{T'} * (m+1)^(k-1),   e_W = alpha_{T'-1} * ((m+1)^k - 1) / m.
    """
    if r < 1 or dim_v < 0 or n < 1 or m < 1:
        raise ValueError("need r >= 1, m >= 1, n >= 1, dim_v >= 0")
    a = alpha(r - 1, m)
    d1 = a * dim_v
    t1 = _int(c_value(1, m, n * a), f"C(1,{m},{n * a})")
    at = alpha(t1, m)
    at1 = alpha(t1 - 1, m)
    k = d1 * at1
    notes = []
    power = checked_pow(m + 1, k, f"({m}+1)^{k}")
    e_v = Fraction(a * at * power, m + 1)
    if e_v.denominator != 1:
        notes.append("e_V is not an integer at dim V = 0; reported as a fraction")
    num = at1 * (power - 1)
    if num % m:
        raise AssertionError("(m+1)^k - 1 must be divisible by m")
    e_w = num // m
    inter = {"alpha_r-1": a, "d'": d1, "T'": t1, "alpha_T'": at, "alpha_T'-1": at1, "e_W": e_w}
    value = e_v.numerator if e_v.denominator == 1 else e_v
    return BoundReport(value, FormulaPath.BEZOUT, inter, notes)
