"""Exact nonnegative counts under a bit-length cap.

Everything that can grow (Hilbert values, Ackermann values, bound values)
is a plain Python ``int``.  Two helpers police growth:

* :func:`checked` raises :class:`ValueExceedsLimit` once a value's bit length
  passes the cap;
* :func:`pow2` builds ``coeff * 2**e`` and refuses before allocating when the
  result would be too long.

Inside a :func:`diffker.limits.symbolic` block, :func:`pow2` instead returns a
:class:`Huge`, an exact value ``a * 2**e + b`` whose exponent is too large to
materialise.  Only the handful of operations needed to compare two such
values along different computation paths are supported.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import total_ordering

from . import limits
from .errors import ValueExceedsLimit


def short(value) -> str:
    """Readable form of a possibly enormous integer, for messages."""
    if isinstance(value, Huge):
        return value.describe()
    if not isinstance(value, int) or value.bit_length() <= 64:
        return str(value)
    return f"~2^{short(value.bit_length() - 1)}"


def checked(value, expr="value"):
    if isinstance(value, Huge):
        return value
    cap = limits.bit_cap()
    if value.bit_length() > cap:
        raise ValueExceedsLimit(expr, value.bit_length(), cap)
    return value


def pow2(e, coeff=1, expr=None):
    """Return ``coeff * 2**e`` exactly, honouring the bit cap."""
    if isinstance(e, Huge):
        raise ValueExceedsLimit(expr or "2^(huge)", None, limits.bit_cap())
    if e < 0:
        raise ValueError("negative exponent")
    cap = limits.bit_cap()
    bits = e + max(coeff.bit_length(), 1)
    if bits > cap:
        if limits.symbolic_enabled() and coeff > 0:
            return Huge(coeff, e, 0)
        raise ValueExceedsLimit(expr or f"2^{short(e)}", bits, cap)
    return coeff << e


def as_int(value, expr="value"):
    if isinstance(value, Huge):
        raise ValueExceedsLimit(expr, value.bit_length(), limits.bit_cap())
    return value


def to_decimal(value) -> str:
    if isinstance(value, Huge):
        return value.describe()
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else to_decimal(value.numerator)
    if hasattr(sys, "set_int_max_str_digits") and value.bit_length() > 13000:
        # the cap already bounds the size; lift the interpreter's guard rail
        sys.set_int_max_str_digits(0)
    return str(value)


@total_ordering
class Huge:
    """The exact positive integer ``a * 2**e + b`` with ``e`` beyond the bit cap.

    Normalised so that ``a`` is odd and ``|b| < 2**(e-1)``; under that
    normalisation equal values have equal triples.
    """

    __slots__ = ("a", "e", "b")

    def __init__(self, a, e, b=0):
        if a <= 0:
            raise ValueError("Huge needs a positive leading coefficient")
        while a % 2 == 0:
            a //= 2
            e += 1
        if b.bit_length() >= e - 1:
            raise ValueError("offset too large for the exponent")
        self.a, self.e, self.b = a, e, b

    def bit_length(self):
        return self.a.bit_length() + self.e

    def _make(self, a, b):
        return Huge(a, self.e, b)

    def __add__(self, other):
        if isinstance(other, int):
            return self._make(self.a, self.b + other)
        if isinstance(other, Huge) and other.e == self.e:
            return self._make(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self._make(self.a, self.b - other)
        return NotImplemented

    def __rsub__(self, other):
        raise ValueExceedsLimit("negative huge difference")

    def __mul__(self, other):
        if isinstance(other, int) and other > 0:
            return self._make(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def _key(self):
        return (self.a, self.e, self.b)

    def __eq__(self, other):
        if isinstance(other, Huge):
            return self._key() == other._key()
        if isinstance(other, int):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        if isinstance(other, int):
            return False
        if not isinstance(other, Huge):
            return NotImplemented
        if self.e == other.e:
            return (self.a, self.b) < (other.a, other.b)
        # sign of (hi.a * 2**shift - lo.a) * 2**lo.e + (hi.b - lo.b)
        lo, hi = (self, other) if self.e < other.e else (other, self)
        if abs(hi.b - lo.b).bit_length() >= lo.e:
            raise ValueExceedsLimit(f"comparison of {self.describe()} with {other.describe()}")
        shift = hi.e - lo.e
        if shift > lo.a.bit_length() + 1:
            hi_bigger = True
        else:
            hi_bigger = (hi.a << shift) > lo.a
        return hi_bigger if lo is self else not hi_bigger

    def __int__(self):
        raise ValueExceedsLimit(self.describe(), self.bit_length(), limits.bit_cap())

    def describe(self):
        s = f"{self.a}*2^{self.e}" if self.a != 1 else f"2^{self.e}"
        if self.b:
            s += f"{'+' if self.b > 0 else '-'}{abs(self.b)}"
        return s

    def __repr__(self):
        return f"Huge({self.describe()})"
