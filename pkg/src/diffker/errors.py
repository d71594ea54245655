"""Exception types shared across the package."""

from __future__ import annotations


class DiffkerError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(DiffkerError, ValueError):
    def __init__(self, expected, got, what="monomial"):
        self.expected = expected
        self.got = got
        super().__init__(f"{what}: expected dimension {expected}, got {got}")


class ComparablePair(DiffkerError, ValueError):
    """Two entries of a would-be antichain are comparable under the product order."""

    def __init__(self, i: int, j: int, a=None, b=None):
        self.i = i
        self.j = j
        self.a = a
        self.b = b
        super().__init__(f"elements {i} and {j} are comparable: {a} <= {b}")


class LimitExceeded(DiffkerError):
    """A configured resource limit was hit."""


class ValueExceedsLimit(LimitExceeded):
    """An exact integer would exceed the configured bit-length cap.

    ``expr`` names the subexpression that overflowed; ``bits`` is a lower
    bound on its bit length when known.
    """

    def __init__(self, expr: str, bits=None, cap=None):
        self.expr = expr
        self.bits = bits
        self.cap = cap
        msg = f"{expr} exceeds the bit cap"
        if cap is not None:
            msg += f" of {cap} bits"
        if bits is not None:
            shown = bits if bits.bit_length() <= 64 else f"~2^{bits.bit_length() - 1}"
            msg += f" (needs at least {shown} bits)"
        super().__init__(msg)


class EnumerationLimit(LimitExceeded):
    def __init__(self, what: str, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(f"{what}: {count} elements exceeds enumeration limit {limit}")


class BudgetExceeded(LimitExceeded):
    """An oracle sweep or iterative loop ran past its explicit budget."""
