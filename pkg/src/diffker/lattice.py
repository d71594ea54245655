"""Monomials of N^m x {1..n}: the product order, the orderly order, LUBs and antichains.

A monomial is a plain tuple of nonnegative ints.  An indexed monomial pairs
one with a copy index in ``1..n``.  Everything here is meant for desk-scale
enumeration; the astronomically large numbers live in :mod:`diffker.bounds`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Sequence, Tuple

from . import limits
from .errors import ComparablePair, DimensionMismatch, EnumerationLimit

Monomial = Tuple[int, ...]


class IndexedMonomial(NamedTuple):
    xi: Monomial
    index: int = 1

    def __repr__(self):
        return f"({list(self.xi)}, {self.index})"


def monomial(entries) -> Monomial:
    xi = tuple(int(u) for u in entries)
    if not xi:
        raise ValueError("monomials need at least one entry")
    if any(u < 0 for u in xi):
        raise ValueError(f"negative entry in {xi}")
    return xi


def indexed(entries, index=1) -> IndexedMonomial:
    if index < 1:
        raise ValueError(f"copy index must be >= 1, got {index}")
    return IndexedMonomial(monomial(entries), int(index))


def _as_indexed(a) -> IndexedMonomial:
    if isinstance(a, IndexedMonomial):
        return a
    if len(a) == 2 and isinstance(a[1], int) and not isinstance(a[0], int):
        return indexed(a[0], a[1])
    return indexed(a, 1)


def _xi(a):
    return a.xi if isinstance(a, IndexedMonomial) else a


def _same_dim(x, y):
    if len(x) != len(y):
        raise DimensionMismatch(len(x), len(y))


def degree(a) -> int:
    """Total degree; the copy index is ignored."""
    return sum(_xi(a))


def leq_product(a, b) -> bool:
    """Product order: same copy and componentwise <=."""
    a, b = _as_indexed(a), _as_indexed(b)
    _same_dim(a.xi, b.xi)
    return a.index == b.index and all(u <= v for u, v in zip(a.xi, b.xi))


def leq_mono(x, y) -> bool:
    return all(u <= v for u, v in zip(x, y))


def orderly_key(a):
    """Sort key for the orderly order: (degree, index, u_1, ..., u_m) lexicographically."""
    if isinstance(a, IndexedMonomial):
        return (sum(a.xi), a.index) + a.xi
    return (sum(a), 1) + tuple(a)


def cmp_orderly(a, b) -> int:
    """Return -1, 0 or 1 as ``a`` is below, equal to or above ``b`` in the orderly order."""
    if isinstance(a, IndexedMonomial) or isinstance(b, IndexedMonomial):
        a, b = _as_indexed(a), _as_indexed(b)
        _same_dim(a.xi, b.xi)
    else:
        _same_dim(a, b)
    ka, kb = orderly_key(a), orderly_key(b)
    return (ka > kb) - (ka < kb)


def lub(x, t) -> Monomial:
    _same_dim(x, t)
    return tuple(max(u, v) for u, v in zip(x, t))


def degree_slice(m, d) -> list:
    """All monomials of degree ``d`` in ``m`` variables, largest first in the orderly order."""
    if m < 1 or d < 0:
        raise ValueError(f"need m >= 1 and d >= 0, got m={m}, d={d}")
    count = comb(m - 1 + d, d)
    limit = limits.enumeration_limit()
    if count > limit:
        raise EnumerationLimit(f"degree-{d} slice of N^{m}", count, limit)
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for u in range(left, -1, -1):
            rec(prefix + (u,), left - u, slots - 1)

    rec((), d, m)
    return out


def slice_size(m, d) -> int:
    return comb(m - 1 + d, d)


@dataclass(frozen=True)
class AntichainSequence:
    """A finite sequence of pairwise incomparable indexed monomials.

    Build through :func:`validate_antichain` (or :meth:`from_lists`), which
    checks incomparability; the raw constructor trusts its input.
    """

    elements: Tuple[IndexedMonomial, ...]
    m: int
    n: int = 1

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def max_degree(self) -> int:
        return max((degree(a) for a in self.elements), default=0)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "elements": [[list(a.xi), a.index] for a in self.elements],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "AntichainSequence":
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, list):
            return validate_antichain(data)
        return validate_antichain(data["elements"], m=data.get("m"), n=data.get("n"))

    @classmethod
    def from_lists(cls, monomials, index=1, m=None, n=None):
        return validate_antichain([indexed(x, index) for x in monomials], m=m, n=n)


def validate_antichain(elements, m=None, n=None) -> AntichainSequence:
    items = [_as_indexed(e) for e in elements]
    if m is None:
        m = len(items[0].xi) if items else 1
    for e in items:
        if len(e.xi) != m:
            raise DimensionMismatch(m, len(e.xi))
    top = max((e.index for e in items), default=1)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"copy index {top} exceeds n={n}")
    for i, j in itertools.combinations(range(len(items)), 2):
        a, b = items[i], items[j]
        if leq_product(a, b):
            raise ComparablePair(i, j, a, b)
        if leq_product(b, a):
            raise ComparablePair(j, i, b, a)
    return AntichainSequence(tuple(items), m, n)


def gamma(seq: Sequence) -> list:
    """LUBs of all distinct same-copy pairs, deduplicated and sorted by the orderly order."""
    elems = list(seq)
    found = set()
    for a, b in itertools.combinations(elems, 2):
        if a.index == b.index and a.xi != b.xi:
            found.add(IndexedMonomial(lub(a.xi, b.xi), a.index))
    return sorted(found, key=orderly_key)


def truncate(seq, p):
    """Elements of degree at most ``p``, order preserved."""
    if p < 0:
        raise ValueError("truncation degree must be nonnegative")
    kept = tuple(a for a in seq if degree(a) <= p)
    if isinstance(seq, AntichainSequence):
        return AntichainSequence(kept, seq.m, seq.n)
    return kept


def sort_orderly(items, reverse=False):
    return sorted(items, key=orderly_key, reverse=reverse)
