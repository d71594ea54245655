"""Binomial representations and the Macaulay growth operators.

``upper_shadow(a, d)`` is the classical bound on how far a Hilbert function
value ``a`` in degree ``d`` can grow in degree ``d+1``.  ``macaulay_growth``
is the complementary operator: the size of the upper shadow of the ``a``
largest degree-``d`` monomials.  It is computed from ``upper_shadow`` through
the complement identity, so it never enumerates anything; the enumerated
version is kept as :func:`enumerated_growth` for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Tuple

from .lattice import degree, degree_slice, leq_mono, slice_size


def binomial(n, k) -> int:
    """Exact C(n, k); zero when k > n or k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class BinomialRep:
    """``a = C(ks[0], d) + C(ks[1], d-1) + ...`` with ks strictly decreasing."""

    d: int
    ks: Tuple[int, ...]

    @property
    def j(self):
        return self.d - len(self.ks) + 1

    def terms(self):
        return [(k, self.d - t) for t, k in enumerate(self.ks)]

    def value(self) -> int:
        return sum(comb(k, i) for k, i in self.terms())


def _largest_k(a, d):
    """Largest k >= d with C(k, d) <= a (requires a >= 1)."""
    lo = d
    step = 1
    hi = lo + step
    while comb(hi, d) <= a:
        lo = hi
        step *= 2
        hi = lo + step
    # comb(lo, d) <= a < comb(hi, d)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, d) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def d_binomial_rep(a, d) -> BinomialRep:
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if a < 1:
        raise ValueError("the d-binomial representation needs a >= 1")
    ks = []
    rest = a
    i = d
    while rest > 0:
        k = _largest_k(rest, i)
        ks.append(k)
        rest -= comb(k, i)
        i -= 1
    return BinomialRep(d, tuple(ks))


def upper_shadow(a, d) -> int:
    """a^<d>: shift every term of the d-binomial representation up by one."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if a == 0:
        return 0
    return sum(comb(k + 1, i + 1) for k, i in d_binomial_rep(a, d).terms())


def admissible_degree(a, m) -> int:
    """Smallest d >= 1 whose degree-d slice of N^m holds at least ``a`` monomials."""
    if m == 1:
        if a > 1:
            raise ValueError(f"N^1 slices have one element; a={a} has no admissible degree")
        return 1
    lo = 1
    if slice_size(m, lo) >= a:
        return lo
    hi = 2
    while slice_size(m, hi) < a:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if slice_size(m, mid) >= a:
            hi = mid
        else:
            lo = mid
    return hi


def macaulay_growth(a, m, d=None) -> int:
    """a^(m): number of degree-(d+1) monomials above the ``a`` largest of degree ``d``.

    Any degree with at least ``a`` monomials gives the same answer; when ``d``
    is omitted the smallest such degree is used.
    """
    if a < 0:
        raise ValueError("a must be nonnegative")
    if d is None:
        d = admissible_degree(a, m)
    elif d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    size = slice_size(m, d)
    if a > size:
        raise ValueError(f"a={a} exceeds the {size} monomials of degree {d} in N^{m}")
    return binomial(m + d, d + 1) - upper_shadow(size - a, d)


def segment(a, d, m) -> list:
    """The ``a`` largest degree-``d`` monomials of N^m in the orderly order."""
    size = slice_size(m, d)
    if a < 0 or a > size:
        raise ValueError(f"segment size {a} outside 0..{size}")
    if a == 0:
        return []
    return degree_slice(m, d)[:a]


def shift_up(M) -> set:
    """All monomials x + e_k for x in M."""
    out = set()
    for x in M:
        for k in range(len(x)):
            out.add(x[:k] + (x[k] + 1,) + x[k + 1:])
    return out


def enumerated_growth(a, m, d) -> int:
    """a^(m) counted directly as the size of the shifted segment."""
    return len(shift_up(segment(a, d, m)))


def is_compressed(M) -> bool:
    """Whenever x is in M, every larger monomial of the same degree lies above some member of M."""
    M = set(M)
    if not M:
        return True
    m = len(next(iter(M)))
    by_degree = {}
    for x in M:
        by_degree.setdefault(degree(x), []).append(x)
    for d, xs in by_degree.items():
        lowest = min(xs)
        for eta in degree_slice(m, d):
            if eta <= lowest:
                break
            if not any(leq_mono(z, eta) for z in M):
                return False
    return True


def is_d_segment(M, d) -> bool:
    M = set(M)
    if not M:
        return True
    if any(degree(x) != d for x in M):
        return False
    m = len(next(iter(M)))
    top = degree_slice(m, d)[: len(M)]
    return set(top) == M
