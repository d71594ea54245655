"""Hilbert-Samuel counts of monomial sets and the connectivity test behind strict growth."""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet

from .lattice import Monomial, degree, degree_slice, leq_mono, lub, monomial, orderly_key, slice_size
from .macaulay import upper_shadow


@dataclass(frozen=True)
class StaircaseSet:
    generators: FrozenSet[Monomial]
    m: int

    @classmethod
    def of(cls, gens, m=None):
        gens = frozenset(monomial(g) for g in gens)
        if m is None:
            if not gens:
                raise ValueError("need m for an empty generator set")
            m = len(next(iter(gens)))
        for g in gens:
            if len(g) != m:
                raise ValueError(f"generator {g} is not in N^{m}")
        return cls(gens, m)

    def to_json(self):
        return {"m": self.m, "generators": [list(g) for g in sorted(self.generators, key=orderly_key)]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls.of(data["generators"], data["m"])


def _coerce(M, m=None):
    if isinstance(M, StaircaseSet):
        return M
    return StaircaseSet.of(M, m)


def _covered(x, gens):
    return any(leq_mono(g, x) for g in gens)


def hs(M, d, m=None) -> int:
    """H_M(d): degree-d monomials lying above no member of M."""
    M = _coerce(M, m)
    gens = [g for g in M.generators if degree(g) <= d]
    if not gens:
        return slice_size(M.m, d)
    return sum(1 for x in degree_slice(M.m, d) if not _covered(x, gens))


def s_fn(M, d, m=None) -> int:
    """S_M(d): degree-d monomials lying above some member of M."""
    M = _coerce(M, m)
    gens = [g for g in M.generators if degree(g) <= d]
    if not gens:
        return 0
    return sum(1 for x in degree_slice(M.m, d) if _covered(x, gens))


def hs_seq(seq, i, d) -> int:
    """H^i of an antichain sequence: the sum over copies of H for the first ``i`` elements."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    head = list(seq)[:i]
    total = 0
    for copy in range(1, seq.n + 1):
        gens = [a.xi for a in head if a.index == copy]
        total += hs(StaircaseSet(frozenset(gens), seq.m), d)
    return total


def _below(eta, tau):
    return eta != tau and leq_mono(eta, tau)


def _component(start, vertices, d):
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in vertices:
            if v not in seen and degree(lub(u, v)) <= d + 1:
                seen.add(v)
                queue.append(v)
    return seen


def tau_connected(x, z, tau, d, M, m=None) -> bool:
    """Whether x and z are joined by a chain in M of degree <= d, all strictly below tau,
    with consecutive LUBs of degree <= d + 1."""
    M = _coerce(M, m)
    x, z, tau = monomial(x), monomial(z), monomial(tau)
    if x == z:
        raise ValueError("tau-connectivity needs two distinct elements")
    for e in (x, z):
        if e not in M.generators or degree(e) > d:
            raise ValueError(f"{e} is not a member of M of degree <= {d}")
        if not _below(e, tau):
            raise ValueError(f"{e} is not strictly below {tau}")
    if degree(tau) <= d + 1:
        raise ValueError(f"deg {tau} must exceed d + 1 = {d + 1}")
    vertices = [e for e in M.generators if degree(e) <= d and _below(e, tau)]
    return z in _component(x, vertices, d)


def condition_star(M, d, m=None):
    """Return the first pair (in the orderly order) of distinct members of degree <= d
    that are not connected below their LUB, or None when every pair is.

    Comparable pairs are skipped: their LUB is one of them, so the pair is
    never strictly below it and connectivity is not defined.
    """
    M = _coerce(M, m)
    low = sorted((e for e in M.generators if degree(e) <= d), key=orderly_key)
    for x, z in itertools.combinations(low, 2):
        tau = lub(x, z)
        if tau == x or tau == z:
            continue
        if degree(tau) <= d + 1:
            continue
        vertices = [e for e in low if _below(e, tau)]
        if z not in _component(x, vertices, d):
            return (x, z)
    return None


def growth_gap(M, d, m=None):
    """(H_M(d+1), H_M(d)^<d>); the first never exceeds the second."""
    if d < 1:
        raise ValueError("d must be >= 1")
    M = _coerce(M, m)
    return hs(M, d + 1), upper_shadow(hs(M, d), d)
