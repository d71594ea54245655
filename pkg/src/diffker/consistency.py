"""The chain condition on truncated antichain sequences and the invariant D_r.

For a truncation level ``p`` every same-copy LUB ``tau`` of degree above
``p`` produces obligations, one per pair of coordinates ``i < j``: if some
element of the truncation lies under ``tau - e_i`` and some lies under
``tau - e_j``, those two families must be linked by a chain of elements under
``tau`` whose consecutive LUBs have degree at most ``p``.  ``D_r`` is the
first ``p >= r`` at which every obligation is met.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional

from .lattice import AntichainSequence, degree, gamma, leq_mono, lub, orderly_key, validate_antichain


@dataclass(frozen=True)
class Obligation:
    tau: tuple
    index: int
    i: int
    j: int
    chain: Optional[tuple]

    @property
    def met(self):
        return self.chain is not None

    def to_json(self):
        return {
            "tau": list(self.tau),
            "index": self.index,
            "i": self.i + 1,
            "j": self.j + 1,
            "chain": None if self.chain is None else [list(e) for e in self.chain],
        }


@dataclass(frozen=True)
class DrResult:
    value: int
    r: int
    obligations: List[Obligation] = field(default_factory=list)
    failure: Optional[Obligation] = None

    def to_json(self):
        return {
            "D": self.value,
            "r": self.r,
            "obligations": [o.to_json() for o in self.obligations],
            "failure_below": None if self.failure is None else self.failure.to_json(),
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def _find_chain(cands, i, j, p):
    """Shortest chain from an element free in coordinate i to one free in coordinate j."""
    starts = [e for e in cands if e[0][i] < e[1][i]]
    if not starts:
        return None
    parent = {e: None for e in starts}
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        if u[0][j] < u[1][j]:
            chain = []
            while u is not None:
                chain.append(u[0])
                u = parent[u]
            chain.reverse()
            if len(chain) == 1:
                chain = chain * 2
            return tuple(chain)
        for v in cands:
            if v not in parent and degree(lub(u[0], v[0])) <= p:
                parent[v] = u
                queue.append(v)
    return None


def obligations(seq, p, stop_at_failure=False):
    """All obligations at level ``p`` with a chain (or None) for each."""
    low = [a for a in seq if degree(a) <= p]
    out = []
    for t in gamma(low):
        tau, l = t.xi, t.index
        if degree(tau) <= p:
            continue
        below = sorted((a.xi for a in low if a.index == l and leq_mono(a.xi, tau)), key=orderly_key)
        cands = [(eta, tau) for eta in below]
        m = len(tau)
        for i in range(m):
            if tau[i] == 0 or not any(e[i] < tau[i] for e in below):
                continue
            for j in range(i + 1, m):
                if tau[j] == 0 or not any(e[j] < tau[j] for e in below):
                    continue
                ob = Obligation(tau, l, i, j, _find_chain(cands, i, j, p))
                out.append(ob)
                if stop_at_failure and not ob.met:
                    return out
    return out


def condition_sharp_prime(seq, p) -> bool:
    if p < 0:
        raise ValueError("p must be nonnegative")
    return all(ob.met for ob in obligations(seq, p, stop_at_failure=True))


def _first_failure(seq, p):
    for ob in obligations(seq, p, stop_at_failure=True):
        if not ob.met:
            return ob
    return None


def d_r(seq, r) -> DrResult:
    """Least p >= r at which every chain obligation is met."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    h = max(r, max((degree(a) for a in seq), default=0))
    p = r
    failure = None
    while True:
        bad = _first_failure(seq, p)
        if bad is None:
            break
        failure = bad
        p += 1
        if p > 2 * h:
            raise AssertionError(f"D exceeded 2h = {2 * h}; the chain search is broken")
    return DrResult(p, r, obligations(seq, p), failure)


def d_value(seq, r) -> int:
    """Just the value of D_r, without building certificates."""
    h = max(r, max((degree(a) for a in seq), default=0))
    for p in range(r, 2 * h + 1):
        if condition_sharp_prime(seq, p):
            return p
    raise AssertionError(f"D exceeded 2h = {2 * h}; the chain search is broken")


def check_principal_criterion(minimal_leaders, r) -> bool:
    """Chain condition at the kernel length itself, i.e. D_r == r."""
    for a in minimal_leaders:
        if degree(a) > r:
            raise ValueError(f"minimal leader {a} has degree above r={r}")
    return condition_sharp_prime(minimal_leaders, r)


def as_sequence(items, m=None, n=None) -> AntichainSequence:
    if isinstance(items, AntichainSequence):
        return items
    return validate_antichain(items, m=m, n=n)
