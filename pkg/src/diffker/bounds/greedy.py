"""The greedy maximal antichain sequence and its length.

Inside one copy of N^m the greedy sequence for a growth function f starts at
(f(1), 0, ..., 0) and moves by two rules.  Let s be the last nonzero position
among the first m-1 coordinates and gap = f(i+1) - f(i):

* s < m-1: decrement u_s, put gap + u_m + 1 at position s+1, zero the rest;
* s = m-1: decrement u_{m-1} and replace u_m by gap + u_m + 1.

It stops at (0, ..., 0, u_m).  :func:`psi` returns the final index without
listing the elements: the vector is processed as nested blocks of trailing
coordinates, a two-coordinate block is a single jump for any f, and on
stretches where f grows by exactly one per step whole blocks have closed
forms (see :func:`_unit_end`).
"""

from __future__ import annotations

from .. import limits
from ..counts import Huge, pow2, short
from ..errors import BudgetExceeded, ValueExceedsLimit
from ..lattice import AntichainSequence, IndexedMonomial
from .growth import GrowthFunction, Shifted


def mu_next(prev, gap):
    """The element after ``prev`` when the degree rises by ``gap``; None at the end."""
    if gap < 0:
        raise ValueError("growth functions are nondecreasing")
    u = list(prev)
    m = len(u)
    s = None
    for k in range(m - 2, -1, -1):
        if u[k] > 0:
            s = k
            break
    if s is None:
        return None
    last = u[-1]
    u[s] -= 1
    if s < m - 2:
        u[s + 1] = gap + last + 1
        u[-1] = 0
    else:
        u[-1] = gap + last + 1
    return tuple(u)


def mu_copy(f: GrowthFunction, m, max_len=None):
    """The greedy sequence inside a single copy, by applying the rules one step at a time."""
    cur = (f(1),) + (0,) * (m - 1)
    out = [cur]
    cap = limits.enumeration_limit() if max_len is None else max_len
    while True:
        i = len(out)
        nxt = mu_next(cur, f(i + 1) - f(i))
        if nxt is None:
            return out
        out.append(nxt)
        if len(out) > cap:
            raise BudgetExceeded(f"greedy sequence longer than {cap}")
        cur = nxt


def mu_sequence(f: GrowthFunction, m, n=1, max_len=None) -> AntichainSequence:
    """Greedy sequence over n copies: the top copy first, each later copy continuing
    the growth function where the previous one stopped."""
    elems = []
    offset = 0
    for j in range(1, n + 1):
        block = mu_copy(Shifted(f, offset), m, max_len)
        copy = n - j + 1
        elems.extend(IndexedMonomial(x, copy) for x in block)
        offset += len(block)
    return AntichainSequence(tuple(elems), m, n)


def _unit_end(k, x, z, budget):
    """Last coordinate once a k-coordinate block (x, 0, ..., 0, z) has run out,
    assuming f grows by exactly one at every step."""
    if x == 0 or k == 1:
        return z
    if k == 2:
        return 2 * x + z
    if k == 3:
        # each round maps z to 2z + 4
        return pow2(x, z + 4, expr=f"block end 2^{short(x)}*({short(z)}+4)") - 4
    if isinstance(x, Huge):
        raise ValueExceedsLimit(f"{x.describe()} rounds of a {k}-block")
    for _ in range(x):
        budget.spend()
        z = _unit_end(k - 1, z + 2, 0, budget)
    return z


class _Budget:
    def __init__(self):
        self.left = limits.iteration_budget()

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded(f"greedy-length recursion ran past {limits.iteration_budget()} steps")


def _run(f, k, i, x, z, base, budget):
    """Process the trailing k-block (x, 0, ..., 0, z) starting at index i.

    ``base`` is the degree carried by the coordinates in front of the block.
    Returns (index, last coordinate) once the block reads (0, ..., 0, z').
    """
    while True:
        if x == 0 or k == 1:
            return i, z
        if k == 2:
            j = i + x
            return j, f(j) - base
        stop = f.arith_until(i)
        if stop is None or stop > i:
            end = _unit_end(k, x, z, budget)
            j = i + (end - x - z)
            if stop is None or stop >= j:
                return j, end
        if isinstance(x, Huge):
            raise ValueExceedsLimit(f"{x.describe()} literal rounds of a {k}-block")
        budget.spend()
        y = f(i + 1) - f(i) + z + 1
        i, z = _run(f, k - 1, i + 1, y, 0, base + x - 1, budget)
        x -= 1


def psi(f: GrowthFunction, m) -> int:
    """Length of the single-copy greedy sequence for f."""
    if m < 1:
        raise ValueError("m must be >= 1")
    i, _ = _run(f, m, 1, f(1), 0, 0, _Budget())
    return i


def psi_literal(f: GrowthFunction, m, max_len=None) -> int:
    return len(mu_copy(f, m, max_len))


def copy_lengths(f: GrowthFunction, m, n):
    """Lengths L_1..L_n of the n copies, copy j using f shifted past the earlier ones."""
    out = []
    total = 0
    for _ in range(n):
        L = psi(Shifted(f, total) if total else f, m)
        out.append(L)
        total = total + L
    return out


def l_max(f: GrowthFunction, m, n=1):
    """Maximal length of an antichain sequence in N^m x {1..n} with degree growth f."""
    total = 0
    for L in copy_lengths(f, m, n):
        total = total + L
    return total
