"""Exhaustive search for the largest D_r over antichains inside a degree window.

Antichains are built one degree layer at a time.  The chain condition at
level p only looks at elements of degree <= p, so once a partial antichain
satisfies it at some p >= r its D_r is fixed at p whatever is added later,
and that branch stops.  A branch that reaches the window edge is frozen and
its D_r is finished off by raising p with no further elements.

The chain check here is written against integer-indexed monomials and is
independent of :mod:`diffker.consistency`; the two are compared in the test
suite, together with the permutation-based check :func:`naive_sharp_prime`.
"""

from __future__ import annotations

import itertools
from collections import deque

from .. import limits
from ..bounds import PiecewiseGn, c_value, mu_sequence
from ..consistency import d_value
from ..errors import BudgetExceeded
from ..lattice import AntichainSequence, IndexedMonomial, degree, degree_slice, leq_mono, lub, orderly_key
from .report import VerificationReport


class Universe:
    """All monomials of N^m up to degree W, with precomputed order data."""

    def __init__(self, m, W):
        self.m, self.W = m, W
        self.monos = []
        self.layers = []
        for d in range(W + 1):
            start = len(self.monos)
            self.monos.extend(degree_slice(m, d))
            self.layers.append(list(range(start, len(self.monos))))
        self.pos = {x: k for k, x in enumerate(self.monos)}
        self.deg = [sum(x) for x in self.monos]
        N = len(self.monos)
        # up[k]: bitmask of monomials >= monos[k]
        self.up = [0] * N
        for a in range(N):
            xa = self.monos[a]
            mask = 0
            for b in range(a, N):
                if leq_mono(xa, self.monos[b]):
                    mask |= 1 << b
            self.up[a] = mask

    def lub_deg(self, a, b):
        return sum(max(u, v) for u, v in zip(self.monos[a], self.monos[b]))


def _connected(U, cands, tau, i, j, p):
    starts = [c for c in cands if U.monos[c][i] < tau[i]]
    seen = set(starts)
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        if U.monos[u][j] < tau[j]:
            return True
        for v in cands:
            if v not in seen and U.lub_deg(u, v) <= p:
                seen.add(v)
                queue.append(v)
    return False


def holds(U, S, p):
    """Chain condition at level p for the single-copy set S (indices into U)."""
    low = [s for s in S if U.deg[s] <= p]
    done = set()
    for a, b in itertools.combinations(low, 2):
        tau = lub(U.monos[a], U.monos[b])
        if sum(tau) <= p or tau in done:
            continue
        done.add(tau)
        cands = [c for c in low if leq_mono(U.monos[c], tau)]
        for i in range(U.m):
            if tau[i] == 0 or not any(U.monos[c][i] < tau[i] for c in cands):
                continue
            for j in range(i + 1, U.m):
                if tau[j] == 0 or not any(U.monos[c][j] < tau[j] for c in cands):
                    continue
                if not _connected(U, cands, tau, i, j, p):
                    return False
    return True


def frozen_d(U, S, start, r):
    """D_r of the fixed set S, given that the condition fails below ``start``."""
    h = max([r] + [U.deg[s] for s in S])
    p = max(start, r)
    while not holds(U, S, p):
        p += 1
        if p > 2 * h:
            raise AssertionError("D above 2h")
    return p


def _subsets(items):
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def search_single_copy(m, r, W, budget=None, collect_from=None):
    """Max D_r over antichains of N^m inside degree <= W.

    Returns (max D, one antichain attaining it, number of partial antichains
    visited, list of antichains with D_r >= collect_from).
    """
    U = Universe(m, W)
    budget = budget or limits.iteration_budget()
    best = [-1, ()]
    visited = [0]
    collected = []

    def visit(S, covered, q):
        free = [x for x in U.layers[q] if not (covered >> x) & 1]
        for N in _subsets(free):
            visited[0] += 1
            if visited[0] > budget:
                raise BudgetExceeded(f"brute-force search visited more than {budget} antichains")
            S2 = S + N
            if q >= r and holds(U, S2, q):
                D = q
            elif q == U.W:
                D = frozen_d(U, S2, q + 1, r)
            else:
                cov = covered
                for x in N:
                    cov |= U.up[x]
                visit(S2, cov, q + 1)
                continue
            if D > best[0]:
                best[0], best[1] = D, S2
            if collect_from is not None and D >= collect_from:
                collected.append([U.monos[k] for k in S2])

    visit((), 0, 0)
    return best[0], [U.monos[k] for k in best[1]], visited[0], collected


def level_profile(U, S, r, top):
    """Bitmask over p in [r, top] of the levels where the condition holds for S."""
    mask = 0
    for p in range(r, top + 1):
        if holds(U, S, p):
            mask |= 1 << (p - r)
    return mask


def all_antichains(U, budget=None):
    budget = budget or limits.iteration_budget()
    out = []

    def visit(S, covered, q):
        if q > U.W:
            out.append(S)
            if len(out) > budget:
                raise BudgetExceeded(f"more than {budget} antichains in the window")
            return
        free = [x for x in U.layers[q] if not (covered >> x) & 1]
        for N in _subsets(free):
            cov = covered
            for x in N:
                cov |= U.up[x]
            visit(S + N, cov, q + 1)

    visit((), 0, 0)
    return out


def search_multi_copy(m, r, n, W, budget=None):
    """Max D_r over antichains of N^m x {1..n} inside degree <= W.

    The condition holds at p exactly when it holds in every copy, so each
    copy contributes only its profile of good levels; D is the first level
    good for all copies at once.
    """
    U = Universe(m, W)
    top = 2 * max(r, W)
    profiles = {}
    for S in all_antichains(U, budget):
        prof = level_profile(U, S, r, top)
        profiles.setdefault(prof, S)
    full = (1 << (top - r + 1)) - 1
    best = (-1, None)
    for combo in itertools.combinations_with_replacement(sorted(profiles), n):
        common = full
        for prof in combo:
            common &= prof
        if common == 0:
            raise AssertionError("no common good level below 2h")
        D = r + ((common & -common).bit_length() - 1)
        if D > best[0]:
            best = (D, combo)
    witness = [[U.monos[k] for k in profiles[prof]] for prof in best[1]]
    return best[0], witness, len(profiles)


def brute_max_d(r, m, n=1, window=None, budget=None) -> VerificationReport:
    """Compare the exhaustive maximum of D_r with C(r, m, n) and with D_r of the greedy sequence."""
    C = c_value(r, m, n)
    if window is None:
        window = C + 1
    rep = VerificationReport("max D_r over antichains equals C", {"r": r, "m": m, "n": n, "window": window})
    if n == 1:
        D, witness, visited, _ = search_single_copy(m, r, window, budget)
    else:
        D, witness, visited = search_multi_copy(m, r, n, window, budget)
    rep.checked = visited
    rep.facts.update({"C": C, "max_D": D, "witness": witness})
    if window >= C + 1 and D != C:
        rep.fail({"expected": C, "max_D": D, "witness": witness})
    elif D > C:
        rep.fail({"bound": C, "exceeded_by": witness, "D": D})
    mu = mu_sequence(PiecewiseGn(r, m, n), m, n)
    d_mu = d_value(mu, r)
    rep.facts["D_mu"] = d_mu
    if d_mu != C:
        rep.fail({"greedy_D": d_mu, "expected": C})
    if d_mu < D:
        rep.fail({"greedy_not_maximal": d_mu, "max_D": D})
    return rep


def greedy_literal(f, m, n, max_len=10_000):
    """Greedy sequence over all of N^m x {1..n}: at step i take the ⊴-largest element
    of degree f(i) that lies above no earlier element; stop when there is none."""
    out = []
    while len(out) < max_len:
        d = f(len(out) + 1)
        pick = None
        for idx in range(n, 0, -1):
            for x in degree_slice(m, d):
                if not any(e.index == idx and leq_mono(e.xi, x) for e in out):
                    pick = IndexedMonomial(x, idx)
                    break
            if pick is not None:
                break
        if pick is None:
            return AntichainSequence(tuple(out), m, n)
        out.append(pick)
    raise BudgetExceeded(f"literal greedy longer than {max_len}")


def naive_sharp_prime(seq, p) -> bool:
    """The chain condition checked by trying every ordering of every subset as a chain.

    Exponential; only for tiny inputs.
    """
    low = [a for a in seq if degree(a) <= p]
    for a, b in itertools.combinations(low, 2):
        if a.index != b.index:
            continue
        tau = lub(a.xi, b.xi)
        if sum(tau) <= p:
            continue
        l = a.index
        pool = sorted({c.xi for c in low if c.index == l and leq_mono(c.xi, tau)}, key=orderly_key)
        m = len(tau)
        for i in range(m):
            for j in range(i + 1, m):
                src = [c for c in pool if tau[i] >= 1 and c[i] < tau[i]]
                dst = [c for c in pool if tau[j] >= 1 and c[j] < tau[j]]
                if not src or not dst:
                    continue
                if not _some_chain(pool, tau, i, j, p):
                    return False
    return True


def _some_chain(pool, tau, i, j, p):
    for length in range(1, len(pool) + 1):
        for chain in itertools.permutations(pool, length):
            if chain[0][i] >= tau[i] or chain[-1][j] >= tau[j]:
                continue
            if all(sum(lub(x, y)) <= p for x, y in zip(chain, chain[1:])):
                return True
    return False


def naive_d(seq, r):
    h = max([r] + [degree(a) for a in seq])
    for p in range(r, 2 * h + 1):
        if naive_sharp_prime(seq, p):
            return p
    raise AssertionError("D above 2h")
