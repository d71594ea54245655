"""Exhaustive and randomized sweeps over the Macaulay-type inequalities."""

from __future__ import annotations

import itertools
import random

from ..bounds import (
    PiecewiseGn,
    ackermann,
    c_value,
    compare_iterates,
    doubling_growth_bound,
    iterate,
    iterated_ackermann,
    mu_sequence,
    recursive_tower_bound_m2,
    shifted_ackermann_bound,
)
from ..consistency import d_value
from ..errors import LimitExceeded
from ..hilbert import StaircaseSet, condition_star, growth_gap, hs, hs_seq, s_fn
from ..lattice import degree_slice, orderly_key, slice_size, validate_antichain
from ..macaulay import (
    admissible_degree,
    binomial,
    d_binomial_rep,
    enumerated_growth,
    is_compressed,
    macaulay_growth,
    segment,
    upper_shadow,
)
from .brute import search_single_copy
from .report import VerificationReport


def _subsets(items):
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def exhaustive_strict_macaulay(m, d) -> VerificationReport:
    """Every subset M of the degree-d slice: H_M(d+1) <= H_M(d)^<d>, strictly when (*) holds."""
    slc = degree_slice(m, d)
    if len(slc) > 18:
        raise ValueError(f"degree-{d} slice of N^{m} has {len(slc)} elements; at most 18 allowed")
    rep = VerificationReport("condition (*) forces strict Macaulay growth", {"m": m, "d": d})
    star_count = converse = 0
    for M in _subsets(slc):
        S = StaircaseSet(frozenset(M), m)
        nxt, bound = growth_gap(S, d)
        witness = condition_star(S, d)
        rep.checked += 1
        if nxt > bound:
            rep.fail({"M": [list(x) for x in M], "kind": "Macaulay", "H": nxt, "bound": bound})
        if witness is not None:
            star_count += 1
            if nxt >= bound:
                rep.fail({"M": [list(x) for x in M], "kind": "strict", "H": nxt, "bound": bound,
                          "witness": [list(w) for w in witness]})
        elif nxt < bound:
            converse += 1
    rep.facts.update({"subsets_with_star": star_count, "strict_without_star": converse})
    if m == 3 and d in NAMED:
        _check_named(rep, d)
    return rep


# m = 3: the degree-d slice minus one mixed monomial.
# At d = 2 the pair (2,0,0), (0,2,0) is disconnected and growth is strict
# (0 < 1); at d = 3 growth is just as strict with (*) false.
NAMED = {2: ((1, 1, 0), frozenset({(2, 0, 0), (0, 2, 0)}), 0, 1),
         3: ((1, 1, 1), None, 0, 1)}


def _check_named(rep, d):
    gap_mono, witness, want_next, want_bound = NAMED[d]
    M = [x for x in degree_slice(3, d) if x != gap_mono]
    nxt, bound = growth_gap(StaircaseSet(frozenset(M), 3), d)
    got = condition_star(StaircaseSet(frozenset(M), 3), d)
    got = None if got is None else frozenset(tuple(x) for x in got)
    fact = {"H_next": nxt, "bound": bound, "witness": None if got is None else sorted(got)}
    rep.facts[f"slice_minus_{''.join(map(str, gap_mono))}"] = fact
    rep.checked += 1
    if got != witness or (nxt, bound) != (want_next, want_bound):
        rep.fail({"kind": "named", "d": d, **fact})


def is_block(M, d):
    """Consecutive run (u1, u2), (u1+1, u2-1), ... of the degree-d slice of N^2; empty counts."""
    if not M:
        return True
    firsts = sorted(x[0] for x in M)
    return firsts == list(range(firsts[0], firsts[0] + len(firsts)))


def exhaustive_block_converse_m2(d) -> VerificationReport:
    """In N^2, equality H_M(d+1) = H_M(d)^<d> exactly for blocks."""
    if d < 1 or d > 8:
        raise ValueError("d must be in 1..8")
    rep = VerificationReport("m=2 equality iff block", {"d": d})
    for M in _subsets(degree_slice(2, d)):
        nxt, bound = growth_gap(StaircaseSet(frozenset(M), 2), d)
        rep.checked += 1
        if (nxt == bound) != is_block(M, d):
            rep.fail({"M": [list(x) for x in M], "H": nxt, "bound": bound})
    return rep


def _growth_defined(a, m):
    """a^(m) needs a degree whose slice has at least a monomials; N^1 only has a <= 1."""
    return m >= 2 or a <= 1


def check_sperner_lemma(m, top) -> VerificationReport:
    """A > 0, A = B + C, C^(m-1) < A^(m) - A  implies  B^(m) + C^(m-1) >= A^(m)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    rep = VerificationReport("Sperner growth lemma", {"m": m, "A_max": top})
    for A in range(1, top + 1):
        am = macaulay_growth(A, m)
        for C in range(A + 1):
            B = A - C
            if not _growth_defined(C, m - 1):
                rep.skipped += 1
                continue
            cm = macaulay_growth(C, m - 1)
            if not cm < am - A:
                rep.skipped += 1
                continue
            rep.checked += 1
            if macaulay_growth(B, m) + cm < am:
                rep.fail({"A": A, "B": B, "C": C})
    return rep


def check_techlem1(m, d, samples=10_000, seed=0, max_len=6) -> VerificationReport:
    """b_1 <= b_2 = ... = b_s = slice size, every a_i <= slice size and sum a <= sum b
    imply sum a_i^<d> <= sum b_i^<d>.  With s = 1 only b_1 <= slice size is required."""
    rng = random.Random(seed)
    full = slice_size(m, d)
    rep = VerificationReport("sum of upper shadows is monotone", {"m": m, "d": d, "samples": samples, "seed": seed})
    while rep.checked < samples:
        s = rng.randint(1, max_len)
        b = [rng.randint(0, full)] + [full] * (s - 1)
        t = rng.randint(1, max_len)
        total = sum(b)
        a = []
        for _ in range(t):
            a.append(rng.randint(0, min(full, total)))
            total -= a[-1]
        rng.shuffle(a)
        rep.checked += 1
        lhs = sum(upper_shadow(x, d) for x in a)
        rhs = sum(upper_shadow(x, d) for x in b)
        if lhs > rhs:
            rep.fail({"a": a, "b": b, "lhs": lhs, "rhs": rhs})
    return rep


def _domination_failures(alpha, mu, d_top):
    seq = validate_antichain(sorted(alpha, key=orderly_key), m=mu.m, n=mu.n)
    out = []
    for i in range(max(len(seq), len(mu)) + 1):
        for d in range(d_top + 1):
            a, b = hs_seq(seq, i, d), hs_seq(mu, i, d)
            if a > b:
                out.append({"i": i, "d": d, "H_alpha": a, "H_mu": b})
    return out


def verify_hs_domination(r, m, n=1, window=None, samples=None, extra=()) -> VerificationReport:
    """Antichains with D_r >= C have Hilbert functions dominated by the greedy sequence's."""
    C = c_value(r, m, n)
    mu = mu_sequence(PiecewiseGn(r, m, n), m, n)
    d_top = max(sum(a.xi) for a in mu) + 1
    rep = VerificationReport("Hilbert functions dominated by the greedy sequence",
                             {"r": r, "m": m, "n": n})
    candidates = [list(e) for e in extra]
    if n == 1:
        window = C + 1 if window is None else window
        rep.params["window"] = window
        _, _, _, found = search_single_copy(m, r, window, collect_from=C)
        candidates.extend([(x, 1) for x in S] for S in found)
    if samples is not None:
        candidates = candidates[:samples]
    for alpha in candidates:
        seq = validate_antichain(alpha, m=m, n=n)
        if d_value(seq, r) < C:
            rep.skipped += 1
            continue
        rep.checked += 1
        bad = _domination_failures(seq, mu, d_top)
        if bad:
            rep.fail({"alpha": seq.to_json()["elements"], "violations": bad[:5]})
    return rep


def macaulay_identities(m_max=4, d_max=6, enum_d_max=5) -> VerificationReport:
    """Complementarity, strict monotonicity, duality and the enumerated growth operator."""
    rep = VerificationReport("Macaulay identities", {"m_max": m_max, "d_max": d_max})
    rng = random.Random(0)
    for m in range(1, m_max + 1):
        for d in range(1, d_max + 1):
            full = slice_size(m, d)
            prev = -1
            for a in range(full + 1):
                rep.checked += 1
                if a:
                    rep_a = d_binomial_rep(a, d)
                    if rep_a.value() != a:
                        rep.fail({"kind": "reconstruction", "a": a, "d": d})
                sh = upper_shadow(a, d)
                if sh <= prev:
                    rep.fail({"kind": "monotone", "a": a, "d": d})
                prev = sh
                if sh != binomial(m + d, d + 1) - macaulay_growth(full - a, m, d):
                    rep.fail({"kind": "duality", "a": a, "m": m, "d": d})
                if d <= enum_d_max and enumerated_growth(a, m, d) != macaulay_growth(a, m, d):
                    rep.fail({"kind": "enumerated", "a": a, "m": m, "d": d})
                if a <= full and m >= 2 and d > admissible_degree(a, m):
                    if macaulay_growth(a, m, d) != macaulay_growth(a, m):
                        rep.fail({"kind": "degree-independence", "a": a, "m": m, "d": d})
            for _ in range(10):
                M = rng.sample(degree_slice(m, d), rng.randint(0, full))
                M += rng.sample(degree_slice(m, max(d - 1, 0)), rng.randint(0, min(2, slice_size(m, d - 1))))
                S = StaircaseSet(frozenset(M), m)
                for e in (d, d + 1):
                    rep.checked += 1
                    if hs(S, e) + s_fn(S, e) != slice_size(m, e):
                        rep.fail({"kind": "complement", "M": [list(x) for x in M], "d": e})
            for a in range(full + 1):
                seg = StaircaseSet(frozenset(segment(a, d, m)), m)
                nxt, bound = growth_gap(seg, d)
                rep.checked += 1
                if nxt != bound or not is_compressed(seg.generators):
                    rep.fail({"kind": "segment-equality", "a": a, "m": m, "d": d})
    return rep


def sandwich(m_max=4, r_lo=2, r_hi=6, n_max=3) -> VerificationReport:
    """A(m, r-2) <= C(r,m,1) <= A(m, r-1) - 1, and A_n(m, r-1) + 1 <= C(r,m,n) <= A_n(m, r)."""
    rep = VerificationReport("Ackermann sandwich", {"m_max": m_max, "r": [r_lo, r_hi], "n_max": n_max})
    for m in range(1, m_max + 1):
        for r in range(r_lo, r_hi + 1):
            # C(r,m,1) = A(m-1,.)^r(0) and A(m, y) = A(m-1,.)^(y+1)(1)
            lower = compare_iterates(m - 1, r - 1, 1, r, 0)
            upper = compare_iterates(m - 1, r, 0, r, 1)
            rep.checked += 1
            if lower > 0 or upper >= 0:
                rep.fail({"m": m, "r": r, "n": 1, "lower": lower, "upper": upper})
            for n in range(2, n_max + 1):
                try:
                    c = c_value(r, m, n)
                    lo = iterated_ackermann(n, m, r - 1) + 1
                    hi = iterated_ackermann(n, m, r)
                except LimitExceeded:
                    rep.skipped += 1
                    continue
                rep.checked += 1
                if not lo <= c <= hi:
                    rep.fail({"m": m, "r": r, "n": n, "C": c})
    return rep


def legacy_dominance(r_max=5, m_max=3, n_max=2) -> VerificationReport:
    """C(r,m,n) is at most each older bound wherever the older bound is within the cap.

    When an older bound overflows the cap it is at least 2^(cap-64); C is
    then checked to be far below that.
    """
    from .. import limits

    rep = VerificationReport("C below the older bounds", {"r_max": r_max, "m_max": m_max, "n_max": n_max})
    rows = []
    for r in range(1, r_max + 1):
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                try:
                    c = c_value(r, m, n)
                except LimitExceeded:
                    rep.skipped += 1
                    continue
                others = {"doubling": lambda: doubling_growth_bound(r, m, n).value,
                          "shifted-ackermann": lambda: shifted_ackermann_bound(r, m, n).value}
                if m == 2:
                    others["tower-m2"] = lambda: recursive_tower_bound_m2(r, n).value
                row = {"r": r, "m": m, "n": n, "C": c}
                for name, fn in others.items():
                    try:
                        v = fn()
                    except LimitExceeded:
                        row[name] = ">LIMIT"
                        rep.checked += 1
                        if c.bit_length() >= limits.bit_cap() - 64:
                            rep.fail({**row, "which": name, "why": "C too close to the cap to compare"})
                        continue
                    row[name] = v
                    rep.checked += 1
                    if c > v:
                        rep.fail({**row, "which": name})
                rows.append(row)
    rep.facts["rows"] = len(rows)
    return rep


def acker_closed_forms(x_max=3, y_max=50) -> VerificationReport:
    """Closed forms for x <= 3 against the plain double recursion on small arguments."""
    import sys

    rep = VerificationReport("Ackermann closed forms", {"x_max": x_max, "y_max": y_max})
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))
    memo = {}

    def plain(x, y):
        if (x, y) in memo:
            return memo[(x, y)]
        if x == 0:
            v = y + 1
        elif y == 0:
            v = plain(x - 1, 1)
        else:
            v = plain(x - 1, plain(x, y - 1))
        memo[(x, y)] = v
        return v

    for x in range(x_max + 1):
        for y in range(y_max + 1):
            if x == 3 and y > 8:
                break
            rep.checked += 1
            if plain(x, y) != ackermann(x, y):
                rep.fail({"x": x, "y": y})
    for k in range(6):
        rep.checked += 1
        if iterate(2, k, 0) != c_value(k, 3, 1):
            rep.fail({"iterate": k})
    return rep
