"""The prolongation bound C(r, m, n) and the older bounds it is compared against."""

from __future__ import annotations

from fractions import Fraction

from ..counts import checked, pow2, short
from .ackermann import ackermann, iterate, iterated_ackermann
from .greedy import copy_lengths, l_max
from .growth import Doubling, PiecewiseGn
from .report import BoundReport, FormulaPath


def c_value(r, m, n=1):
    """C(r, m, n) as a bare integer, by the Ackermann recursion.

    C(r, m, 1) = A(m-1, .)^r (0) and C(r, m, n) = C(C(r, m, n-1), m, 1).
    """
    _check_args(r, m, n)
    if m == 1 or r == 0:
        return r
    c = r
    for _ in range(n):
        c = iterate(m - 1, c, 0)
    return checked(c, f"C({r},{m},{n})")


def _check_args(r, m, n):
    if r < 0 or m < 1 or n < 1:
        raise ValueError(f"need r >= 0, m >= 1, n >= 1; got r={r}, m={m}, n={n}")


def c_bound(r, m, n=1) -> BoundReport:
    _check_args(r, m, n)
    steps = {}
    c = r
    if m > 1 and r > 0:
        for j in range(1, n + 1):
            c = iterate(m - 1, c, 0)
            steps[f"C^{j}"] = c
    notes = ["upper bound on the minimal prolongation length T"]
    return BoundReport(c, FormulaPath.ACKERMANN_RECURSION, steps, notes)


def c_via_greedy(r, m, n=1) -> BoundReport:
    """C(r, m, n) as (greedy length for the n-block growth function) + r - n."""
    _check_args(r, m, n)
    g = PiecewiseGn(r, m, n)
    lengths = copy_lengths(g, m, n)
    total = 0
    for L in lengths:
        total = total + L
    inter = {f"L_{j}": L for j, L in enumerate(lengths, 1)}
    inter["L"] = total
    return BoundReport(total + r - n, FormulaPath.GREEDY_LENGTH, inter)


def an_upper(r, m, n=1) -> BoundReport:
    """A_n(m, r), an explicit upper bound for C(r, m, n) (r >= 1)."""
    if r < 1:
        raise ValueError("the iterated Ackermann bound needs r >= 1")
    v = iterated_ackermann(n, m, r)
    return BoundReport(v, FormulaPath.ITERATED_ACKERMANN, {"n": n, "x": m, "y": r})


def doubling_growth_bound(r, m, n=1) -> BoundReport:
    """2^(L+1) * r where L is the greedy length for growth 2^i * r."""
    if r < 1:
        raise ValueError("the doubling bound needs r >= 1")
    _check_args(r, m, n)
    L = l_max(Doubling(r), m, n)
    value = pow2(L + 1, r, expr=f"2^(L+1)*{r} with L={short(L)}")
    return BoundReport(value, FormulaPath.DOUBLING_GROWTH, {"L": L})


def tower_b(r, n):
    """b_0 = 0, b_{i+1} = 2^(b_i + 1) r + b_i + 1."""
    b = 0
    for i in range(n):
        b = pow2(b + 1, r, expr=f"b_{i + 1}") + b + 1
    return b


def recursive_tower_bound_m2(r, n=1) -> BoundReport:
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    b = tower_b(r, n)
    return BoundReport(pow2(b + 1, r, expr=f"2^(b_{n}+1)*{r}"), FormulaPath.RECURSIVE_TOWER, {f"b_{n}": b})


def shifted_ackermann_bound(r, m, n=1) -> BoundReport:
    """2 A(m+3, 4r-1) for n = 1 and (2/n) A(m+5, 4nr-1) for n > 1."""
    if r < 1:
        raise ValueError("need r >= 1")
    _check_args(r, m, n)
    if n == 1:
        a = ackermann(m + 3, 4 * r - 1)
        return BoundReport(2 * a, FormulaPath.SHIFTED_ACKERMANN, {"A": a})
    a = ackermann(m + 5, 4 * n * r - 1)
    exact = Fraction(2 * a, n)
    notes = []
    value = exact.numerator // exact.denominator
    if exact.denominator != 1:
        value += 1
        notes.append("2A/n is not an integer; reporting its ceiling")
    return BoundReport(value, FormulaPath.SHIFTED_ACKERMANN, {"A": a}, notes)
