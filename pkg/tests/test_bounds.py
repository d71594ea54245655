import json
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffker.bounds import (
    Arithmetic,
    BoundReport,
    Doubling,
    FormulaPath,
    PiecewiseGn,
    RepeatFirst,
    Shifted,
    Table,
    ackermann,
    alpha,
    an_upper,
    bezout_exponents,
    c_bound,
    c_value,
    c_via_greedy,
    char_set_order_bound,
    compare_iterates,
    component_order_bound,
    copy_lengths,
    doubling_growth_bound,
    iterate,
    iterated_ackermann,
    l_max,
    mu_next,
    mu_sequence,
    nullstellensatz_T,
    psi,
    psi_literal,
    recursive_tower_bound_m2,
    shifted_ackermann_bound,
)
from diffker.bounds.cbound import tower_b
from diffker.consistency import d_value
from diffker.counts import Huge, pow2, to_decimal
from diffker.errors import BudgetExceeded, ValueExceedsLimit
from diffker.hilbert import hs_seq
from diffker.lattice import degree, leq_product
from diffker.limits import limits, symbolic
from diffker.oracle.brute import greedy_literal


def plain_ackermann(x, y, memo={}):
    """Double recursion with an explicit stack; small arguments only."""
    stack = [x]
    while stack:
        x = stack.pop()
        if x == 0:
            y += 1
        elif y == 0:
            stack.append(x - 1)
            y = 1
        else:
            stack.append(x - 1)
            stack.append(x)
            y -= 1
    return y


# Ackermann


def test_ackermann_examples():
    assert ackermann(2, 5) == 13
    assert ackermann(3, 0) == 5
    assert ackermann(4, 1) == 65533
    assert ackermann(4, 2) == 2**65536 - 3


def test_ackermann_closed_forms_against_recursion():
    for x in range(4):
        for y in range(7 if x == 3 else 30):
            assert ackermann(x, y) == plain_ackermann(x, y), (x, y)
    assert plain_ackermann(4, 0) == ackermann(4, 0) == 13


def test_ackermann_cap():
    with pytest.raises(ValueExceedsLimit):
        ackermann(4, 3)
    with pytest.raises(ValueExceedsLimit):
        ackermann(5, 3)
    with limits(bits=1000):
        with pytest.raises(ValueExceedsLimit) as e:
            ackermann(3, 5000)
        assert "A(3,5000)" in str(e.value)


def test_ackermann_threads():
    results = []

    def work():
        results.append([ackermann(4, 1), ackermann(4, 2) % 1000, iterate(3, 3, 0)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


def test_iterated_ackermann():
    assert iterated_ackermann(1, 2, 3) == ackermann(2, 2) - 1 == 6
    assert iterated_ackermann(1, 3, 2) == 12
    assert iterated_ackermann(2, 2, 2) == ackermann(2, iterated_ackermann(1, 2, 2) - 1) - 1 == 8


def test_compare_iterates_small():
    for x in range(1, 4):
        top = 3 if x == 3 else 4
        for a in range(top):
            for b in range(top):
                for u in range(3):
                    for v in range(3):
                        lhs, rhs = iterate(x, a, u), iterate(x, b, v)
                        assert compare_iterates(x, a, u, b, v) == (lhs > rhs) - (lhs < rhs)
    # neither side fits under the cap; peeling the shared layers keeps this exact
    assert compare_iterates(3, 5, 0, 4, 0) == 1
    assert compare_iterates(3, 2, 0, 3, 0) == -1


# growth functions and the greedy sequence


def test_growth_functions():
    g = RepeatFirst(3)
    assert [g(i) for i in range(1, 5)] == [3, 3, 4, 5]
    assert [Arithmetic(2)(i) for i in (1, 2, 3)] == [2, 3, 4]
    assert Doubling(3)(2) == 12
    assert Shifted(g, 2)(1) == g(3)
    with pytest.raises(ValueError):
        Table([3, 2])
    gn = PiecewiseGn(1, 2, 3)
    gn.check_monotone(20)
    # blocks start at r_j: r_1 = 1, r_2 = L_1 + 1 - 1 = 2, r_3 = L_1 + L_2 + 1 - 2 = 4
    assert gn.rs == [1, 2, 4]


def test_mu_next_examples():
    assert mu_next((2, 0), 0) == (1, 1)
    assert mu_next((1, 1), 1) == (0, 3)
    assert mu_next((0, 0, 4), 3) is None
    assert mu_next((1, 0, 0), 2) == (0, 3, 0)


def test_mu_sequence_examples():
    mu = mu_sequence(RepeatFirst(2), 2, 1)
    assert [a.xi for a in mu] == [(2, 0), (1, 1), (0, 3)]
    for n in range(1, 5):
        mu = mu_sequence(PiecewiseGn(3, 1, n), 1, n)
        assert len(mu) == n
        assert [a.index for a in mu] == list(range(n, 0, -1))
    mu = mu_sequence(PiecewiseGn(0, 2, 3), 2, 3)
    assert [(a.xi, a.index) for a in mu] == [((0, 0), 3), ((0, 0), 2), ((0, 0), 1)]


def test_psi_examples():
    assert psi(RepeatFirst(2), 2) == 3
    for f in (RepeatFirst(4), Arithmetic(3), Table([5, 6, 9])):
        assert psi(f, 1) == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_psi_arithmetic_formula(m):
    for s in range(1, 6 if m < 3 else 4):
        assert psi(Arithmetic(s), m) == plain_ackermann(m, s - 1) - s
        assert psi_literal(Arithmetic(s), m) == psi(Arithmetic(s), m)


def test_psi_arithmetic_m4():
    assert psi(Arithmetic(1), 4) == ackermann(4, 0) - 1 == 12
    assert psi(Arithmetic(2), 4) == ackermann(4, 1) - 2


def test_l_max_examples():
    assert l_max(RepeatFirst(2), 2, 1) == 3
    assert l_max(Arithmetic(3), 2, 1) == ackermann(2, 2) - 3 == 4
    for n in range(1, 6):
        assert l_max(Doubling(2), 1, n) == n


tables = st.lists(st.integers(0, 3), min_size=1, max_size=12).map(
    lambda steps: Table([sum(steps[: i + 1]) for i in range(len(steps))] + [10**6])
)


@settings(max_examples=300)
@given(st.integers(0, 4), st.lists(st.integers(0, 2), min_size=8, max_size=8), st.integers(1, 3))
def test_psi_matches_literal_on_tables(start, steps, m):
    vals = [start]
    for s in steps:
        vals.append(vals[-1] + s)
    # keep walking one unit at a time past the table's explicit part
    vals += [vals[-1] + k for k in range(1, 4000)]
    f = Table(vals)
    try:
        lit = psi_literal(f, m, max_len=3000)
    except BudgetExceeded:
        return
    assert psi(f, m) == lit


@pytest.mark.parametrize("r,m,n", [(r, m, n) for r in range(0, 4) for m in (1, 2, 3) for n in (1, 2, 3)
                                   if c_value(r, m, n) <= 400])
def test_mu_sequence_properties(r, m, n):
    g = PiecewiseGn(r, m, n)
    mu = mu_sequence(g, m, n)
    elems = list(mu)
    for i, a in enumerate(elems, 1):
        assert degree(a) == g(i)
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            assert not leq_product(a, b) and not leq_product(b, a)
    assert len(mu) == l_max(g, m, n) == sum(copy_lengths(g, m, n))
    # copy-wise construction agrees with the plain greedy over all copies
    assert mu.elements == greedy_literal(g, m, n).elements
    L = len(mu)
    if r > 0:
        assert hs_seq(mu, L, degree(elems[-1])) == 0


# C and its two computation paths


def test_c_known_values():
    for m in range(1, 6):
        for n in range(1, 4):
            assert c_value(0, m, n) == 0
    for r in range(0, 30):
        assert c_value(r, 1, 4) == r
        assert c_value(r, 2, 1) == 2 * r
        assert c_value(r, 3, 1) == 3 * (2**r - 1)
    for r in range(1, 6):
        for n in range(1, 6):
            assert c_value(r, 2, n) == 2**n * r
    assert c_value(1, 4, 1) == 5
    assert c_value(1, 5, 1) == 13
    assert c_value(1, 6, 1) == 65533


def test_c_bound_report():
    rep = c_bound(2, 3, 2)
    assert rep.value == c_value(2, 3, 2) == rep.intermediates["C^2"]
    assert rep.intermediates["C^1"] == 9
    assert rep.formula_path is FormulaPath.ACKERMANN_RECURSION
    assert "upper bound" in rep.notes[0]
    back = BoundReport.from_json(rep.dumps())
    assert back == rep
    with pytest.raises(ValueError):
        c_bound(-1, 2, 1)


@pytest.mark.parametrize("r,m,n", [(r, m, n) for r in range(0, 4) for m in (1, 2, 3) for n in (1, 2)])
def test_greedy_path_small(r, m, n):
    assert c_via_greedy(r, m, n).value == c_value(r, m, n)


@pytest.mark.parametrize("r,m,n", [(1, 2, 1), (2, 2, 1), (3, 2, 1), (1, 2, 2), (2, 2, 2),
                                   (1, 3, 1), (2, 3, 1), (3, 3, 1), (4, 3, 1), (1, 3, 2)])
def test_greedy_sequence_attains_c(r, m, n):
    mu = mu_sequence(PiecewiseGn(r, m, n), m, n)
    assert d_value(mu, r) == c_value(r, m, n)


def test_sandwich_small():
    for m in range(1, 4):
        for r in range(2, 7):
            c = c_value(r, m, 1)
            assert plain_ackermann(m, r - 2) <= c <= plain_ackermann(m, r - 1) - 1 or m == 3 and r > 6
    for n in (1, 2):
        for r in range(2, 5):
            c = c_value(r, 2, n)
            assert iterated_ackermann(n, 2, r - 1) + 1 <= c <= iterated_ackermann(n, 2, r)
            assert an_upper(r, 2, n).value == iterated_ackermann(n, 2, r)


# older bounds


def test_doubling_growth_bound():
    for r in range(1, 5):
        for n in range(1, 4):
            assert doubling_growth_bound(r, 1, n).value == 2 ** (n + 1) * r
        assert doubling_growth_bound(r, 2, 1).value == 2 ** (2 * r + 2) * r
    assert doubling_growth_bound(1, 2, 1).value == 16


def test_recursive_tower_bound():
    for r in range(1, 6):
        assert recursive_tower_bound_m2(r, 1).value == 2 ** (2 * r + 2) * r
        assert recursive_tower_bound_m2(r, 2).value == 2 ** (2 ** (2 * r + 2) * r + 2 * r + 3) * r
    assert recursive_tower_bound_m2(1, 1).value == 16
    b = 0
    for _ in range(3):
        b = 2 ** (b + 1) * 1 + b + 1
    assert tower_b(1, 3) == b


def test_shifted_ackermann_needs_huge_values():
    # 2 A(4, 3) = 2 (2^(2^65536) - 3) has about 2^65536 bits
    with pytest.raises(ValueExceedsLimit):
        shifted_ackermann_bound(1, 1, 1)
    with pytest.raises(ValueExceedsLimit):
        shifted_ackermann_bound(1, 2, 1)


def test_shifted_ackermann_formula_with_stub(monkeypatch):
    import diffker.bounds.cbound as cb

    monkeypatch.setattr(cb, "ackermann", lambda x, y: 1000 * x + y)
    assert cb.shifted_ackermann_bound(1, 1, 1).value == 2 * (4000 + 3)
    rep = cb.shifted_ackermann_bound(1, 1, 3)
    assert rep.value == -(-2 * (6000 + 11) // 3)
    assert rep.notes


# applications


def test_apps():
    for r in range(1, 6):
        for n in range(1, 4):
            assert component_order_bound(r, 1, n).value == n * r
            assert char_set_order_bound(r, 1, n).value == r
            assert char_set_order_bound(r, 2, n).value == 2**n * r
            assert nullstellensatz_T(r, 1, n).value == r + 1
            assert nullstellensatz_T(r, 2, n).value == 2**n * r
    assert char_set_order_bound(2, 3, 1).value == 9
    assert component_order_bound(1, 2, 1).value == 4
    assert component_order_bound(1, 2, 2).value == 32
    assert alpha(1, 2) == 3
    rep = nullstellensatz_T(2, 2, 1)
    assert rep.intermediates["alpha_T"] == alpha(4, 2)
    assert rep.intermediates["alpha_T-1"] == alpha(3, 2)


def test_bezout_m1():
    for r in range(1, 6):
        for dv in range(0, 6):
            rep = bezout_exponents(1, r, 1, dv)
            assert rep.value == r * 2 ** (r * dv)
            assert rep.intermediates["e_W"] == 2 ** (r * dv) - 1
    rep = bezout_exponents(1, 1, 1, 0)
    assert (rep.value, rep.intermediates["e_W"]) == (1, 0)


def test_bezout_general_divisibility():
    for m in (2, 3):
        for r in (1, 2):
            for dv in (0, 1, 2):
                try:
                    rep = bezout_exponents(1, r, m, dv)
                except ValueExceedsLimit:
                    continue
                k = rep.intermediates["d'"] * rep.intermediates["alpha_T'-1"]
                assert ((m + 1) ** k - 1) % m == 0
                assert rep.intermediates["e_W"] == rep.intermediates["alpha_T'-1"] * ((m + 1) ** k - 1) // m
                if dv == 0:
                    assert isinstance(rep.value, Fraction) or rep.value >= 0


def test_bezout_json_with_fraction():
    rep = bezout_exponents(1, 1, 2, 0)
    back = BoundReport.from_json(json.loads(rep.dumps()))
    assert back.value == rep.value


# huge values


def test_huge_arithmetic():
    with limits(bits=100):
        with symbolic():
            h = pow2(500, 3)
            assert isinstance(h, Huge)
            assert to_decimal(h - 3) == "3*2^500-3"
            assert pow2(501, 3) > h
            assert (h + 7) > (h + 5)
            assert pow2(499, 7) > h
            assert pow2(499, 5) < h
            assert h > 10**20
        with pytest.raises(ValueExceedsLimit):
            pow2(500, 3)


def test_c_paths_symbolic():
    with symbolic():
        a = c_value(5, 3, 3)
        b = c_via_greedy(5, 3, 3).value
    assert isinstance(a, Huge) and a == b
    assert to_decimal(a) == "3*2^29710560942849126597578981373-3"
