import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diffker.consistency import check_principal_criterion, condition_sharp_prime, d_r, d_value
from diffker.lattice import AntichainSequence, degree, degree_slice, indexed, truncate, validate_antichain
from diffker.oracle.brute import Universe, frozen_d, holds, naive_d


def seq(*xs):
    return AntichainSequence.from_lists(xs)


EX = seq((2, 0), (1, 1), (0, 2))


def test_sharp_prime_examples():
    assert not condition_sharp_prime(EX, 2)
    assert condition_sharp_prime(EX, 3)
    m1 = seq((3,))
    assert all(condition_sharp_prime(m1, p) for p in range(6))
    pair = seq((1, 0), (0, 1))
    assert not condition_sharp_prime(pair, 1)
    assert condition_sharp_prime(pair, 2)


def test_d_r_examples():
    res = d_r(EX, 2)
    assert res.value == 3
    chains = [o.chain for o in res.obligations]
    assert all(c is not None for c in chains)
    assert d_r(seq((3, 0), (0, 3)), 3).value == 6
    for r in range(6):
        assert d_r(seq((4,)), r).value == r
        assert d_value(validate_antichain([((2,), 1), ((5,), 2)]), r) == r


@pytest.mark.parametrize("r", range(1, 9))
def test_two_corners(r):
    assert d_value(seq((r, 0), (0, r)), r) == 2 * r


def test_d_r_json():
    data = json.loads(d_r(EX, 2).dumps())
    assert data["D"] == 3 and data["r"] == 2
    assert data["failure_below"] is not None
    ob = data["obligations"][0]
    assert ob["tau"] == [2, 2] and (ob["i"], ob["j"]) == (1, 2)


def test_principal_criterion_examples():
    assert check_principal_criterion(validate_antichain([((2, 0), 1)]), 2)
    assert not check_principal_criterion(seq((1, 0), (0, 1)), 1)
    assert d_value(seq((1, 0), (0, 1)), 1) == 2
    assert check_principal_criterion(EX, 3)
    with pytest.raises(ValueError):
        check_principal_criterion(EX, 1)


def random_antichain(rng, m, n, h, k):
    pool = [indexed(x, i) for i in range(1, n + 1) for d in range(h + 1) for x in degree_slice(m, d)]
    rng.shuffle(pool)
    out = []
    for a in pool:
        if len(out) >= k:
            break
        if all(a.index != b.index or not (all(u <= v for u, v in zip(a.xi, b.xi)) or
                                          all(v <= u for u, v in zip(a.xi, b.xi))) for b in out):
            out.append(a)
    return validate_antichain(out, m=m, n=n)


def test_three_implementations_agree():
    rng = random.Random(11)
    for _ in range(300):
        m, n, h = rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 4)
        s = random_antichain(rng, m, n, h, rng.randint(0, 5))
        r = rng.randint(0, h)
        D = d_value(s, r)
        assert D == d_r(s, r).value
        assert D == naive_d(s, r)
        if n == 1:
            U = Universe(m, h)
            S = [U.pos[a.xi] for a in s]
            assert D == frozen_d(U, S, r, r)
            for p in range(r, D + 1):
                assert holds(U, S, p) == condition_sharp_prime(s, p)


def _cases(draw_seed):
    rng = random.Random(draw_seed)
    m, n, h = rng.randint(1, 3), rng.randint(1, 2), rng.randint(1, 5)
    return random_antichain(rng, m, n, h, rng.randint(0, 6)), rng.randint(0, h), h


@settings(max_examples=150)
@given(st.integers(0, 10**9))
def test_stability_and_cap(seed):
    s, r, h = _cases(seed)
    D = d_value(s, r)
    assert r <= D <= 2 * max(r, max((degree(a) for a in s), default=0))
    for t in range(r, D + 1):
        assert d_value(s, t) == D


@settings(max_examples=150)
@given(st.integers(0, 10**9))
def test_depends_only_on_truncation(seed):
    s, r, _ = _cases(seed)
    D = d_value(s, r)
    assert d_value(truncate(s, D), r) == D


@settings(max_examples=150)
@given(st.integers(0, 10**9))
def test_principal_iff_d_equals_r(seed):
    s, r, _ = _cases(seed)
    low = truncate(s, r)
    assert check_principal_criterion(low, r) == (d_value(low, r) == r)
