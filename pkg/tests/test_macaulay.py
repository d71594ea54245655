import itertools
import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diffker.lattice import degree_slice, slice_size
from diffker.macaulay import (
    BinomialRep,
    admissible_degree,
    binomial,
    d_binomial_rep,
    enumerated_growth,
    is_compressed,
    is_d_segment,
    macaulay_growth,
    segment,
    upper_shadow,
)


def all_reps(a, d):
    """Every strictly decreasing k_d > ... > k_j >= j >= 1 summing to a."""
    kmax = min(a + d, 14)
    out = []
    for length in range(1, d + 1):
        for ks in itertools.combinations(range(kmax, 0, -1), length):
            if all(k >= d - t for t, k in enumerate(ks)) and sum(comb(k, d - t) for t, k in enumerate(ks)) == a:
                out.append(ks)
    return out


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(9, 0) == 1
    assert binomial(2 - 1 + 4, 4) == 5
    assert binomial(3, 5) == 0


def test_d_binomial_rep_examples():
    assert d_binomial_rep(5, 2).ks == (3, 2)
    assert d_binomial_rep(1, 4).ks == (4,)
    assert d_binomial_rep(6, 2).ks == (4,)
    assert d_binomial_rep(6, 2).j == 2
    with pytest.raises(ValueError):
        d_binomial_rep(0, 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_d_binomial_rep_matches_unique_search(d):
    for a in range(1, 14 if d == 1 else 60):
        reps = all_reps(a, d)
        assert len(reps) == 1, (a, d, reps)
        assert d_binomial_rep(a, d).ks == reps[0]


def test_upper_shadow_examples():
    assert upper_shadow(0, 3) == 0
    assert upper_shadow(5, 2) == comb(4, 3) + comb(3, 2) == 7
    assert upper_shadow(1, 3) == 1


def test_segment_examples():
    assert segment(slice_size(3, 2), 2, 3) == degree_slice(3, 2)
    # the orderly maximum of degree 2 in N^2 is (2,0)
    assert segment(1, 2, 2) == [(2, 0)]
    assert segment(0, 3, 2) == []
    with pytest.raises(ValueError):
        segment(7, 2, 2)


def test_macaulay_growth_examples():
    for m in range(2, 6):
        for d in range(1, 4):
            assert macaulay_growth(2, m, d) == 2 * m - 1
    assert macaulay_growth(0, 3, 2) == 0
    for m in range(1, 5):
        for d in range(1, 5):
            assert macaulay_growth(slice_size(m, d), m, d) == comb(m + d, d + 1)


def test_compressed_examples():
    assert is_compressed(segment(4, 3, 3))
    assert is_compressed(set())
    assert not is_compressed({(1, 1)})
    assert is_compressed({(2, 0)})


def test_d_segment_examples():
    assert is_d_segment(segment(3, 2, 3), 2)
    assert not is_d_segment(degree_slice(3, 2)[1:], 2)
    assert is_d_segment(set(), 2)


@given(st.integers(1, 10**6), st.integers(1, 6))
def test_reconstruction(a, d):
    rep = d_binomial_rep(a, d)
    assert rep.value() == a
    assert all(x > y for x, y in zip(rep.ks, rep.ks[1:]))
    assert rep.ks[-1] >= rep.j >= 1


@given(st.integers(0, 10**5), st.integers(0, 10**5), st.integers(1, 6))
def test_monotone(a, b, d):
    if a < b:
        assert upper_shadow(a, d) < upper_shadow(b, d)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_duality(m):
    for d in range(1, 7):
        full = slice_size(m, d)
        for b in range(full + 1):
            assert upper_shadow(b, d) == comb(m + d, d + 1) - macaulay_growth(full - b, m, d)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_enumerated_equals_duality(m):
    for d in range(1, 6):
        for a in range(slice_size(m, d) + 1):
            assert enumerated_growth(a, m, d) == macaulay_growth(a, m, d)


@given(st.integers(2, 5), st.integers(0, 200), st.integers(0, 3))
def test_growth_independent_of_degree(m, a, extra):
    d0 = admissible_degree(a, m) if a else 1
    assert macaulay_growth(a, m, d0) == macaulay_growth(a, m, d0 + extra)


def test_m1_admissibility():
    assert macaulay_growth(1, 1) == 1
    with pytest.raises(ValueError):
        macaulay_growth(2, 1)


def test_segments_are_compressed():
    rng = random.Random(1)
    for _ in range(50):
        m, d = rng.randint(1, 4), rng.randint(1, 4)
        a = rng.randint(0, slice_size(m, d))
        seg = segment(a, d, m)
        assert is_compressed(seg) and is_d_segment(seg, d)


def test_binomial_rep_value_type():
    assert BinomialRep(2, (3, 2)).value() == 5
