import itertools
import json
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diffker.errors import ComparablePair, DimensionMismatch, EnumerationLimit
from diffker.lattice import (
    AntichainSequence,
    cmp_orderly,
    degree,
    degree_slice,
    gamma,
    indexed,
    leq_product,
    lub,
    orderly_key,
    truncate,
    validate_antichain,
)
from diffker.limits import limits


def test_degree():
    assert degree(indexed((2, 0), 1)) == 2
    assert degree(indexed((0, 0, 0), 3)) == 0
    assert degree(indexed((5, 0), 1)) == 5


def test_leq_product():
    assert leq_product(indexed((1, 0)), indexed((2, 0)))
    assert not leq_product(indexed((1, 0), 1), indexed((2, 0), 2))
    assert not leq_product(indexed((2, 0)), indexed((0, 2)))
    assert not leq_product(indexed((0, 2)), indexed((2, 0)))
    with pytest.raises(DimensionMismatch):
        leq_product(indexed((1, 0)), indexed((1, 0, 0)))


def test_cmp_orderly():
    assert cmp_orderly(indexed((1, 0), 1), indexed((0, 1), 2)) == -1
    assert cmp_orderly(indexed((0, 2), 1), indexed((2, 0), 1)) == -1
    assert cmp_orderly(indexed((3, 0), 1), indexed((0, 1), 1)) == 1
    assert cmp_orderly(indexed((3, 0), 1), indexed((3, 0), 1)) == 0


def test_lub():
    assert lub((2, 0), (0, 2)) == (2, 2)
    assert lub((1, 4, 2), (1, 4, 2)) == (1, 4, 2)
    assert lub((2, 0, 0), (0, 2, 0)) == (2, 2, 0)


def test_gamma():
    seq = AntichainSequence.from_lists([(3, 0), (0, 3)])
    assert [g.xi for g in gamma(seq)] == [(3, 3)]
    assert gamma(AntichainSequence.from_lists([(1, 1)])) == []
    seq = AntichainSequence.from_lists([(2, 0), (1, 1), (0, 2)])
    # frozen from pairwise enumeration: LUBs of the three pairs
    assert {g.xi for g in gamma(seq)} == {(2, 1), (2, 2), (1, 2)}
    # distinct copies never pair up
    assert gamma(validate_antichain([((1, 0), 1), ((0, 1), 2)])) == []


def test_degree_slice():
    assert len(degree_slice(2, 4)) == 5
    assert degree_slice(1, 7) == [(7,)]
    assert len(degree_slice(3, 2)) == 6
    assert degree_slice(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_degree_slice_limit():
    with limits(enumeration=10):
        with pytest.raises(EnumerationLimit):
            degree_slice(3, 4)


def test_truncate():
    seq = AntichainSequence.from_lists([(2, 0), (1, 1), (0, 2)])
    assert truncate(seq, 1).elements == ()
    assert truncate(seq, 5) == seq
    seq = AntichainSequence.from_lists([(2, 0), (0, 3)])
    assert [a.xi for a in truncate(seq, 2)] == [(2, 0)]


def test_validate_antichain():
    validate_antichain([((2, 0), 1), ((1, 1), 1)])
    with pytest.raises(ComparablePair) as e:
        validate_antichain([((1, 0), 1), ((2, 0), 1)])
    assert (e.value.i, e.value.j) == (0, 1)
    validate_antichain([((1, 0), 1), ((1, 0), 2)])
    with pytest.raises(DimensionMismatch):
        validate_antichain([((1, 0), 1), ((1, 0, 0), 1)])


def test_json_round_trip():
    seq = validate_antichain([((2, 0), 1), ((0, 2), 1), ((1, 1), 2)])
    data = json.loads(seq.dumps())
    assert data["m"] == 2 and data["n"] == 2
    assert data["elements"][0] == [[2, 0], 1]
    assert AntichainSequence.from_json(seq.dumps()) == seq




def _indexed_triple(m):
    mono = st.tuples(*[st.integers(0, 4)] * m)
    ix = st.builds(indexed, mono, st.integers(1, 2))
    return st.tuples(ix, ix, ix)


@given(st.integers(1, 3).flatmap(_indexed_triple))
def test_orderly_total_order(t):
    a, b, c = t
    ab, ba = cmp_orderly(a, b), cmp_orderly(b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
    if cmp_orderly(a, b) <= 0 and cmp_orderly(b, c) <= 0:
        assert cmp_orderly(a, c) <= 0


@given(st.integers(1, 3).flatmap(_indexed_triple))
def test_product_refines_into_orderly(t):
    a, b, _ = t
    if leq_product(a, b):
        assert cmp_orderly(a, b) <= 0


@pytest.mark.parametrize("m", range(1, 6))
def test_slice_sizes(m):
    for d in range(13):
        if comb(m - 1 + d, d) > 100_000:
            continue
        sl = degree_slice(m, d)
        assert len(sl) == comb(m - 1 + d, d)
        assert len(set(sl)) == len(sl)
        keys = [orderly_key(x) for x in sl]
        assert keys == sorted(keys, reverse=True)


def _antichains(m, r):
    pool = [x for d in range(r + 1) for x in degree_slice(m, d)]
    return st.lists(st.sampled_from(pool), max_size=6, unique=True).map(
        lambda xs: [x for x in xs if not any(y != x and all(u <= v for u, v in zip(y, x)) for y in xs)]
    )


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(st.just(m), st.integers(0, 4))).flatmap(
    lambda mr: st.tuples(st.just(mr[1]), _antichains(*mr))))
def test_gamma_within_twice_r(arg):
    r, xs = arg
    seq = AntichainSequence.from_lists(xs)
    for a, b in itertools.combinations(seq, 2):
        assert not leq_product(a, b) and not leq_product(b, a)
    assert all(degree(g) <= 2 * r for g in gamma(seq))
