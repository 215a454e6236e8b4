from __future__ import annotations

from itertools import combinations
from math import ceil, comb, log2

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlayer.compression import (
    CompressedSpec, SetFamilyPair, colex_rank, colex_unrank, compress, compressed_edge_count,
    e_exact, e_table, edge_count, first_colex, first_colex_masks, is_left_compressed, shift,
)
from oracles import e_oracle_table


def colex_key(s):
    return tuple(sorted(s, reverse=True))


def all_pairs(n, k):
    up = [x for x in range(1 << n) if x.bit_count() == k]
    lo = [x for x in range(1 << n) if x.bit_count() == k - 1]
    for a in range(1 << len(up)):
        A = tuple(x for i, x in enumerate(up) if a >> i & 1)
        for b in range(1 << len(lo)):
            yield SetFamilyPair(n, k, A, tuple(x for i, x in enumerate(lo) if b >> i & 1))


def brute_edges(A, B):
    return sum(1 for a in A for b in B if set(b) <= set(a))


def test_first_colex_examples():
    assert first_colex(4, 2, 3) == [(1, 2), (1, 3), (2, 3)]
    assert colex_rank({1, 2}) == 0


def test_first_colex_matches_sorting():
    for n in range(1, 7):
        for k in range(n + 1):
            ordered = sorted(combinations(range(1, n + 1), k), key=colex_key)
            assert first_colex(n, k, len(ordered)) == ordered


def test_rank_unrank_round_trip():
    for S in combinations(range(1, 7), 3):
        r = colex_rank(S)
        assert colex_unrank(r, 6, 3) == S
    assert sorted(colex_rank(S) for S in combinations(range(1, 7), 3)) == list(range(20))


def test_shift_examples():
    p = SetFamilyPair.from_sets(2, 1, [[2]], [])
    assert shift(p, 1, 2).sets()[0] == [(1,)]
    q = SetFamilyPair.from_sets(2, 1, [[1], [2]], [])
    assert shift(q, 1, 2) == q


def test_edge_count_examples():
    p = SetFamilyPair.from_sets(3, 1, [[1], [2], [3]], [[]])
    assert edge_count(p) == 3
    assert compressed_edge_count(CompressedSpec(4, 2, 6, 4)) == 12 == 2 * comb(4, 2)
    A, B = first_colex(5, 2, 3), first_colex(5, 1, 2)
    assert compressed_edge_count(CompressedSpec(5, 2, 3, 2)) == brute_edges(A, B) == 4


def test_compress_examples():
    p = SetFamilyPair.from_sets(3, 2, [[2, 3]], [[3]])
    q = compress(p)
    assert q.sets() == ([(1, 2)], [(1,)])
    fixed = CompressedSpec(4, 2, 4, 3).materialize()
    assert compress(fixed) == fixed.canonical()
    assert is_left_compressed(fixed)


def test_shift_and_compress_never_lose_edges_n4():
    for k in range(1, 5):
        for p in all_pairs(4, k):
            e = edge_count(p)
            for i, j in combinations(range(1, 5), 2):
                assert edge_count(shift(p, i, j)) >= e
            trace = []
            q = compress(p, trace)
            assert edge_count(q) >= e
            assert trace == sorted(trace)
            assert is_left_compressed(q)


def test_left_compressed_is_weaker_than_colex_compressed():
    # a star around coordinate 1 is shift-stable yet beats the colex prefix of equal sizes
    star = SetFamilyPair.from_sets(4, 2, [[1, 2], [1, 3], [1, 4]], [[1]])
    assert is_left_compressed(star)
    assert edge_count(star) == 3
    assert compressed_edge_count(CompressedSpec(4, 2, 3, 1)) == 2


def test_edge_count_matches_brute_force():
    for p in all_pairs(3, 2):
        A, B = p.sets()
        assert edge_count(p) == brute_edges(A, B)


def test_e_small_values():
    assert e_exact(2).value == 1
    r = e_exact(4)
    assert r.value == 3 and r.witness.k == 1


def test_e_matches_oracle():
    oracle = e_oracle_table(10, 5)
    table = e_table(10)
    assert [r.value for r in table] == [oracle[t] for t in range(1, 11)]
    assert not any(r.discrepancy for r in table)


def test_e_witnesses_realize_value():
    for r in e_table(10):
        w = r.witness
        assert w.N_A + w.N_B == r.t
        assert compressed_edge_count(w) == r.value
        assert r.value <= w.k * r.t


def test_e_is_monotone_and_within_envelope():
    vals = [r.value for r in e_table(12)]
    assert vals == sorted(vals)
    for t, v in enumerate(vals, start=1):
        assert v <= ceil(0.5 * t * log2(t)) + t


def test_bad_specs():
    with pytest.raises(ValueError):
        CompressedSpec(3, 2, 4, 0)
    with pytest.raises(ValueError):
        SetFamilyPair(3, 2, (1,), ())
    with pytest.raises(ValueError):
        e_exact(0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, 30))))
def test_first_colex_masks_are_increasing_and_of_size_k(data):
    k, m = data
    masks = first_colex_masks(k, m)
    assert all(x.bit_count() == k for x in masks)
    assert masks == sorted(set(masks))
    assert [colex_rank([i + 1 for i in range(x.bit_length()) if x >> i & 1]) for x in masks] == list(range(len(masks)))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(1, n),
    st.sets(st.integers(0, (1 << n) - 1)), st.sets(st.integers(0, (1 << n) - 1)))))
def test_compress_is_idempotent_and_keeps_sizes(data):
    n, k, A, B = data
    A = tuple(x for x in A if x.bit_count() == k)
    B = tuple(x for x in B if x.bit_count() == k - 1)
    p = SetFamilyPair(n, k, A, B)
    q = compress(p)
    assert (len(q.A), len(q.B)) == (len(A), len(B))
    assert compress(q) == q
    assert edge_count(q) >= edge_count(p)
