from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlayer import c10
from hyperlayer.cube import PrefixColorer, hypercube_graph
from hyperlayer.graph import cycles_of_length
from oracles import covers_all_triples, hypercube_pairs, min_cover_bruteforce, simple_cycles


@pytest.fixture(scope="module")
def q5():
    cover = c10.build_cover(5)
    return cover, c10.combined_coloring(5, cover)


def test_minimum_cover_sizes():
    assert c10.minimum_cover_size(3) == min_cover_bruteforce(3) == 3
    assert c10.minimum_cover_size(4) == min_cover_bruteforce(4)
    assert covers_all_triples(3, [(1, 2, 3), (2, 3, 1), (3, 1, 2)])
    assert not covers_all_triples(3, [(1, 2, 3), (2, 3, 1)])


@pytest.mark.parametrize("n", range(3, 9))
def test_greedy_cover_is_valid(n):
    cover = c10.build_cover(n)
    assert cover.is_valid()
    assert covers_all_triples(n, cover.perms)
    assert cover.perms[0] == tuple(range(1, n + 1))


def test_cover_size_n6_within_fallback():
    assert len(c10.build_cover(6)) <= 3 * 13


def test_cover_is_reproducible():
    assert c10.build_cover(7) == c10.build_cover(7)
    assert c10.build_cover(7, seed=1).is_valid()


def test_combined_coloring_of_example_edge():
    cover = c10.build_cover(8)
    g = c10.combined_coloring(8, cover).of_star("01001*01")
    assert g[1] == 1
    assert g[0] == 0  # the edge joins layers 3 and 4: edge layer 4, even


def test_layer_parity_alternates():
    for lower in range(32):
        assert c10.layer_parity(lower) != c10.layer_parity(lower | 1 << 5)


def test_palette_and_largest_class(q5):
    cover, col = q5
    classes = col.classes()
    assert len(classes) <= col.palette_bound == 2 * 3 ** len(cover)
    color, edges = c10.largest_class(5, col)
    assert len(edges) >= 80 / col.palette_bound
    assert all(col(u, v) == color for u, v in edges)
    assert sum(len(e) for e in classes.values()) == 80


def test_no_monochromatic_c10_in_q5_by_oracle(q5):
    _, col = q5
    for edges in col.classes().values():
        verts = sorted({x for e in edges for x in e})
        idx = {v: i for i, v in enumerate(verts)}
        assert not simple_cycles(len(verts), [(idx[u], idx[v]) for u, v in edges], 10)


def test_verification_report_q5(q5):
    _, col = q5
    rep = c10.verify_no_mono_c10(5, col)
    assert rep.ok
    assert rep.cycles == len(simple_cycles(32, hypercube_pairs(5), 10))
    assert set(rep.class_counts) <= {"H1", "H2", "H3", "H4", "H5", "NotSingleLayer"}
    assert rep.class_counts["H5"] > 0 and rep.class_counts["H1"] > 0


@pytest.mark.parametrize("name", ["H1", "H2", "H3", "H4"])
def test_table3_cycles_classify(name):
    cyc, _ = c10.table3_cycle(name)
    assert len(cyc) == 10
    assert c10.classify_10cycle(cyc).verdict == name


def test_three_layer_cycle_has_nonconstant_parity():
    g = hypercube_graph(5)
    for cyc in cycles_of_length(g, 10)[:2000]:
        if len({v.bit_count() for v in cyc}) > 2:
            pars = {c10.layer_parity(lo) for lo, _ in c10.star_edges_of_cycle(cyc)}
            assert pars == {0, 1}


def test_padded_h4_is_monochromatic_for_one_order_only():
    n, cyc = c10.padded_h4_witness()
    stars = c10.star_edges_of_cycle(cyc)
    ident = PrefixColorer(tuple(range(1, n + 1)))
    assert len({ident(lo, d) for lo, d in stars}) == 1
    assert c10.classify_10cycle(cyc).verdict == "H4"
    col = c10.combined_coloring(n, c10.build_cover(n))
    assert len({col(lo, lo | 1 << (d - 1)) for lo, d in stars}) > 1


def test_malformed_cycles():
    with pytest.raises(c10.MalformedCycle):
        c10.classify_10cycle(list(range(9)))


def test_every_class_c10_free_small():
    cover = c10.build_cover(4)
    counts = c10.every_class_c10_free(4, c10.combined_coloring(4, cover))
    assert all(v == 0 for v in counts.values())


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.integers(0, 2 ** 32))
def test_any_seed_gives_valid_cover(n, seed):
    cover = c10.build_cover(n, seed=seed)
    assert covers_all_triples(n, cover.perms)


def test_indicator_and_star_condition():
    assert c10.indicator((1, 2, 3), 1, 3) == 1
    assert c10.indicator((3, 2, 1), 1, 3) == -1
    cyc, _ = c10.table3_cycle("H1")
    pairs = c10.same_direction_pairs(cyc)
    assert sorted(pairs) == [1, 2, 3, 4, 5] and all(len(v) == 2 for v in pairs.values())


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 6)), st.sampled_from(["H1", "H2", "H3", "H4"]))
def test_star_condition_means_equal_colors(pi, name):
    cyc, _ = c10.table3_cycle(name)
    col = PrefixColorer(tuple(pi))
    for d, (lo1, lo2) in c10.same_direction_pairs(cyc).items():
        assert c10.star_condition(tuple(pi), cyc, d) == (col(lo1, d) == col(lo2, d))
