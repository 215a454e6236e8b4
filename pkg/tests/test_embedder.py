from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlayer.colorings import EdgeColoring, NotNiceError
from hyperlayer.cube import from_bits, hypercube_graph, mask_of
from hyperlayer.embedder import (
    LayerEmbedding, NotPartite, check_partite, combine_component_embeddings, decide_layered,
    embed_from_very_nice, embed_in_cube, verify_cube_embedding, verify_layer_embedding,
)
from hyperlayer.gallery import cycle, g8, star, theta
from hyperlayer.graph import Graph, is_connected
from hyperlayer.subdivisions import (
    embed_odd_subdivision_complete, odd_complete_spec, odd_partition,
)
from oracles import is_layered_by_search
from strategies import layered_graphs


def test_embed_c6_from_coloring():
    g = cycle(6)
    for root in range(6):
        emb = embed_from_very_nice(g, EdgeColoring(g, (1, 2, 3, 1, 2, 3)), root)
        assert emb.N == 3 and len(set(emb.images)) == 6
        assert emb.layers() == {1, 2}
        assert verify_layer_embedding(g, emb).ok


def test_embed_single_edge():
    g = Graph(2, [(0, 1)])
    emb = embed_from_very_nice(g, EdgeColoring(g, (1,)))
    assert emb.images[0] in (0, 1) and emb.images[0] ^ emb.images[1] == 1


def test_c4_nice_coloring_spans_three_layers():
    g = cycle(4)
    emb = embed_from_very_nice(g, EdgeColoring(g, (1, 2, 1, 2)))
    rep = verify_layer_embedding(g, emb)
    assert not rep.ok and rep.violation == "spans more than two consecutive layers"
    assert verify_cube_embedding(g, emb).ok


def test_not_nice_coloring_is_rejected():
    g = cycle(4)
    with pytest.raises(NotNiceError):
        embed_from_very_nice(g, EdgeColoring(g, (1, 2, 3, 4)))


def test_verify_examples():
    assert verify_layer_embedding(odd_complete_spec(3, 1).graph, embed_odd_subdivision_complete(3, 1)).ok
    dup = LayerEmbedding(3, 2, (1, 3, 3))
    assert verify_layer_embedding(Graph(3, [(0, 1), (1, 2)]), dup).violation == "injectivity"
    q2 = hypercube_graph(2)
    rep = verify_layer_embedding(q2, LayerEmbedding(2, 2, tuple(range(4))))
    assert rep.violation == "spans more than two consecutive layers"


def test_decide_layered_examples():
    emb = decide_layered(cycle(6))
    assert emb is not None and emb.N == 3 and verify_layer_embedding(cycle(6), emb).ok
    assert decide_layered(cycle(4)) is None
    assert decide_layered(g8()) is None
    assert decide_layered(theta(3, 3, 3)) is None
    k13 = star(3)
    emb = decide_layered(k13)
    assert emb.N == 3 and emb.layers() == {0, 1}


def test_disconnected_graphs_are_combined():
    g = Graph(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7)])
    emb = decide_layered(g)
    assert emb is not None and verify_layer_embedding(g, emb).ok
    h = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])
    assert decide_layered(h) is None


def test_combine_components_keeps_layers():
    a = LayerEmbedding(2, 1, (0, 1))
    b = LayerEmbedding(3, 2, (1, 3, 2))
    emb = combine_component_embeddings([([0, 1], a), ([2, 3, 4], b)], 5)
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    assert verify_layer_embedding(g, emb).ok


def test_partite_c8():
    g = cycle(8)
    uppers = ["12", "23", "34", "14"]
    lowers = ["2", "3", "4", "1"]
    seq = []
    for up, lo in zip(uppers, lowers):
        seq += [mask_of(map(int, up)), mask_of(map(int, lo))]
    seq = seq[-1:] + seq[:-1]
    emb = LayerEmbedding(4, 2, tuple(seq))
    assert verify_layer_embedding(g, emb).ok
    cert = check_partite(emb, [[1, 3], [2, 4]])
    assert cert.sizes == (2, 2)
    with pytest.raises(NotPartite) as info:
        check_partite(emb, [[1, 2], [3, 4]])
    assert info.value.image == mask_of([1, 2])


def test_partite_t3_k3():
    t, k = 3, 1
    emb = embed_odd_subdivision_complete(t, k)
    cert = check_partite(emb, odd_partition(t, k))
    assert cert.sizes == (3, 3)


def test_partition_must_cover_ground_set():
    with pytest.raises(ValueError):
        check_partite(LayerEmbedding(2, 1, (0, 1)), [[1]])


def test_g8_is_cubical():
    emb = embed_in_cube(g8(), 5)
    assert emb is not None and verify_cube_embedding(g8(), emb).ok
    assert embed_in_cube(g8(), 3) is None  # 14 vertices cannot fit in Q3


@settings(max_examples=60, deadline=None)
@given(layered_graphs())
def test_decide_layered_finds_embeddings_of_layered_graphs(data):
    g, _ = data
    emb = decide_layered(g)
    assert emb is not None
    assert verify_layer_embedding(g, emb).ok


@st.composite
def tiny_connected_graphs(draw):
    n = draw(st.integers(2, 6))
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    extra = [(i, j) for i in range(n) for j in range(i) if (i, j) not in edges]
    edges += draw(st.lists(st.sampled_from(extra), unique=True, max_size=3)) if extra else []
    return Graph(n, edges)


@settings(max_examples=60, deadline=None)
@given(tiny_connected_graphs())
def test_decide_layered_matches_exhaustive_search(g):
    assert is_connected(g)
    emb = decide_layered(g)
    assert (emb is not None) == is_layered_by_search(g.n, g.edges, min(g.m, 6))
    if emb is not None:
        assert verify_layer_embedding(g, emb).ok


def test_json_round_trip():
    emb = decide_layered(cycle(6))
    assert LayerEmbedding.from_json(emb.to_json()) == emb
    with pytest.raises(ValueError):
        LayerEmbedding.from_json({"N": 3, "k": 2, "map": {"0": "01"}})
    assert from_bits("100") == 1
