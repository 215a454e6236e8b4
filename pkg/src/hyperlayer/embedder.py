"""Layer embeddings: construction from a very nice coloring, direct search, checks.

An embedding into edge layer ``k`` of Q_N sends every vertex to a subset of
[N] of size ``k - 1`` or ``k`` so that adjacent vertices differ in exactly one
coordinate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .colorings import EdgeColoring, NotNiceError, check_nice
from .cube import HypercubeVertex, bit, from_bits, members, to_bits
from .graph import Graph, bfs_order, bipartition, components, distances, is_connected
from .search import Budget


@dataclass(frozen=True)
class LayerEmbedding:
    """Vertex ``v`` goes to the subset with mask ``images[v]`` of [N].

    ``k`` names the edge layer: images are meant to have size k-1 or k.
    Nothing here is checked; use :func:`verify_layer_embedding`.
    """

    N: int
    k: int
    images: tuple[int, ...]

    def image(self, v: int) -> HypercubeVertex:
        return HypercubeVertex(self.N, self.images[v])

    def layers(self) -> set[int]:
        return {x.bit_count() for x in self.images}

    def to_json(self) -> dict:
        return {"N": self.N, "k": self.k,
                "map": {str(v): to_bits(x, self.N) for v, x in enumerate(self.images)}}

    @classmethod
    def from_json(cls, data: dict | str) -> LayerEmbedding:
        if isinstance(data, str):
            data = json.loads(data)
        N, k, mp = data["N"], data["k"], data["map"]
        images = [0] * len(mp)
        for key, s in mp.items():
            if len(s) != N:
                raise ValueError(f"image of {key} has length {len(s)}, expected {N}")
            images[int(key)] = from_bits(s)
        return cls(N, k, tuple(images))


@dataclass(frozen=True)
class EmbeddingReport:
    ok: bool
    violation: str | None = None
    detail: tuple = ()


def verify_layer_embedding(g: Graph, emb: LayerEmbedding) -> EmbeddingReport:
    if len(emb.images) != g.n:
        return EmbeddingReport(False, "size", (len(emb.images), g.n))
    for v, x in enumerate(emb.images):
        if x < 0 or x >> emb.N:
            return EmbeddingReport(False, "range", (v,))
    seen: dict[int, int] = {}
    for v, x in enumerate(emb.images):
        if x in seen:
            return EmbeddingReport(False, "injectivity", (seen[x], v))
        seen[x] = v
    for u, v in g.edges:
        if (emb.images[u] ^ emb.images[v]).bit_count() != 1:
            return EmbeddingReport(False, "adjacency", (u, v))
    layers = sorted(emb.layers())
    if len(layers) > 2 or (len(layers) == 2 and layers[1] - layers[0] != 1):
        return EmbeddingReport(False, "spans more than two consecutive layers", tuple(layers))
    for v, x in enumerate(emb.images):
        if x.bit_count() not in (emb.k - 1, emb.k):
            return EmbeddingReport(False, "layer", (v, x.bit_count(), emb.k))
    return EmbeddingReport(True)


def class_distance_parities(g: Graph, c: EdgeColoring, root: int) -> dict[int, int]:
    """Parity of the distance from ``root`` to each color class (edge distance = nearer endpoint)."""
    d = distances(g, root)
    best: dict[int, float] = {}
    for i, (u, v) in enumerate(g.edges):
        j = c.colors[i]
        best[j] = min(best.get(j, float("inf")), d[u], d[v])
    return {j: int(x) % 2 for j, x in best.items()}


def embed_from_very_nice(g: Graph, c: EdgeColoring, root: int = 0) -> LayerEmbedding:
    """Coordinates = colors; the root goes to the set of colors at odd distance.

    Each edge flips the coordinate of its color.  For a very nice coloring the
    result sits in layers |C-| and |C-|+1; for a merely nice one it is still an
    injective cube embedding but may spread over more layers.
    """
    if not is_connected(g):
        raise ValueError("embed_from_very_nice needs a connected graph")
    rep = check_nice(g, c)
    if not rep.ok:
        raise NotNiceError(f"coloring is not nice: {rep.witness}")
    par = class_distance_parities(g, c, root)
    minus = 0
    for j, p in par.items():
        if p:
            minus |= bit(j)
    images = [0] * g.n
    order, parent, _ = bfs_order(g, root)
    images[root] = minus
    for v in order[1:]:
        p = parent[v]
        images[v] = images[p] ^ bit(c.colors[g.edge_index(p, v)])
    return LayerEmbedding(c.num_colors, minus.bit_count() + 1, tuple(images))


def combine_component_embeddings(parts: Sequence[tuple[Sequence[int], LayerEmbedding]], n: int) -> LayerEmbedding:
    """Place component embeddings on disjoint coordinate blocks in one edge layer.

    Every component gets at least one private always-on padding coordinate, so
    images of different components never collide.
    """
    top = max(e.k for _, e in parts)
    images = [0] * n
    offset = 0
    for verts, emb in parts:
        pad = top - emb.k + 1
        pad_mask = ((1 << pad) - 1) << (offset + emb.N)
        for v, x in zip(verts, emb.images):
            images[v] = (x << offset) | pad_mask
        offset += emb.N + pad
    return LayerEmbedding(offset, top + 1, tuple(images))


def decide_layered(g: Graph, budget: int | None = None) -> LayerEmbedding | None:
    """Exhaustive search for an embedding of ``g`` into an edge layer.

    Returns None when none exists; raises BudgetExhausted when the node budget
    runs out first.  Directions are introduced in first-use order and the root
    is pinned to the lower layer (complementation covers the other case).
    """
    side = bipartition(g)
    if side is None:
        return None
    counter = Budget(budget)
    parts = []
    for comp in components(g):
        emb = _embed_component(g, comp, counter)
        if emb is None:
            return None
        parts.append((comp, emb))
    if not parts:
        return LayerEmbedding(0, 1, ())
    if len(parts) == 1:
        comp, emb = parts[0]
        images = [0] * g.n
        for v, x in zip(comp, emb.images):
            images[v] = x
        return LayerEmbedding(emb.N, emb.k, tuple(images))
    return combine_component_embeddings(parts, g.n)


def _embed_component(g: Graph, comp: Sequence[int], counter: Budget) -> LayerEmbedding | None:
    order, parent, depth = bfs_order(g, comp[0])
    if len(order) == 1:
        return LayerEmbedding(0, 1, (0,))
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in g.adj[v] if pos[w] < i and w != parent[v]] for i, v in enumerate(order)]
    img: dict[int, int] = {order[0]: 0}
    cap = g.m
    ndir = 0

    def rec(i: int) -> bool:
        nonlocal ndir
        counter.tick()
        if i == len(order):
            return True
        v = order[i]
        p = parent[v]
        up = depth[p] % 2 == 0  # p on the root's (lower) side
        for j in range(1, min(ndir + 1, cap) + 1):
            fresh = j > ndir
            b = bit(j)
            flipped = False
            if fresh and not up:
                # coordinate j was constant 0 so far; p must contain it, so set it everywhere
                for u in img:
                    img[u] |= b
                flipped = True
            x = img[p] ^ b
            ok = (x.bit_count() - img[order[0]].bit_count()) == depth[v] % 2
            ok = ok and x not in img.values()
            if ok:
                for w in back[i]:
                    if (x ^ img[w]).bit_count() != 1:
                        ok = False
                        break
            if ok:
                img[v] = x
                saved = ndir
                ndir = max(ndir, j)
                if rec(i + 1):
                    return True
                ndir = saved
                del img[v]
            if flipped:
                for u in img:
                    img[u] &= ~b
        return False

    if not rec(1):
        return None
    images = tuple(img[v] for v in comp)
    return LayerEmbedding(ndir, img[order[0]].bit_count() + 1, images)


# ----------------------------------------------------------------------------
# partite representations


class NotPartite(ValueError):
    def __init__(self, image: int, N: int, reason: str):
        super().__init__(f"upper image {to_bits(image, N)} {reason}")
        self.image = image


@dataclass(frozen=True)
class PartiteCertificate:
    parts: tuple[frozenset[int], ...]
    transversals: dict

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def check_partite(emb: LayerEmbedding, partition: Sequence[Sequence[int]]) -> PartiteCertificate:
    """Certify that every upper-layer image meets each part in exactly one coordinate."""
    parts = tuple(frozenset(p) for p in partition)
    covered = [x for p in parts for x in p]
    if sorted(covered) != list(range(1, emb.N + 1)):
        raise ValueError("partition must split [N] into disjoint parts")
    masks = [sum(bit(x) for x in p) for p in parts]
    patterns = {}
    for v, x in enumerate(emb.images):
        if x.bit_count() != emb.k:
            continue
        row = []
        for pm in masks:
            hit = x & pm
            if hit.bit_count() != 1:
                raise NotPartite(x, emb.N, f"meets a part in {hit.bit_count()} coordinates")
            row.append(members(hit)[0])
        patterns[v] = tuple(row)
    return PartiteCertificate(parts, patterns)


# ----------------------------------------------------------------------------
# plain cube embeddings (no layer constraint)


def verify_cube_embedding(g: Graph, emb: LayerEmbedding) -> EmbeddingReport:
    """Injective and adjacency-preserving; layers are not checked."""
    if len(emb.images) != g.n:
        return EmbeddingReport(False, "size", (len(emb.images), g.n))
    if len(set(emb.images)) != g.n:
        return EmbeddingReport(False, "injectivity")
    for u, v in g.edges:
        if (emb.images[u] ^ emb.images[v]).bit_count() != 1:
            return EmbeddingReport(False, "adjacency", (u, v))
    if any(x >> emb.N for x in emb.images):
        return EmbeddingReport(False, "range")
    return EmbeddingReport(True)


def embed_in_cube(g: Graph, N: int, budget: int | None = None) -> LayerEmbedding | None:
    """Backtracking search for a subgraph embedding of a connected graph into Q_N.

    The root goes to the empty set and directions are introduced in first-use
    order.  The returned object reuses :class:`LayerEmbedding` with k set to the
    largest image size; it need not be layered.
    """
    if not is_connected(g):
        raise ValueError("embed_in_cube needs a connected graph")
    counter = Budget(budget)
    order, parent, _ = bfs_order(g, 0)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in g.adj[v] if pos[w] < i and w != parent[v]] for i, v in enumerate(order)]
    img = {order[0]: 0}
    used = {0}

    def rec(i: int, ndir: int) -> bool:
        counter.tick()
        if i == len(order):
            return True
        v = order[i]
        base = img[parent[v]]
        for d in range(1, min(ndir + 1, N) + 1):
            x = base ^ bit(d)
            if x in used or any((x ^ img[w]).bit_count() != 1 for w in back[i]):
                continue
            img[v] = x
            used.add(x)
            if rec(i + 1, max(ndir, d)):
                return True
            used.discard(x)
            del img[v]
        return False

    if not rec(1, 0):
        return None
    images = tuple(img[v] for v in range(g.n))
    return LayerEmbedding(N, max(x.bit_count() for x in images), images)
