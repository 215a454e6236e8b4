"""Named small graphs: cycles, theta graphs, K_{2,3} and the girth-8 graph G8."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import ceil

from .colorings import EdgeColoring
from .cube import hypercube_graph
from .embedder import LayerEmbedding, decide_layered
from .graph import Graph


def cycle(L: int) -> Graph:
    if L < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(L, [(i, (i + 1) % L) for i in range(L)], labels=[f"v{i}" for i in range(L)])


def path(L: int) -> Graph:
    """Path with L edges."""
    return Graph(L + 1, [(i, i + 1) for i in range(L)])


def star(k: int) -> Graph:
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


@dataclass(frozen=True)
class ThetaSpec:
    lengths: tuple[int, ...]
    graph: Graph
    legs: tuple[tuple[int, ...], ...]  # full vertex sequence of each leg, from pole a to pole a'

    @property
    def poles(self) -> tuple[int, int]:
        return 0, 1


def theta_spec(lengths) -> ThetaSpec:
    """Vertices 0 and 1 are the poles; internal leg vertices follow leg by leg from pole 0."""
    lengths = tuple(lengths)
    if len(lengths) < 2:
        raise ValueError("a theta graph needs at least two legs")
    if any(l < 2 for l in lengths) or sorted(lengths)[1] < 2:
        raise ValueError("legs must have length >= 2 so the graph stays simple")
    labels = ["a", "a'"]
    edges = []
    legs = []
    nxt = 2
    for i, l in enumerate(lengths, start=1):
        inner = list(range(nxt, nxt + l - 1))
        nxt += l - 1
        labels.extend(f"p{i}.{j}" for j in range(1, l))
        seq = [0, *inner, 1]
        legs.append(tuple(seq))
        edges.extend(zip(seq, seq[1:]))
    return ThetaSpec(lengths, Graph(nxt, edges, labels=labels), tuple(legs))


def theta(*lengths: int) -> Graph:
    if len(lengths) == 1 and not isinstance(lengths[0], int):
        lengths = tuple(lengths[0])
    return theta_spec(lengths).graph


def k23() -> Graph:
    return theta(2, 2, 2)


def theta_recipe_coloring(t: int, m: int) -> EdgeColoring:
    """Nice coloring of t legs of length m >= 3.

    Both pole edges of leg i get color i; an inner edge whose nearer end is at
    distance k from pole a gets the shared color t + k.
    """
    if m < 3:
        raise ValueError("the recipe needs legs of length >= 3")
    spec = theta_spec([m] * t)
    g = spec.graph
    colors = [0] * g.m
    for i, leg in enumerate(spec.legs, start=1):
        for k, (u, v) in enumerate(zip(leg, leg[1:])):
            c = i if k in (0, m - 1) else t + k
            colors[g.edge_index(u, v)] = c
    return EdgeColoring.normalized(g, colors)


@dataclass(frozen=True)
class PoleAudit:
    t: int
    m: int
    layered: bool
    pole_distance: int | None

    @property
    def ok(self) -> bool:
        return not self.layered or self.pole_distance < self.m


def theta_pole_distance_audit(t: int, m: int, budget: int | None = None) -> PoleAudit:
    if t <= ceil(m / 2):
        raise ValueError("the audit needs t > ceil(m/2)")
    g = theta(*([m] * t))
    emb = decide_layered(g, budget)
    if emb is None:
        return PoleAudit(t, m, False, None)
    return PoleAudit(t, m, True, (emb.images[0] ^ emb.images[1]).bit_count())


@dataclass(frozen=True)
class G8Parts:
    graph: Graph
    a: int
    a_prime: int
    u: int
    u_prime: int


def g8_parts() -> G8Parts:
    """theta(4,4,4) with u next to a on leg 1 and u' next to a' on leg 2, joined by a path of length 4."""
    spec = theta_spec((4, 4, 4))
    base = spec.graph
    u = spec.legs[0][1]
    u_prime = spec.legs[1][-2]
    n = base.n
    extra = [n, n + 1, n + 2]
    seq = [u, *extra, u_prime]
    edges = list(base.edges) + list(zip(seq, seq[1:]))
    labels = [base.label(v) for v in range(n)] + ["w1", "w2", "w3"]
    labels[u], labels[u_prime] = "u", "u'"
    return G8Parts(Graph(n + 3, edges, labels=labels), 0, 1, u, u_prime)


def g8() -> Graph:
    return g8_parts().graph


# Found once by embed_in_cube(g8(), 5); vertex v goes to G8_Q5_IMAGES[v].
G8_Q5_IMAGES: tuple[int, ...] = (0, 10, 1, 3, 11, 2, 6, 14, 4, 12, 8, 5, 7, 15)


def g8_q5_embedding() -> LayerEmbedding:
    return LayerEmbedding(5, max(x.bit_count() for x in G8_Q5_IMAGES), G8_Q5_IMAGES)


def by_name(name: str) -> Graph:
    """Resolve names such as ``g8``, ``k23``, ``c6``, ``cycle:8``, ``theta:4,4,4``, ``q3``, ``path:3``."""
    s = name.strip().lower()
    if s == "g8":
        return g8()
    if s in ("k23", "k2,3"):
        return k23()
    m = re.fullmatch(r"(?:c|cycle:)(\d+)", s)
    if m:
        return cycle(int(m.group(1)))
    m = re.fullmatch(r"theta:(\d+(?:,\d+)+)", s)
    if m:
        return theta(*map(int, m.group(1).split(",")))
    m = re.fullmatch(r"q(\d+)", s)
    if m:
        return hypercube_graph(int(m.group(1)))
    m = re.fullmatch(r"path:(\d+)", s)
    if m:
        return path(int(m.group(1)))
    m = re.fullmatch(r"star:(\d+)", s)
    if m:
        return star(int(m.group(1)))
    raise KeyError(f"unknown gallery graph {name!r}")


GALLERY_NAMES = ("c4", "c6", "c8", "c12", "k23", "theta:3,3,3", "theta:3,3,3,3", "theta:4,4,4", "g8")
