"""Nice and very nice edge-colorings.

A coloring is *nice* when every cycle sees every color an even number of times
and every nonempty path sees some color an odd number of times.  It is *very
nice* when, in addition, any path joining two edges of the same color and
avoiding that color has even length.  Nice colorings certify cubical graphs;
very nice ones certify graphs living in a single edge layer.

Niceness is decided on a cycle basis: color parities add over the binary cycle
space, so checking the fundamental cycles covers all cycles.  Once the cycle
condition holds, every u-v path has the same parity vector, namely the XOR of
the tree-path signatures of u and v, so the path condition is exactly
injectivity of the signature map within each component.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, bfs_order, bipartition, components, cycle_basis, tree_path
from .search import Budget, BudgetExhausted  # noqa: F401  (re-exported)


class PartialColoringError(ValueError):
    pass


class NotNiceError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    graph: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        if len(colors) != self.graph.m:
            raise PartialColoringError(f"{len(colors)} colors for {self.graph.m} edges")
        for i, c in enumerate(colors):
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise PartialColoringError(f"edge {i} has no valid color ({c!r})")
        if colors and set(colors) != set(range(1, max(colors) + 1)):
            raise ValueError("color ids must be 1..k without gaps; use EdgeColoring.normalized")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def normalized(cls, graph: Graph, colors: Sequence) -> EdgeColoring:
        """Relabel arbitrary hashable colors to 1..k, preserving their sorted order."""
        colors = list(colors)
        if len(colors) != graph.m or any(c is None for c in colors):
            raise PartialColoringError(f"coloring is not total on the {graph.m} edges")
        rank = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(graph, tuple(rank[c] for c in colors))

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    def __getitem__(self, edge_id: int) -> int:
        return self.colors[edge_id]

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_index(u, v)]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, c in enumerate(self.colors):
            out.setdefault(c, []).append(i)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def to_json(self) -> dict:
        return {"edges": [list(e) for e in self.graph.edges], "colors": list(self.colors)}

    @classmethod
    def from_json(cls, graph: Graph, data: dict) -> EdgeColoring:
        edges, colors = data["edges"], data["colors"]
        if len(edges) != len(colors):
            raise PartialColoringError("edges and colors differ in length")
        by_edge = {}
        for (u, v), c in zip(edges, colors):
            by_edge[(min(u, v), max(u, v))] = c
        missing = [e for e in graph.edges if e not in by_edge]
        if missing:
            raise PartialColoringError(f"no color for edge {missing[0]}")
        return cls.normalized(graph, [by_edge[e] for e in graph.edges])


class Verdict(enum.Enum):
    NICE = "nice"
    VERY_NICE = "very nice"
    NOT_NICE = "not nice"
    NICE_NOT_VERY_NICE = "nice, not very nice"


@dataclass(frozen=True)
class Witness:
    """A concrete violation.

    kind ``"cycle"``: closed walk ``vertices`` with some color odd.
    kind ``"path"``: path ``vertices`` where every color is even.
    kind ``"odd_avoiding_path"``: odd path ``vertices`` between endpoints of the
    distinct edges ``edges`` (both of ``color``), using no edge of ``color``.
    """

    kind: str
    vertices: tuple[int, ...]
    color: int | None = None
    edges: tuple[int, int] | None = None


@dataclass(frozen=True)
class NicenessReport:
    verdict: Verdict
    witness: Witness | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.NICE, Verdict.VERY_NICE)


def _color_parity(c: EdgeColoring, edge_ids) -> int:
    p = 0
    for i in edge_ids:
        p ^= 1 << c.colors[i]
    return p


def _walk_edges(g: Graph, walk: Sequence[int], closed: bool) -> list[int]:
    ids = [g.edge_index(a, b) for a, b in zip(walk, walk[1:])]
    if closed:
        ids.append(g.edge_index(walk[-1], walk[0]))
    return ids


def witness_violates(g: Graph, c: EdgeColoring, w: Witness) -> bool:
    """Re-check a witness against the definitions, independently of how it was found."""
    vs = w.vertices
    if w.kind == "cycle":
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        if not all(g.has_edge(a, b) for a, b in zip(vs, vs[1:] + vs[:1])):
            return False
        return _color_parity(c, _walk_edges(g, vs, True)) != 0
    if w.kind == "path":
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        if not all(g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        return _color_parity(c, _walk_edges(g, vs, False)) == 0
    if w.kind == "odd_avoiding_path":
        e1, e2 = w.edges
        if e1 == e2 or c.colors[e1] != w.color or c.colors[e2] != w.color:
            return False
        if len(set(vs)) != len(vs) or (len(vs) - 1) % 2 == 0:
            return False
        if vs[0] not in g.edges[e1] or vs[-1] not in g.edges[e2]:
            return False
        if not all(g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
            return False
        return all(c.colors[i] != w.color for i in _walk_edges(g, vs, False))
    raise ValueError(f"unknown witness kind {w.kind!r}")


def signatures(g: Graph, c: EdgeColoring) -> list[int]:
    """Color-parity vector (bit j = color j) of the BFS-tree path from each component root."""
    sig = [0] * g.n
    for comp in components(g):
        order, parent, _ = bfs_order(g, comp[0])
        for v in order[1:]:
            p = parent[v]
            sig[v] = sig[p] ^ (1 << c.colors[g.edge_index(p, v)])
    return sig


def check_nice(g: Graph, c: EdgeColoring) -> NicenessReport:
    if c.graph is not g and c.graph != g:
        raise PartialColoringError("coloring belongs to a different graph")
    basis = cycle_basis(g)
    for e, cyc in zip(basis.non_tree, basis.cycles):
        if _color_parity(c, cyc):
            u, v = g.edges[e]
            walk = tree_path(basis.parent, basis.depth, u, v)
            return NicenessReport(Verdict.NOT_NICE, Witness("cycle", tuple(walk)))
    sig = signatures(g, c)
    for comp in components(g):
        seen: dict[int, int] = {}
        for v in comp:
            if sig[v] in seen:
                walk = tree_path(basis.parent, basis.depth, seen[sig[v]], v)
                return NicenessReport(Verdict.NOT_NICE, Witness("path", tuple(walk)))
            seen[sig[v]] = v
    return NicenessReport(Verdict.NICE)


def find_odd_avoiding_path(g: Graph, c: EdgeColoring) -> Witness | None:
    """Search the very-nice condition directly, color by color.

    Assumes ``g`` bipartite.  Removing color j, two endpoints of distinct
    j-edges in one component with opposite BFS parity are joined by an odd
    j-free path.
    """
    classes = c.classes()
    for j in sorted(classes):
        cls_ids = set(classes[j])
        comp = [-1] * g.n
        parity = [0] * g.n
        parent = [-1] * g.n
        for s in range(g.n):
            if comp[s] >= 0:
                continue
            comp[s] = s
            q = deque([s])
            while q:
                u = q.popleft()
                for w in g.adj[u]:
                    if comp[w] < 0 and g.edge_index(u, w) not in cls_ids:
                        comp[w] = s
                        parity[w] = parity[u] ^ 1
                        parent[w] = u
                        q.append(w)
        first: dict[tuple[int, int], tuple[int, int]] = {}
        for e in sorted(cls_ids):
            for w in g.edges[e]:
                key = (comp[w], parity[w])
                other = first.get((comp[w], parity[w] ^ 1))
                if other is not None and other[1] != e:
                    path = _forest_path(parent, other[0], w)
                    return Witness("odd_avoiding_path", tuple(path), j, (other[1], e))
                first.setdefault(key, (w, e))
    return None


def _forest_path(parent: Sequence[int], u: int, v: int) -> list[int]:
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    pos = {x: i for i, x in enumerate(up)}
    right = [v]
    while right[-1] not in pos:
        right.append(parent[right[-1]])
    return up[: pos[right[-1]] + 1] + right[-2::-1]


def check_very_nice(g: Graph, c: EdgeColoring) -> NicenessReport:
    """Very-niceness via the constructive embedding: each component must land in two layers."""
    from .embedder import embed_from_very_nice, verify_layer_embedding

    rep = check_nice(g, c)
    if not rep.ok:
        return rep
    for comp in components(g):
        sub, subc = _component_subgraph(g, c.colors, comp)
        emb = embed_from_very_nice(sub, subc, root=0)
        if not verify_layer_embedding(sub, emb).ok:
            w = find_odd_avoiding_path(g, c)
            if w is None:
                raise AssertionError("two-layer check and path search disagree")
            return NicenessReport(Verdict.NICE_NOT_VERY_NICE, w, {"component_root": comp[0]})
    return NicenessReport(Verdict.VERY_NICE)


def _component_subgraph(g: Graph, colors: Sequence[int], comp: Sequence[int]) -> tuple[Graph, EdgeColoring]:
    index = {v: i for i, v in enumerate(comp)}
    ids = [i for i, (u, v) in enumerate(g.edges) if u in index]
    sub = Graph(len(comp), [(index[g.edges[i][0]], index[g.edges[i][1]]) for i in ids])
    return sub, EdgeColoring.normalized(sub, [colors[i] for i in ids])


# ----------------------------------------------------------------------------
# search


def _search(g: Graph, max_colors: int | None, budget: int | None, very: bool) -> EdgeColoring | None:
    side = bipartition(g)
    if side is None:
        return None
    limit = g.m if max_colors is None else min(max_colors, g.m)
    counter = Budget(budget)
    colors = [0] * g.m
    for comp in components(g):
        if len(comp) > 1 and not _search_component(g, comp, side, limit, counter, very, colors):
            return None
    col = EdgeColoring(g, tuple(colors))
    return col


def _search_component(g, comp, side, limit, counter, very, colors) -> bool:
    order, parent, _ = bfs_order(g, comp[0])
    pos = {v: i for i, v in enumerate(order)}
    tree_edge = [g.edge_index(parent[v], v) if i else -1 for i, v in enumerate(order)]
    back = [[(w, g.edge_index(v, w)) for w in g.adj[v] if pos[w] < i and w != parent[v]]
            for i, v in enumerate(order)]
    sig = {order[0]: 0}
    used = {0}
    req: dict[int, int] = {}
    ncolors = 0

    def low_end_bit(e: int, j: int) -> int:
        x, y = g.edges[e]
        low = x if side[x] == side[order[0]] else y
        return sig[low] >> j & 1

    def rec(i: int) -> bool:
        nonlocal ncolors
        counter.tick()
        if i == len(order):
            if very:
                sub, subc = _component_subgraph(g, colors, comp)
                return check_very_nice(sub, subc).verdict is Verdict.VERY_NICE
            return True
        v = order[i]
        p = parent[v]
        for col in range(1, min(ncolors + 1, limit) + 1):
            s = sig[p] ^ (1 << col)
            if s in used:
                continue
            assigned = [(tree_edge[i], col)]
            ok = True
            for w, e in back[i]:
                d = s ^ sig[w]
                if d == 0 or d & (d - 1):
                    ok = False
                    break
                assigned.append((e, d.bit_length() - 1))
            if not ok:
                continue
            prev_n = ncolors
            sig[v] = s
            used.add(s)
            ncolors = max(ncolors, col)
            new_req = []
            for e, j in assigned:
                colors[e] = j
                if very:
                    b = low_end_bit(e, j)
                    if j in req:
                        if req[j] != b:
                            ok = False
                    else:
                        req[j] = b
                        new_req.append(j)
            if ok and rec(i + 1):
                return True
            for j in new_req:
                del req[j]
            for e, _ in assigned:
                colors[e] = 0
            ncolors = prev_n
            used.discard(s)
            del sig[v]
        return False

    return rec(1)


def find_nice_coloring(g: Graph, max_colors: int | None = None, budget: int | None = None) -> EdgeColoring | None:
    """A nice coloring with at most ``max_colors`` colors, or None when none exists.

    Raises BudgetExhausted when ``budget`` search nodes did not settle the question.
    """
    return _search(g, max_colors, budget, very=False)


def find_very_nice_coloring(g: Graph, budget: int | None = None) -> EdgeColoring | None:
    """A very nice coloring (so ``g`` is layered), or None when none exists."""
    return _search(g, None, budget, very=True)


# ----------------------------------------------------------------------------
# embeddings and color classes


def direction_coloring(g: Graph, emb) -> EdgeColoring:
    """Color every edge by the direction of its image edge."""
    from .cube import edge_direction
    from .embedder import verify_layer_embedding

    rep = verify_layer_embedding(g, emb)
    if not rep.ok:
        raise ValueError(f"embedding does not verify: {rep.violation}")
    dirs = [edge_direction(emb.images[u], emb.images[v]) for u, v in g.edges]
    return EdgeColoring.normalized(g, dirs)


@dataclass(frozen=True)
class ClassCheck:
    is_cut: bool
    is_induced_matching: bool


def color_class_cut_check(g: Graph, c: EdgeColoring) -> dict[int, ClassCheck]:
    base = len(components(g))
    out = {}
    for j, ids in sorted(c.classes().items()):
        rest = set(range(g.m)) - set(ids)
        cut = len(components(g.edge_subgraph(rest))) > base
        ends = [v for i in ids for v in g.edges[i]]
        matching = len(set(ends)) == len(ends)
        if matching:
            endset = set(ends)
            own = {g.edges[i] for i in ids}
            matching = all(e in own for e in g.edges if e[0] in endset and e[1] in endset)
        out[j] = ClassCheck(cut, matching)
    return out
