"""Small immutable undirected simple graphs and the cycle tools built on them.

Vertices are ``0..n-1``.  Edges are stored as ``(u, v)`` with ``u < v`` in the
order they were given, so per-edge data (colorings) can be kept as parallel
sequences indexed like ``graph.edges``.
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class Graph:
    __slots__ = ("n", "edges", "labels", "adj", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise GraphError("negative vertex count")
        norm = []
        index = {}
        adj = [[] for _ in range(n)]
        for i, e in enumerate(edges):
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"edge {i} is a loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise GraphError(f"edge {i} = {key} duplicates edge {index[key]}")
            index[key] = len(norm)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise GraphError(f"{len(labels)} labels for {n} vertices")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.labels: tuple[str, ...] | None = labels
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabeled(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order is kept."""
        labels = None
        if self.labels is not None:
            labels = [""] * self.n
            for v, pv in enumerate(perm):
                labels[pv] = self.labels[v]
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges], labels)

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Graph:
        return Graph(self.n, [self.edges[i] for i in sorted(set(edge_ids))], self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and set(self.edges) == set(other.edges)
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ----------------------------------------------------------------------------
# traversal


def bfs_order(g: Graph, root: int) -> tuple[list[int], dict[int, int], dict[int, int]]:
    """BFS from ``root``: (visit order, parent map, depth map)."""
    parent = {root: -1}
    depth = {root: 0}
    order = [root]
    q = deque([root])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                depth[w] = depth[u] + 1
                order.append(w)
                q.append(w)
    return order, parent, depth


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of connected components, each in BFS order from its least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if not seen[s]:
            order, _, _ = bfs_order(g, s)
            for v in order:
                seen[v] = True
            out.append(order)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def distances(g: Graph, root: int, allowed: Sequence[bool] | None = None) -> list[float]:
    dist = [INF] * g.n
    dist[root] = 0
    q = deque([root])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] == INF and (allowed is None or allowed[w]):
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def bipartition(g: Graph) -> list[int] | None:
    """Side (0/1) of every vertex, 0 at each component's least vertex; None if an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = side[u] ^ 1
                    q.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INF
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        q = deque([r])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# ----------------------------------------------------------------------------
# cycle space


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a BFS spanning forest.

    ``cycles[i]`` is the edge-id set of the cycle closed by non-tree edge
    ``non_tree[i]``.
    """

    parent: tuple[int, ...]
    depth: tuple[int, ...]
    roots: tuple[int, ...]
    tree_edges: frozenset[int]
    non_tree: tuple[int, ...]
    cycles: tuple[frozenset[int], ...]

    def __len__(self) -> int:
        return len(self.cycles)


def tree_path(parent: Sequence[int], depth: Sequence[int], u: int, v: int) -> list[int]:
    """Vertex path u .. v in the forest given by ``parent``/``depth``."""
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u = parent[u]
        v = parent[v]
        left.append(u)
        right.append(v)
    right.pop()
    return left + right[::-1]


def path_edges(g: Graph, walk: Sequence[int], closed: bool = False) -> list[int]:
    ids = [g.edge_index(a, b) for a, b in zip(walk, walk[1:])]
    if closed and len(walk) > 1:
        ids.append(g.edge_index(walk[-1], walk[0]))
    return ids


def cycle_basis(g: Graph) -> CycleBasis:
    parent = [-1] * g.n
    depth = [0] * g.n
    roots = []
    tree = set()
    for comp in components(g):
        r = comp[0]
        roots.append(r)
        _, par, dep = bfs_order(g, r)
        for v, p in par.items():
            parent[v] = p
            depth[v] = dep[v]
            if p >= 0:
                tree.add(g.edge_index(v, p))
    non_tree = tuple(i for i in range(g.m) if i not in tree)
    cycles = []
    for i in non_tree:
        u, v = g.edges[i]
        walk = tree_path(parent, depth, u, v)
        cycles.append(frozenset(path_edges(g, walk, closed=True)))
    return CycleBasis(tuple(parent), tuple(depth), tuple(roots), frozenset(tree), non_tree, tuple(cycles))


def cycle_space_dimension(g: Graph) -> int:
    return g.m - g.n + len(components(g))


# ----------------------------------------------------------------------------
# fixed-length cycles


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the least vertex is first and its smaller neighbour second."""
    c = list(cycle)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def _cycles_from(adj: Sequence[Sequence[int]], n: int, s: int, length: int) -> list[tuple[int, ...]]:
    # Only vertices > s may appear; BFS distance to s inside that set bounds the remaining walk.
    dist = [INF] * n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        for w in adj[u]:
            if w > s and dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    out = []
    path = [s]
    on_path = {s}
    last = length - 1

    def extend(u: int, d: int) -> None:
        if d == last:
            if s in adj[u] and path[1] < u:
                out.append(tuple(path))
            return
        rem = length - d - 1
        for w in adj[u]:
            if w > s and w not in on_path and dist[w] <= rem:
                path.append(w)
                on_path.add(w)
                extend(w, d + 1)
                path.pop()
                on_path.discard(w)

    extend(s, 0)
    return out


def _cycles_job(args):
    adj, n, starts, length = args
    out = []
    for s in starts:
        out.extend(_cycles_from(adj, n, s, length))
    return out


def cycles_of_length(g: Graph, length: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Every simple cycle with ``length`` edges, once each, canonical and sorted."""
    if length < 3:
        raise ValueError("cycles have length >= 3")
    adj = [set(a) for a in g.adj]
    starts = [s for s in range(g.n) if len(adj[s]) >= 2]
    if workers <= 1 or len(starts) < 2:
        out = _cycles_job((adj, g.n, starts, length))
    else:
        chunks = [starts[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            out = [c for part in ex.map(_cycles_job, [(adj, g.n, ch, length) for ch in chunks]) for c in part]
    out.sort()
    return out


def cycle_edge_set(g: Graph, cycle: Sequence[int]) -> frozenset[int]:
    return frozenset(path_edges(g, cycle, closed=True))


# ----------------------------------------------------------------------------
# I/O


def graph_to_json(g: Graph) -> dict:
    d = {"vertices": g.n}
    if g.labels is not None:
        d["labels"] = list(g.labels)
    d["edges"] = [list(e) for e in g.edges]
    return d


def _edge_line(text: str, i: int) -> int | None:
    start = text.find('"edges"')
    if start < 0:
        return None
    for k, m in enumerate(re.finditer(r"\[\s*-?\d+\s*,\s*-?\d+\s*\]", text[start:])):
        if k == i:
            return text.count("\n", 0, start + m.start()) + 1
    return None


def graph_from_json(data: dict | str) -> Graph:
    text = data if isinstance(data, str) else None
    if text is not None:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphFormatError('expected an object with "vertices" and "edges"')
    n = data["vertices"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError('"vertices" must be a non-negative integer')
    edges = data["edges"]
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"edge {i} is not a pair of integers", text and _edge_line(text, i))
    seen = {}
    for i, (u, v) in enumerate(edges):
        line = None
        if u == v:
            msg = f"edge {i} is a loop at {u}"
        elif not (0 <= u < n and 0 <= v < n):
            msg = f"edge {i} has an endpoint outside 0..{n - 1}"
        elif (min(u, v), max(u, v)) in seen:
            msg = f"edge {i} duplicates edge {seen[(min(u, v), max(u, v))]}"
        else:
            seen[(min(u, v), max(u, v))] = i
            continue
        if text is not None:
            line = _edge_line(text, i)
        raise GraphFormatError(msg, line)
    try:
        return Graph(n, edges, data.get("labels"))
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graph_to_json(g), indent=1) + "\n")


def load_graph(path: str | Path) -> Graph:
    return graph_from_json(Path(path).read_text())


def to_dot(g: Graph, name: str = "G", edge_labels: Sequence | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for i, (u, v) in enumerate(g.edges):
        extra = f' [label="{edge_labels[i]}"]' if edge_labels is not None else ""
        lines.append(f"  {u} -- {v}{extra};")
    lines.append("}")
    return "\n".join(lines) + "\n"
