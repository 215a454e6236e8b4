"""Subdivided cliques and bicliques with explicit layer embeddings.

Coordinate layout (1-based) is fixed so that embeddings are reproducible:

* ``T_{2k+1}(K_t)``: block A_x = x_1..x_k for each branch vertex in order,
  then one coordinate b_e per edge of K_t in lexicographic order.  For k = 0
  the blocks are single coordinates and there are no b_e.
* ``T_{2k}(K_{t,t})``, k = 1: X | Y | q.  k = 2: X | Y | q1 q2 q3.
  k >= 3: A | B | c | S_e blocks of size k-1 per edge (edge order a-major).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cube import bit, to_bits
from .embedder import LayerEmbedding, PartiteCertificate, check_partite
from .graph import Graph


@dataclass(frozen=True)
class SubdivisionSpec:
    base: Graph
    k: int
    graph: Graph
    paths: tuple[tuple[int, ...], ...]  # subdivision vertices of each base edge, from its lower endpoint

    @property
    def branch_vertices(self) -> range:
        return range(self.base.n)


def subdivide(g: Graph, k: int) -> SubdivisionSpec:
    """Insert k new vertices into every edge of g.

    Branch vertices keep their ids; subdivision vertices of edge number i follow
    in path order and are labeled ``z<i>.<j>``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    labels = [g.label(v) for v in range(g.n)]
    edges = []
    paths = []
    nxt = g.n
    for ei, (u, v) in enumerate(g.edges):
        inner = list(range(nxt, nxt + k))
        nxt += k
        labels.extend(f"z{ei}.{j}" for j in range(1, k + 1))
        seq = [u, *inner, v]
        edges.extend(zip(seq, seq[1:]))
        paths.append(tuple(inner))
    h = Graph(nxt, edges, labels=labels)
    return SubdivisionSpec(g, k, h, tuple(paths))


def complete_graph(t: int) -> Graph:
    return Graph(t, list(combinations(range(t), 2)))


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def _assemble(spec: SubdivisionSpec, N: int, k: int, branch: list[int], inner: list[list[int]]) -> LayerEmbedding:
    images = [0] * spec.graph.n
    for v, x in enumerate(branch):
        images[v] = x
    for path, xs in zip(spec.paths, inner):
        for v, x in zip(path, xs):
            images[v] = x
    return LayerEmbedding(N, k, tuple(images))


# ----------------------------------------------------------------------------
# odd subdivisions of K_t


@dataclass(frozen=True)
class OddLayout:
    t: int
    k: int

    @property
    def N(self) -> int:
        return self.t if self.k == 0 else self.t * self.k + comb(self.t, 2)

    def x(self, v: int, i: int) -> int:
        """Coordinate x_i of branch vertex v (i is 1-based)."""
        return v * max(self.k, 1) + i

    def b(self, e: int) -> int:
        return self.t * self.k + e + 1

    def A(self, v: int) -> int:
        return sum(bit(self.x(v, i)) for i in range(1, max(self.k, 1) + 1))


def odd_complete_spec(t: int, k: int) -> SubdivisionSpec:
    return subdivide(complete_graph(t), 2 * k + 1)


def embed_odd_subdivision_complete(t: int, k: int) -> LayerEmbedding:
    if t < 1 or k < 0:
        raise ValueError("need t >= 1 and k >= 0")
    spec = odd_complete_spec(t, k)
    lay = OddLayout(t, k)
    branch = [lay.A(v) for v in range(t)]
    inner = []
    for e, (x, y) in enumerate(spec.base.edges):
        if k == 0:
            inner.append([branch[x] | branch[y]])
            continue
        be = bit(lay.b(e))
        z = [0] * (2 * k + 2)  # z[1..2k+1]
        z[1] = be | branch[x]
        for i in range(1, k + 1):
            z[2 * i] = z[2 * i - 1] & ~bit(lay.x(x, i))
            if i <= k - 1:
                z[2 * i + 1] = (z[2 * i - 1] & ~bit(lay.x(x, i))) | bit(lay.x(y, i))
        z[2 * k + 1] = be | branch[y]
        inner.append(z[1:])
    return _assemble(spec, lay.N, max(k, 1) + 1, branch, inner)


def odd_partition(t: int, k: int) -> list[list[int]]:
    """Parts {x_i : x} for i = 1..k and {b_e : e}."""
    lay = OddLayout(t, k)
    parts = [[lay.x(v, i) for v in range(t)] for i in range(1, k + 1)]
    parts.append([lay.b(e) for e in range(comb(t, 2))])
    return parts


def odd_partite_certificate(t: int, k: int) -> PartiteCertificate:
    if k < 1:
        raise ValueError("the partite representation needs k >= 1")
    return check_partite(embed_odd_subdivision_complete(t, k), odd_partition(t, k))


# ----------------------------------------------------------------------------
# even subdivisions of K_{t,t}


def even_bipartite_spec(t: int, k: int) -> SubdivisionSpec:
    return subdivide(complete_bipartite(t, t), 2 * k)


def even_dimension(t: int, k: int) -> int:
    if k == 1:
        return 2 * t + 1
    if k == 2:
        return 2 * t + 3
    return 2 * t + 1 + t * t * (k - 1)


def embed_even_subdivision_bipartite(t: int, k: int) -> LayerEmbedding:
    if t < 1 or k < 1:
        raise ValueError("need t >= 1 and k >= 1")
    spec = even_bipartite_spec(t, k)
    if k == 1:
        return _even_k1(spec, t)
    if k == 2:
        return _even_k2(spec, t)
    return _even_general(spec, t, k)


def _ends(spec: SubdivisionSpec, t: int):
    for u, v in spec.base.edges:
        yield u, v - t  # i-th vertex of A, j-th vertex of B (0-based)


def _even_k1(spec: SubdivisionSpec, t: int) -> LayerEmbedding:
    X = [bit(i) for i in range(1, t + 1)]
    Y = [bit(t + j) for j in range(1, t + 1)]
    q = bit(2 * t + 1)
    ally = sum(Y)
    fa = [X[i] | ally for i in range(t)]
    fb = [(ally & ~Y[j]) | q for j in range(t)]
    inner = []
    for i, j in _ends(spec, t):
        z1 = fa[i] & ~Y[j]
        inner.append([z1, z1 | q])
    return _assemble(spec, 2 * t + 1, t + 1, fa + fb, inner)


def _even_k2(spec: SubdivisionSpec, t: int) -> LayerEmbedding:
    X = [bit(i) for i in range(1, t + 1)]
    Y = [bit(t + j) for j in range(1, t + 1)]
    q1, q2, q3 = (bit(2 * t + r) for r in (1, 2, 3))
    ally = sum(Y)
    fa = [X[i] | ally | q3 for i in range(t)]
    fb = [(ally & ~Y[j]) | q1 | q2 for j in range(t)]
    inner = []
    for i, j in _ends(spec, t):
        z1 = fa[i] & ~Y[j]
        z2 = z1 | q1
        z3 = z2 & ~q3
        inner.append([z1, z2, z3, z3 | q2])
    return _assemble(spec, 2 * t + 3, t + 2, fa + fb, inner)


@dataclass(frozen=True)
class EvenLayout:
    t: int
    k: int

    def a(self, i: int) -> int:
        return i + 1

    def b(self, j: int) -> int:
        return self.t + j + 1

    @property
    def c(self) -> int:
        return 2 * self.t + 1

    def s(self, e: int, l: int) -> int:
        """Coordinate s_e^l, l in 1..k-1."""
        return 2 * self.t + 1 + e * (self.k - 1) + l


def _even_general(spec: SubdivisionSpec, t: int, k: int) -> LayerEmbedding:
    lay = EvenLayout(t, k)
    E = spec.base.m
    S = sum(bit(lay.s(e, 1)) for e in range(E))
    c = bit(lay.c)
    fa = [bit(lay.a(i)) | c | S for i in range(t)]
    fb = [bit(lay.b(j)) | S for j in range(t)]
    inner = []
    for e, (i, j) in enumerate(_ends(spec, t)):
        s = [0] + [bit(lay.s(e, l)) for l in range(1, k)]
        rest = S & ~s[1]
        a, b = bit(lay.a(i)), bit(lay.b(j))
        z = [0] * (2 * k + 1)
        z[1] = a | c | rest
        z[2] = z[1] | s[2]
        z[3] = c | s[2] | rest
        z[4] = b | c | s[2] | rest
        z[5] = b | s[2] | rest
        for r in range(1, k - 2):
            z[4 + 2 * r] = z[3 + 2 * r] | s[2 + r]
            z[5 + 2 * r] = z[4 + 2 * r] & ~s[1 + r]
        z[2 * k] = z[2 * k - 1] | s[1]
        inner.append(z[1:])
    return _assemble(spec, even_dimension(t, k), t * t + 2, fa + fb, inner)


def even_partition(t: int, k: int) -> list[list[int]]:
    """Parts A u B, {s_e^1, s_e^2, s_e^4, ...} per edge, and {c} with all odd s_e^l, l >= 3."""
    if k < 4 or k % 2:
        raise ValueError("the partite representation is defined for even k >= 4")
    lay = EvenLayout(t, k)
    parts = [[lay.a(i) for i in range(t)] + [lay.b(j) for j in range(t)]]
    odd = [lay.c]
    for e in range(t * t):
        parts.append([lay.s(e, l) for l in range(1, k) if l in (1, 2) or l % 2 == 0])
        odd.extend(lay.s(e, l) for l in range(3, k, 2))
    parts.append(odd)
    return parts


def even_partite_certificate(t: int, k: int) -> PartiteCertificate:
    return check_partite(embed_even_subdivision_bipartite(t, k), even_partition(t, k))


# ----------------------------------------------------------------------------
# reference tables

TABLE1 = {
    1: ["010", "110", "100", "101", "001"],
    2: ["01100", "11100", "10100", "10110", "10010", "10011", "00011"],
    3: ["0111000", "1111000", "1011000", "1011100", "1001100", "1001110", "1000110", "1000111", "0000111"],
}

TABLE2 = {
    3: ["10110", "10100", "10101", "00101", "01101", "01001", "01011", "01010"],
    4: ["101100", "101000", "101010", "001010", "011010", "010010", "010011", "010001", "010101", "010100"],
    5: ["1011000", "1010000", "1010100", "0010100", "0110100", "0100100", "0100110", "0100010",
        "0100011", "0100001", "0101001", "0101000"],
}


def table1_columns(k: int) -> list[int]:
    """b_e, x_1..x_k, y_1..y_k for the single edge of K_2."""
    lay = OddLayout(2, k)
    return [lay.b(0)] + [lay.x(0, i) for i in range(1, k + 1)] + [lay.x(1, i) for i in range(1, k + 1)]


def table2_columns(k: int) -> list[int]:
    """a, b, c, s_e^1..s_e^{k-1} for the single edge of K_{1,1}."""
    lay = EvenLayout(1, k)
    return [lay.a(0), lay.b(0), lay.c] + [lay.s(0, l) for l in range(1, k)]


def _restrict(x: int, cols: list[int]) -> str:
    return "".join("1" if x & bit(c) else "0" for c in cols)


def table_rows(table: int, k: int) -> list[str]:
    """Rows f(first branch), f(z_1), ..., f(last branch) restricted to the table's columns."""
    if table == 1:
        emb, spec, cols = embed_odd_subdivision_complete(2, k), odd_complete_spec(2, k), table1_columns(k)
    elif table == 2:
        emb, spec, cols = embed_even_subdivision_bipartite(1, k), even_bipartite_spec(1, k), table2_columns(k)
    else:
        raise ValueError(f"no table {table}")
    u, v = spec.base.edges[0]
    order = [u, *spec.paths[0], v]
    return [_restrict(emb.images[w], cols) for w in order]


@dataclass(frozen=True)
class TableMismatch:
    row: str
    expected: str
    got: str


@dataclass(frozen=True)
class FidelityReport:
    table: int
    k: int
    mismatches: tuple[TableMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def row_names(table: int, k: int) -> list[str]:
    first, last = ("x", "y") if table == 1 else ("a", "b")
    inner = 2 * k + 1 if table == 1 else 2 * k
    return [f"f({first})"] + [f"f(z{i})" for i in range(1, inner + 1)] + [f"f({last})"]


def table_fidelity_check(table: int, k: int) -> FidelityReport:
    ref = (TABLE1 if table == 1 else TABLE2).get(k)
    if ref is None:
        raise ValueError(f"table {table} has no column for k={k}")
    got = table_rows(table, k)
    bad = tuple(TableMismatch(name, want, have)
                for name, want, have in zip(row_names(table, k), ref, got) if want != have)
    if len(ref) != len(got):
        bad += (TableMismatch("row count", str(len(ref)), str(len(got))),)
    return FidelityReport(table, k, bad)


def column_names(table: int, k: int) -> list[str]:
    if table == 1:
        return ["b_e"] + [f"x{i}" for i in range(1, k + 1)] + [f"y{i}" for i in range(1, k + 1)]
    return ["a", "b", "c"] + [f"s{l}" for l in range(1, k)]


def render_table(table: int, ks: list[int] | None = None) -> str:
    """Aligned text with one block per k."""
    if ks is None:
        ks = sorted(TABLE1 if table == 1 else TABLE2)
    lines = []
    for k in ks:
        cols = column_names(table, k)
        lines.append(f"k={k}")
        lines.append("        " + " ".join(f"{c:>3}" for c in cols))
        for name, row in zip(row_names(table, k), table_rows(table, k)):
            lines.append(f"{name:<8}" + " ".join(f"{ch:>3}" for ch in row))
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def embedding_strings(emb: LayerEmbedding) -> list[str]:
    return [to_bits(x, emb.N) for x in emb.images]
