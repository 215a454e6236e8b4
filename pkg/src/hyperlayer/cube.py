"""Bit-level model of the hypercube Q_n.

A vertex of Q_n is a subset of [n] = {1, ..., n}.  Internally a subset is an
``int`` whose bit ``i - 1`` is set iff coordinate ``i`` belongs to the set.
String forms put coordinate 1 leftmost, so ``{1, 2, 4}`` in Q_5 prints as
``11010``.

An edge is stored by its lower endpoint and its direction (the coordinate in
which the endpoints differ).  Its star string carries ``1`` on the lower set,
``*`` on the direction and ``0`` elsewhere, e.g. ``110*0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_DIMENSION = 128


class DimensionMismatch(ValueError):
    pass


class StarParseError(ValueError):
    """Malformed star string; ``position`` is 1-based, or None for global problems."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (position {position})")
        self.position = position


def _check_dim(n: int) -> None:
    if not 0 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must lie in 0..{MAX_DIMENSION}, got {n}")


def bit(i: int) -> int:
    """Mask of coordinate ``i`` (1-based)."""
    return 1 << (i - 1)


def mask_of(subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def members(mask: int) -> tuple[int, ...]:
    """Coordinates of ``mask`` in increasing order."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def to_bits(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def from_bits(s: str) -> int:
    m = 0
    for i, ch in enumerate(s):
        if ch == "1":
            m |= 1 << i
        elif ch != "0":
            raise ValueError(f"bad character {ch!r} at position {i + 1} in {s!r}")
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def hamming(u: int | "HypercubeVertex", v: int | "HypercubeVertex") -> int:
    if isinstance(u, HypercubeVertex) or isinstance(v, HypercubeVertex):
        if not (isinstance(u, HypercubeVertex) and isinstance(v, HypercubeVertex)):
            raise TypeError("hamming() needs two vertices or two masks")
        if u.n != v.n:
            raise DimensionMismatch(f"Q_{u.n} vs Q_{v.n}")
        return (u.bits ^ v.bits).bit_count()
    return (u ^ v).bit_count()


@dataclass(frozen=True)
class HypercubeVertex:
    n: int
    bits: int

    def __post_init__(self):
        _check_dim(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in Q_{self.n}")

    @classmethod
    def from_subset(cls, n: int, subset: Iterable[int]) -> HypercubeVertex:
        subset = list(subset)
        for i in subset:
            if not 1 <= i <= n:
                raise ValueError(f"coordinate {i} outside [1, {n}]")
        return cls(n, mask_of(subset))

    @classmethod
    def from_string(cls, s: str) -> HypercubeVertex:
        return cls(len(s), from_bits(s))

    @property
    def layer(self) -> int:
        return self.bits.bit_count()

    def subset(self) -> tuple[int, ...]:
        return members(self.bits)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.bits >> (i - 1) & 1)

    def __str__(self) -> str:
        return to_bits(self.bits, self.n)

    def subset_str(self) -> str:
        return "{" + ",".join(map(str, self.subset())) + "}"

    def flip(self, i: int) -> HypercubeVertex:
        if not 1 <= i <= self.n:
            raise ValueError(f"direction {i} outside [1, {self.n}]")
        return HypercubeVertex(self.n, self.bits ^ bit(i))


def layer(v: HypercubeVertex | int) -> int:
    if isinstance(v, HypercubeVertex):
        return v.layer
    return v.bit_count()


@dataclass(frozen=True)
class StarEdge:
    """Edge of Q_n given by its lower endpoint and direction."""

    n: int
    lower: HypercubeVertex
    direction: int

    def __post_init__(self):
        if self.lower.n != self.n:
            raise DimensionMismatch(f"lower endpoint lives in Q_{self.lower.n}, edge in Q_{self.n}")
        if not 1 <= self.direction <= self.n:
            raise ValueError(f"direction {self.direction} outside [1, {self.n}]")
        if self.direction in self.lower:
            raise ValueError("direction must not belong to the lower endpoint")

    @classmethod
    def from_masks(cls, n: int, lower: int, direction: int) -> StarEdge:
        return cls(n, HypercubeVertex(n, lower), direction)

    @classmethod
    def between(cls, u: HypercubeVertex, v: HypercubeVertex) -> StarEdge:
        if u.n != v.n:
            raise DimensionMismatch(f"Q_{u.n} vs Q_{v.n}")
        diff = u.bits ^ v.bits
        if diff.bit_count() != 1:
            raise ValueError(f"{u} and {v} are not adjacent")
        lo = u if u.bits < v.bits else v
        return cls(u.n, lo, diff.bit_length())

    @property
    def upper(self) -> HypercubeVertex:
        return HypercubeVertex(self.n, self.lower.bits | bit(self.direction))

    @property
    def edge_layer(self) -> int:
        """Index k of the edge layer (between vertex layers k-1 and k)."""
        return self.lower.layer + 1

    def __str__(self) -> str:
        return star_string(self)


def star_string(e: StarEdge) -> str:
    chars = []
    for i in range(1, e.n + 1):
        if i == e.direction:
            chars.append("*")
        elif i in e.lower:
            chars.append("1")
        else:
            chars.append("0")
    return "".join(chars)


def parse_star(s: str) -> StarEdge:
    star = None
    lower = 0
    for pos, ch in enumerate(s, start=1):
        if ch == "*" or ch == "⋆":
            if star is not None:
                raise StarParseError("two stars", pos)
            star = pos
        elif ch == "1":
            lower |= bit(pos)
        elif ch != "0":
            raise StarParseError(f"bad character {ch!r}", pos)
    if star is None:
        raise StarParseError("no star")
    return StarEdge.from_masks(len(s), lower, star)


def _prefix_color_masks(lower: int, direction: int) -> int:
    below = lower & ((1 << (direction - 1)) - 1)
    pre = below.bit_count()
    suf = lower.bit_count() - pre
    return (pre - suf) % 3


def prefix_color(e: StarEdge) -> int:
    """(#1s left of the star - #1s right of it) mod 3, in {0, 1, 2}."""
    return _prefix_color_masks(e.lower.bits, e.direction)


def check_permutation(pi: Sequence[int], n: int) -> tuple[int, ...]:
    pi = tuple(pi)
    if len(pi) != n or sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"{pi} is not a permutation of [{n}]")
    return pi


def permuted_masks(lower: int, direction: int, pi: Sequence[int]) -> tuple[int, int]:
    """Lower set and direction of the edge read in the order pi(1), ..., pi(n)."""
    new = 0
    new_dir = 0
    for pos, src in enumerate(pi, start=1):
        if src == direction:
            new_dir = pos
        elif lower >> (src - 1) & 1:
            new |= 1 << (pos - 1)
    return new, new_dir


def prefix_color_permuted(e: StarEdge, pi: Sequence[int]) -> int:
    pi = check_permutation(pi, e.n)
    lower, d = permuted_masks(e.lower.bits, e.direction, pi)
    return _prefix_color_masks(lower, d)


class PrefixColorer:
    """Prefix coloring along a fixed coordinate order, precomputed for speed.

    ``colorer(lower, direction)`` equals ``prefix_color_permuted`` of that edge.
    """

    def __init__(self, pi: Sequence[int]):
        self.pi = tuple(pi)
        n = len(self.pi)
        check_permutation(self.pi, n)
        self.before = [0] * (n + 1)
        seen = 0
        for src in self.pi:
            self.before[src] = seen
            seen |= bit(src)

    def __call__(self, lower: int, direction: int) -> int:
        pre = (lower & self.before[direction]).bit_count()
        return (2 * pre - lower.bit_count()) % 3


# ----------------------------------------------------------------------------
# Q_n and its edge layers as abstract graphs


def cube_edges(n: int) -> Iterator[tuple[int, int]]:
    """Edges (lower, upper) of Q_n as masks, sorted by (lower, upper)."""
    _check_dim(n)
    for u in range(1 << n):
        for i in range(n):
            if not u >> i & 1:
                yield u, u | (1 << i)


def edge_direction(u: int, v: int) -> int:
    diff = u ^ v
    if diff.bit_count() != 1:
        raise ValueError(f"{u:b} and {v:b} are not adjacent")
    return diff.bit_length()


def hypercube_graph(n: int):
    """Q_n as a Graph; vertex id = subset mask, label = binary string."""
    from .graph import Graph

    _check_dim(n)
    if n > 20:
        raise ValueError("refusing to materialize Q_n for n > 20")
    labels = [to_bits(v, n) for v in range(1 << n)]
    return Graph(1 << n, list(cube_edges(n)), labels=labels)


def edge_layer_vertices(n: int, k: int) -> list[int]:
    """Masks of vertex layers k-1 and k (lower layer first, each increasing)."""
    if not 0 <= k <= n:
        raise ValueError(f"edge layer {k} out of range 0..{n}")
    lo = [v for v in range(1 << n) if v.bit_count() == k - 1]
    hi = [v for v in range(1 << n) if v.bit_count() == k]
    return lo + hi


def edge_layer_graph(n: int, k: int):
    """The k-th edge layer of Q_n with vertices relabeled 0..C(n,k-1)+C(n,k)-1.

    Labels hold the binary strings; ``graph.labels`` therefore recovers masks.
    """
    from .graph import Graph

    verts = edge_layer_vertices(n, k)
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        if v.bit_count() != k:
            continue
        for i in range(n):
            if v >> i & 1:
                edges.append((index[v ^ (1 << i)], index[v]))
    g = Graph(len(verts), edges, labels=[to_bits(v, n) for v in verts])
    assert g.m == k * comb(n, k)
    return g
