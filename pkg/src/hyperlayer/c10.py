"""A C10-free color class of Q_n from layer parity plus several prefix colorings.

Every edge gets the tuple g(e) = (g0, g_pi1, ..., g_pim) where g0 is the parity
of its edge layer and g_pi is the prefix coloring read along the permutation
pi.  When the permutations form a cover (for every a and every pair {b, c} not
containing a, some pi puts a before both), no 10-cycle of Q_n is
monochromatic, so every color class is C10-free.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .cube import PrefixColorer, check_permutation, cube_edges, edge_direction, hypercube_graph, parse_star
from .graph import cycles_of_length

DEFAULT_SEED = 20240917
POOL_SIZE = 64


# ----------------------------------------------------------------------------
# permutation covers


def _constraints(n: int):
    for a in range(1, n + 1):
        for b, c in combinations([x for x in range(1, n + 1) if x != a], 2):
            yield a, b, c


def _covered_by(pi: tuple[int, ...]) -> set[tuple[int, int, int]]:
    pos = {x: i for i, x in enumerate(pi)}
    return {(a, b, c) for a, b, c in _constraints(len(pi)) if pos[a] < pos[b] and pos[a] < pos[c]}


@dataclass(frozen=True)
class PermutationCover:
    n: int
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for p in self.perms:
            check_permutation(p, self.n)

    def __len__(self) -> int:
        return len(self.perms)

    def uncovered(self) -> list[tuple[int, int, int]]:
        got = set()
        for p in self.perms:
            got |= _covered_by(p)
        return [x for x in _constraints(self.n) if x not in got]

    def is_valid(self) -> bool:
        return not self.uncovered()

    def to_json(self) -> dict:
        return {"n": self.n, "perms": [list(p) for p in self.perms]}


def build_cover(n: int, seed: int = DEFAULT_SEED, pool: int = POOL_SIZE) -> PermutationCover:
    """Greedy cover: each round keeps the candidate covering most open constraints."""
    if n < 3:
        raise ValueError("covers are defined for n >= 3")
    rng = random.Random(seed)
    todo = set(_constraints(n))
    chosen: list[tuple[int, ...]] = []
    base = list(range(1, n + 1))
    first = True
    while todo:
        cands = []
        if first:
            cands += [tuple(base), tuple(reversed(base))]
            first = False
        for _ in range(pool):
            p = base[:]
            rng.shuffle(p)
            cands.append(tuple(p))
        best = max(cands, key=lambda p: len(_covered_by(p) & todo))
        gain = _covered_by(best) & todo
        if not gain:
            continue
        chosen.append(best)
        todo -= gain
    return PermutationCover(n, tuple(chosen))


def minimum_cover_size(n: int) -> int:
    """Exact minimum |Pi| by trying all subsets of permutations in increasing size (n <= 4)."""
    if n > 4:
        raise ValueError("exhaustive minimum is only offered for n <= 4")
    if n < 3:
        return 0
    allp = list(permutations(range(1, n + 1)))
    cov = [frozenset(_covered_by(p)) for p in allp]
    need = set(_constraints(n))
    size = 1
    while True:
        for combo in combinations(range(len(allp)), size):
            if set().union(*(cov[i] for i in combo)) >= need:
                return size
        size += 1


# ----------------------------------------------------------------------------
# the combined coloring


def layer_parity(lower: int) -> int:
    """Parity of the edge layer (size of the upper end)."""
    return (lower.bit_count() + 1) % 2


class CombinedColoring:
    """g(e) = (layer parity, prefix color along each permutation of the cover)."""

    def __init__(self, cover: PermutationCover):
        self.cover = cover
        self.n = cover.n
        self.colorers = [PrefixColorer(p) for p in cover.perms]

    def __call__(self, u: int, v: int) -> tuple[int, ...]:
        lower = min(u, v)
        d = edge_direction(u, v)
        return (layer_parity(lower), *(c(lower, d) for c in self.colorers))

    def of_star(self, s: str) -> tuple[int, ...]:
        e = parse_star(s)
        return self(e.lower.bits, e.upper.bits)

    @property
    def palette_bound(self) -> int:
        return 2 * 3 ** len(self.cover)

    def classes(self) -> dict[tuple[int, ...], list[tuple[int, int]]]:
        out: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for u, v in cube_edges(self.n):
            out.setdefault(self(u, v), []).append((u, v))
        return out


def combined_coloring(n: int, cover: PermutationCover) -> CombinedColoring:
    if cover.n != n:
        raise ValueError(f"cover is for n={cover.n}, not {n}")
    if not cover.is_valid():
        raise ValueError("cover misses some constraint")
    return CombinedColoring(cover)


def largest_class(n: int, coloring: CombinedColoring) -> tuple[tuple[int, ...], list[tuple[int, int]]]:
    """The biggest color class (ties go to the smallest color tuple)."""
    classes = coloring.classes()
    color = min(classes, key=lambda c: (-len(classes[c]), c))
    return color, classes[color]


# ----------------------------------------------------------------------------
# 10-cycles inside one edge layer


def _letters_hypergraph(sets: list[str]) -> frozenset[int]:
    return frozenset(sum(1 << "abcde".index(ch) for ch in s) for s in sets)


H_PATTERNS = {
    "H1": _letters_hypergraph(["ab", "bc", "cd", "de", "ea"]),
    "H2": _letters_hypergraph(["abc", "bcd", "cde", "dea", "eab"]),
    "H3": _letters_hypergraph(["cde", "dea", "aeb", "ebc", "bcd"]),
    "H4": _letters_hypergraph(["abc", "bcd", "cde", "bde", "bda"]),
    "H5": _letters_hypergraph(["abcd", "bcde", "cdea", "deab", "eabc"]),
}

# Edge lists (star strings) of the reference cycles; H4's columns are in the order a, e, c, d, b.
TABLE3 = {
    "H1": ("abcde", ["1*000", "*1000", "01*00", "0*100", "001*0", "00*10", "0001*", "000*1", "*0001", "1000*"]),
    "H2": ("abcde", ["11*00", "*1100", "011*0", "0*110", "0011*", "00*11", "*0011", "100*1", "1*001", "1100*"]),
    "H3": ("abcde", ["0011*", "00*11", "*0011", "100*1", "1*001", "*1001", "01*01", "0110*", "011*0", "0*110"]),
    "H4": ("aecdb", ["10*01", "*0101", "001*1", "0011*", "0*110", "01*10", "0101*", "0*011", "*0011", "100*1"]),
}

_PERMS5 = list(permutations(range(5)))


def _apply(perm, x: int) -> int:
    out = 0
    for i in range(5):
        if x >> i & 1:
            out |= 1 << perm[i]
    return out


def _canon(h: frozenset[int]) -> tuple[int, ...]:
    return min(tuple(sorted(_apply(p, x) for x in h)) for p in _PERMS5)


_CANON = {_canon(h): name for name, h in H_PATTERNS.items()}
assert len(_CANON) == 5, "H1..H5 must be pairwise non-isomorphic"


@dataclass(frozen=True)
class TenCycleClass:
    verdict: str  # H1..H5 or NotSingleLayer
    directions: tuple[int, ...] = ()
    relabeling: dict = field(default_factory=dict)  # letter -> coordinate of Q_n
    hyperedges: tuple[int, ...] = ()

    @property
    def single_layer(self) -> bool:
        return self.verdict != "NotSingleLayer"


class MalformedCycle(ValueError):
    pass


def star_edges_of_cycle(cycle) -> list[tuple[int, int]]:
    """(lower, direction) for each edge of a cyclic vertex sequence of masks."""
    out = []
    L = len(cycle)
    for i in range(L):
        u, v = cycle[i], cycle[(i + 1) % L]
        if (u ^ v).bit_count() != 1:
            raise MalformedCycle(f"consecutive vertices {u:b} and {v:b} are not adjacent")
        out.append((min(u, v), edge_direction(u, v)))
    return out


def cycle_from_stars(stars: list[str]) -> list[int]:
    """Vertex sequence of a closed walk given by its edges in cyclic order."""
    edges = [parse_star(s) for s in stars]
    pairs = [(e.lower.bits, e.upper.bits) for e in edges]
    a, b = pairs[0]
    nxt = pairs[1]
    start = a if a not in nxt else b
    seq = [start]
    cur = start
    for lo, hi in pairs:
        if cur == lo:
            cur = hi
        elif cur == hi:
            cur = lo
        else:
            raise MalformedCycle("edges do not form a walk in the given order")
        seq.append(cur)
    if seq[-1] != seq[0]:
        raise MalformedCycle("edge list does not close up")
    return seq[:-1]


def classify_10cycle(cycle) -> TenCycleClass:
    cycle = list(cycle)
    if len(cycle) != 10 or len(set(cycle)) != 10:
        raise MalformedCycle("need 10 distinct vertices")
    stars = star_edges_of_cycle(cycle)
    if len({v.bit_count() for v in cycle}) > 2:
        return TenCycleClass("NotSingleLayer")
    count = Counter(d for _, d in stars)
    if len(count) != 5 or set(count.values()) != {2}:
        raise MalformedCycle(f"single-layer 10-cycle with direction counts {dict(count)}")
    dirs = tuple(sorted(count))
    top = max(v.bit_count() for v in cycle)

    def restrict(x: int) -> int:
        return sum(1 << i for i, d in enumerate(dirs) if x >> (d - 1) & 1)

    h = frozenset(restrict(v) for v in cycle if v.bit_count() == top)
    name = _CANON.get(_canon(h))
    if name is None:
        raise MalformedCycle(f"hypergraph {sorted(h)} matches none of H1..H5")
    target = H_PATTERNS[name]
    for p in _PERMS5:
        if frozenset(_apply(p, x) for x in h) == target:
            relabel = {"abcde"[p[i]]: dirs[i] for i in range(5)}
            break
    return TenCycleClass(name, dirs, relabel, tuple(sorted(h)))


def table3_cycle(name: str) -> tuple[list[int], dict[str, int]]:
    """Vertices of the reference cycle in Q_5 and the coordinate of each letter."""
    order, rows = TABLE3[name]
    return cycle_from_stars(rows), {ch: i + 1 for i, ch in enumerate(order)}


def indicator(pi, x: int, y: int) -> int:
    """+1 if x comes before y in pi, else -1."""
    pos = {v: i for i, v in enumerate(pi)}
    return 1 if pos[x] < pos[y] else -1


def same_direction_pairs(cycle) -> dict[int, tuple[int, int]]:
    """For each direction, the lower sets of its two edges."""
    out: dict[int, list[int]] = {}
    for lo, d in star_edges_of_cycle(cycle):
        out.setdefault(d, []).append(lo)
    return {d: tuple(v) for d, v in out.items()}


def star_condition(pi, cycle, d: int) -> bool:
    """The two d-edges have equal restricted prefix sums: sum over X1 of yd equals sum over X2 (mod 3)."""
    lo1, lo2 = same_direction_pairs(cycle)[d]
    dirs = {x for _, x in star_edges_of_cycle(cycle)}

    def total(lo):
        return sum(indicator(pi, y, d) for y in dirs if y != d and lo >> (y - 1) & 1) % 3

    return total(lo1) == total(lo2)


def padded_h4_witness() -> tuple[int, list[int]]:
    """An H4-type 10-cycle that is monochromatic under the identity prefix coloring.

    Letters sit at coordinates a=1, e=2, c=5, d=6, b=9 of Q_9; coordinates 3, 4, 7, 8
    are fixed to 1 on every vertex, which shifts the per-direction colors into line.
    """
    base, where = table3_cycle("H4")
    place = {"a": 1, "e": 2, "c": 5, "d": 6, "b": 9}
    pad = (1 << 2) | (1 << 3) | (1 << 6) | (1 << 7)
    out = []
    for v in base:
        x = pad
        for ch, pos in where.items():
            if v >> (pos - 1) & 1:
                x |= 1 << (place[ch] - 1)
        out.append(x)
    return 9, out


# ----------------------------------------------------------------------------
# exhaustive verification


@dataclass
class C10Report:
    n: int
    cover_size: int
    cycles: int
    monochromatic: list[list[int]]
    class_counts: dict[str, int]
    pi_constant_violations: list[tuple[str, list[int]]]
    h4_unbroken: list[list[int]]
    h4_some_pi_constant: int
    class_size: int
    class_bound: float
    largest_class_cycles: int

    @property
    def ok(self) -> bool:
        return (not self.monochromatic and not self.pi_constant_violations and not self.h4_unbroken
                and self.largest_class_cycles == 0 and self.class_size >= self.class_bound)

    def to_json(self) -> dict:
        return {"n": self.n, "cover_size": self.cover_size, "cycles": self.cycles,
                "monochromatic": len(self.monochromatic), "class_counts": self.class_counts,
                "h4_some_pi_constant": self.h4_some_pi_constant, "class_size": self.class_size,
                "class_bound": self.class_bound, "verified": self.ok}


def verify_no_mono_c10(n: int, coloring: CombinedColoring, workers: int = 1) -> C10Report:
    """Enumerate every 10-cycle of Q_n and check it against g and its components."""
    if n > 6:
        raise ValueError("exhaustive verification is offered for n <= 6")
    g = hypercube_graph(n)
    cycles = cycles_of_length(g, 10, workers=workers)
    perms = coloring.cover.perms
    mono = []
    counts: Counter = Counter()
    bad_pi = []
    h4_unbroken = []
    h4_const = 0
    for cyc in cycles:
        stars = star_edges_of_cycle(cyc)
        colors = {coloring(lo, lo | (1 << (d - 1))) for lo, d in stars}
        if len(colors) == 1:
            mono.append(list(cyc))
        cls = classify_10cycle(cyc)
        counts[cls.verdict] += 1
        if not cls.single_layer:
            continue
        constant = [len({c(lo, d) for lo, d in stars}) == 1 for c in coloring.colorers]
        if cls.verdict == "H4":
            if any(constant):
                h4_const += 1
            lab = cls.relabeling
            ok = False
            for p, const in zip(perms, constant):
                pos = {x: i for i, x in enumerate(p)}
                if pos[lab["c"]] < pos[lab["b"]] and pos[lab["c"]] < pos[lab["e"]] and not const:
                    ok = True
                    break
            if not ok:
                h4_unbroken.append(list(cyc))
        elif any(constant):
            bad_pi.append((cls.verdict, list(cyc)))
    color, cls_edges = largest_class(n, coloring)
    sub_cycles = _class_cycles(n, cls_edges)
    total = n * 2 ** (n - 1)
    return C10Report(n, len(perms), len(cycles), mono, dict(sorted(counts.items())), bad_pi, h4_unbroken,
                     h4_const, len(cls_edges), total / coloring.palette_bound, sub_cycles)


def _class_cycles(n: int, edges) -> int:
    from .turan import subgraph_of_cube

    if not edges:
        return 0
    return len(cycles_of_length(subgraph_of_cube(n, edges), 10))


def every_class_c10_free(n: int, coloring: CombinedColoring) -> dict[tuple[int, ...], int]:
    """Number of 10-cycles inside each color class, found by enumerating in the class itself."""
    return {c: _class_cycles(n, edges) for c, edges in sorted(coloring.classes().items())}
