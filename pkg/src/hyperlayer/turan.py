"""Exact small extremal numbers inside Q_n.

A forbidden pattern is turned into the list of its instances in Q_n, each an
edge set (bitmask over edge ids of Q_n).  A subgraph is pattern-free iff it
contains no instance, so ex = ||Q_n|| - (minimum hitting set of the instances).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from .cube import PrefixColorer, cube_edges, edge_direction, hypercube_graph
from .graph import Graph, cycles_of_length
from .search import Budget, BudgetExhausted


@dataclass(frozen=True)
class ForbiddenPattern:
    """``kind`` is "cycle" (with ``length``), "c6minus" or "explicit" (with ``instances``)."""

    kind: str
    length: int = 0
    instances: tuple[frozenset[tuple[int, int]], ...] = field(default=(), compare=False)

    @classmethod
    def cycle(cls, length: int) -> ForbiddenPattern:
        if length < 4 or length % 2:
            raise ValueError("cycles in Q_n have even length >= 4")
        return cls("cycle", length)

    @classmethod
    def c6minus(cls) -> ForbiddenPattern:
        return cls("c6minus")

    @classmethod
    def explicit(cls, edge_sets) -> ForbiddenPattern:
        """Edge sets given as pairs of vertex masks of Q_n."""
        return cls("explicit", 0, tuple(frozenset(tuple(sorted(e)) for e in s) for s in edge_sets))

    @classmethod
    def parse(cls, name: str) -> ForbiddenPattern:
        m = re.fullmatch(r"[Cc](\d+)(-?)", name.strip())
        if not m:
            raise ValueError(f"unknown pattern {name!r}")
        L = int(m.group(1))
        if m.group(2):
            if L != 6:
                raise ValueError("only C6- is supported as a starred pattern")
            return cls.c6minus()
        return cls.cycle(L)

    def __str__(self) -> str:
        if self.kind == "cycle":
            return f"C{self.length}"
        if self.kind == "c6minus":
            return "C6-"
        return f"explicit[{len(self.instances)}]"


class CubeEdges:
    """Edge ids of Q_n: ``ids[(lower, upper)]`` in the order of :func:`cube_edges`."""

    def __init__(self, n: int):
        self.n = n
        self.pairs = list(cube_edges(n))
        self.ids = {p: i for i, p in enumerate(self.pairs)}
        self.m = len(self.pairs)

    def id(self, u: int, v: int) -> int:
        return self.ids[(u, v) if u < v else (v, u)]

    def mask(self, edges) -> int:
        out = 0
        for u, v in edges:
            out |= 1 << self.id(u, v)
        return out

    def edges_of(self, mask: int) -> list[tuple[int, int]]:
        return [self.pairs[i] for i in range(self.m) if mask >> i & 1]


def cycle_masks(n: int, length: int, ce: CubeEdges | None = None) -> list[int]:
    ce = ce or CubeEdges(n)
    g = hypercube_graph(n)
    out = []
    for cyc in cycles_of_length(g, length):
        out.append(ce.mask(zip(cyc, cyc[1:] + cyc[:1])))
    return out


def instances(n: int, pattern: ForbiddenPattern, ce: CubeEdges | None = None) -> list[int]:
    """Distinct instance edge masks, sorted."""
    ce = ce or CubeEdges(n)
    if pattern.kind == "cycle":
        found = set(cycle_masks(n, pattern.length, ce))
    elif pattern.kind == "c6minus":
        found = set()
        for c in cycle_masks(n, 6, ce):
            y = c
            while y:
                low = y & -y
                found.add(c ^ low)
                y ^= low
    elif pattern.kind == "explicit":
        found = {ce.mask(s) for s in pattern.instances}
    else:
        raise ValueError(f"unknown pattern kind {pattern.kind!r}")
    return sorted(found)


def is_free(edge_mask: int, inst: list[int]) -> bool:
    return all(edge_mask & x != x for x in inst)


# ----------------------------------------------------------------------------
# automorphisms of Q_n acting on edge ids


def cube_automorphisms(n: int):
    """Yield (perm, flip) pairs; vertex v maps to permute(v) ^ flip."""
    for perm in permutations(range(n)):
        for flip in range(1 << n):
            yield perm, flip


def _edge_action(ce: CubeEdges, perm, flip) -> list[int]:
    def img(v):
        out = 0
        for i in range(ce.n):
            if v >> i & 1:
                out |= 1 << perm[i]
        return out ^ flip

    return [ce.id(img(u), img(v)) for u, v in ce.pairs]


# ----------------------------------------------------------------------------
# branch and bound


@dataclass
class ExResult:
    n: int
    pattern: str
    value: int
    witness: list[tuple[int, int]]
    nodes: int
    exact: bool = True
    lower: int | None = None
    upper: int | None = None

    def to_json(self, n_bits: int | None = None) -> dict:
        from .cube import to_bits

        w = n_bits or self.n
        return {"n": self.n, "pattern": self.pattern, "value": self.value, "exact": self.exact,
                "lower": self.lower, "upper": self.upper, "nodes": self.nodes,
                "witness": [[to_bits(u, w), to_bits(v, w)] for u, v in self.witness]}


class _HittingSet:
    def __init__(self, inst: list[int], m: int, budget: Budget):
        self.inst = inst
        self.m = m
        self.budget = budget
        self.best_size = None
        self.best = 0

    def packing_bound(self, open_: list[int], forbidden: int) -> int:
        used = 0
        count = 0
        for x in sorted(open_, key=lambda y: (y & ~forbidden).bit_count()):
            avail = x & ~forbidden
            if avail & used == 0:
                used |= avail
                count += 1
        return count

    def greedy(self, chosen: int) -> int:
        open_ = [x for x in self.inst if not x & chosen]
        while open_:
            counts = [0] * self.m
            for x in open_:
                y = x
                while y:
                    low = y & -y
                    counts[low.bit_length() - 1] += 1
                    y ^= low
            e = max(range(self.m), key=counts.__getitem__)
            chosen |= 1 << e
            open_ = [x for x in open_ if not x >> e & 1]
        return chosen

    def offer(self, chosen: int) -> None:
        size = chosen.bit_count()
        if self.best_size is None or size < self.best_size:
            self.best_size, self.best = size, chosen

    def solve(self, chosen: int, forbidden: int, open_: list[int]) -> None:
        self.budget.tick()
        if not open_:
            self.offer(chosen)
            return
        size = chosen.bit_count()
        if self.best_size is not None and size + self.packing_bound(open_, forbidden) >= self.best_size:
            return
        pick = min(open_, key=lambda y: (y & ~forbidden).bit_count())
        avail = pick & ~forbidden
        tried = 0
        while avail:
            low = avail & -avail
            avail ^= low
            nxt = chosen | low
            self.solve(nxt, forbidden | tried, [x for x in open_ if not x & low])
            tried |= low


def ex_exact(n: int, pattern: ForbiddenPattern | str, budget: int | None = None,
             symmetry: bool = True) -> ExResult:
    """Largest pattern-free subgraph of Q_n.

    With ``symmetry`` the first two removed edges are restricted to orbit
    representatives of Aut(Q_n) (the group is edge-transitive, so one removed
    edge can always be assumed to be edge 0).  On budget exhaustion the raised
    :class:`BudgetExhausted` carries ``partial = (lower, upper)`` for ex.
    """
    if isinstance(pattern, str):
        pattern = ForbiddenPattern.parse(pattern)
    ce = CubeEdges(n)
    inst = instances(n, pattern, ce)
    full = (1 << ce.m) - 1
    counter = Budget(budget)
    hs = _HittingSet(inst, ce.m, counter)
    hs.offer(hs.greedy(0))
    root_lb = hs.packing_bound(inst, 0)
    try:
        if not inst:
            hs.offer(0)
        elif symmetry and n >= 1:
            _solve_symmetric(hs, ce, inst)
        else:
            hs.solve(0, 0, inst)
    except BudgetExhausted as exc:
        lower = ce.m - hs.best_size
        upper = ce.m - root_lb
        raise BudgetExhausted(exc.nodes, partial=(lower, upper)) from None
    keep = full & ~hs.best
    value = ce.m - hs.best_size
    return ExResult(n, str(pattern), value, ce.edges_of(keep), counter.nodes, True, value, value)


def _solve_symmetric(hs: _HittingSet, ce: CubeEdges, inst: list[int]) -> None:
    actions = [_edge_action(ce, p, f) for p, f in cube_automorphisms(ce.n)]
    e0 = 0
    open1 = [x for x in inst if not x & 1]
    if not open1:
        hs.offer(1)
        return
    stab = [a for a in actions if a[e0] == e0]
    seen: set[int] = set()
    reps = []
    for e in range(1, ce.m):
        if e in seen:
            continue
        reps.append(e)
        seen.update(a[e] for a in stab)
    for r in reps:
        chosen = 1 | (1 << r)
        hs.solve(chosen, 0, [x for x in open1 if not x >> r & 1])


def ex_bruteforce(n: int, pattern: ForbiddenPattern | str) -> int:
    """Scan all edge subsets of Q_n, largest first (feasible for n <= 3)."""
    if isinstance(pattern, str):
        pattern = ForbiddenPattern.parse(pattern)
    ce = CubeEdges(n)
    inst = instances(n, pattern, ce)
    for size in range(ce.m, -1, -1):
        for keep in combinations(range(ce.m), size):
            mask = sum(1 << i for i in keep)
            if is_free(mask, inst):
                return size
    return 0


# ----------------------------------------------------------------------------
# constructions


def alternating_layers(n: int, parity: str) -> list[tuple[int, int]]:
    """All edges of the even (or odd) edge layers of Q_n; edge layer = size of the upper end."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    want = 0 if parity == "even" else 1
    return [(u, v) for u, v in cube_edges(n) if v.bit_count() % 2 == want]


def alternating_layers_size(n: int, parity: str) -> int:
    want = 0 if parity == "even" else 1
    return sum(k * comb(n, k) for k in range(1, n + 1) if k % 2 == want)


def best_alternating_layers(n: int) -> list[tuple[int, int]]:
    even, odd = alternating_layers(n, "even"), alternating_layers(n, "odd")
    return even if len(even) >= len(odd) else odd


def subgraph_of_cube(n: int, edges) -> Graph:
    """Edge-induced subgraph of Q_n on the touched vertices, labeled by binary strings."""
    from .cube import to_bits

    verts = sorted({x for e in edges for x in e})
    idx = {v: i for i, v in enumerate(verts)}
    return Graph(len(verts), [(idx[u], idx[v]) for u, v in edges], labels=[to_bits(v, n) for v in verts])


def greedy_free(n: int, edges, pattern: ForbiddenPattern | str) -> list[tuple[int, int]]:
    """Add edges one by one in the given order, skipping any that would complete an instance."""
    if isinstance(pattern, str):
        pattern = ForbiddenPattern.parse(pattern)
    ce = CubeEdges(n)
    inst = instances(n, pattern, ce)
    by_edge: dict[int, list[int]] = {}
    for x in inst:
        y = x
        while y:
            low = y & -y
            by_edge.setdefault(low.bit_length() - 1, []).append(x)
            y ^= low
    cur = 0
    kept = []
    for u, v in edges:
        e = ce.id(u, v)
        trial = cur | (1 << e)
        if all(trial & x != x for x in by_edge.get(e, ())):
            cur = trial
            kept.append((min(u, v), max(u, v)))
    return kept


class NotPatternFree(ValueError):
    pass


def c6minus_to_c10(n: int, edges) -> list[tuple[int, int]]:
    """Largest prefix-color class of a C6^- free subgraph of Q_n (ties: smallest color)."""
    edges = [(min(u, v), max(u, v)) for u, v in edges]
    ce = CubeEdges(n)
    if not is_free(ce.mask(edges), instances(n, ForbiddenPattern.c6minus(), ce)):
        raise NotPatternFree("input contains a C6-")
    color = PrefixColorer(tuple(range(1, n + 1)))
    classes: dict[int, list[tuple[int, int]]] = {0: [], 1: [], 2: []}
    for u, v in edges:
        classes[color(u, edge_direction(u, v))].append((u, v))
    best = max(classes, key=lambda c: (len(classes[c]), -c))
    return classes[best]


def contains_cycle(n: int, edges, length: int) -> bool:
    if not edges:
        return False
    g = subgraph_of_cube(n, edges)
    return bool(cycles_of_length(g, length))
