"""Colex order, left shifts and the extremal edge count e(t) of layered graphs.

Families of k-subsets are stored as tuples of bitmasks.  For sets of equal
size, colex order coincides with numeric order of the masks, which is what
makes the whole module cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, log2
from typing import Iterable, Sequence

from .cube import bit, mask_of, members


def colex_rank(S: Iterable[int]) -> int:
    """Position of the set S among all |S|-subsets of the positive integers in colex order."""
    elems = sorted(S)
    if len(set(elems)) != len(elems) or (elems and elems[0] < 1):
        raise ValueError(f"not a set of positive integers: {elems}")
    return sum(comb(s - 1, j) for j, s in enumerate(elems, start=1))


def colex_unrank(r: int, n: int, k: int) -> tuple[int, ...]:
    if not 0 <= r < comb(n, k):
        raise ValueError(f"rank {r} out of range for C([{n}], {k})")
    out = []
    for j in range(k, 0, -1):
        s = j
        while comb(s, j) <= r:
            s += 1
        # largest s-1 with C(s-1, j) <= r
        out.append(s)
        r -= comb(s - 1, j)
    return tuple(sorted(out))


def first_colex(n: int, k: int, m: int) -> list[tuple[int, ...]]:
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"cannot take {m} sets from C([{n}], {k})")
    return [members(x) for x in first_colex_masks(k, m)]


def first_colex_masks(k: int, m: int) -> list[int]:
    """The m colex-smallest k-sets as masks (independent of the ground set size)."""
    out = []
    if m == 0:
        return out
    x = (1 << k) - 1
    while len(out) < m:
        out.append(x)
        if k == 0:
            break
        # Gosper's hack: next larger integer with the same popcount
        low = x & -x
        ripple = x + low
        x = ripple | (((x ^ ripple) >> 2) // low)
    if len(out) < m:
        raise ValueError(f"only {len(out)} sets of size {k} exist")
    return out


@dataclass(frozen=True)
class SetFamilyPair:
    """Upper family ``A`` of k-sets and lower family ``B`` of (k-1)-sets inside [n], as masks."""

    n: int
    k: int
    A: tuple[int, ...]
    B: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or self.k > self.n:
            raise ValueError(f"layer {self.k} out of range for n={self.n}")
        for fam, size, name in ((self.A, self.k, "A"), (self.B, self.k - 1, "B")):
            if len(set(fam)) != len(fam):
                raise ValueError(f"family {name} has repeated members")
            for x in fam:
                if x < 0 or x >> self.n or x.bit_count() != size:
                    raise ValueError(f"{members(x)} is not a {size}-subset of [{self.n}]")

    @classmethod
    def from_sets(cls, n: int, k: int, A: Iterable[Iterable[int]], B: Iterable[Iterable[int]]) -> SetFamilyPair:
        return cls(n, k, tuple(mask_of(s) for s in A), tuple(mask_of(s) for s in B))

    @property
    def size(self) -> int:
        return len(self.A) + len(self.B)

    def sets(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        return [members(x) for x in self.A], [members(x) for x in self.B]

    def canonical(self) -> SetFamilyPair:
        return SetFamilyPair(self.n, self.k, tuple(sorted(self.A)), tuple(sorted(self.B)))


@dataclass(frozen=True)
class CompressedSpec:
    n: int
    k: int
    N_A: int
    N_B: int

    def __post_init__(self):
        if not 0 <= self.N_A <= comb(self.n, self.k):
            raise ValueError(f"N_A={self.N_A} exceeds C({self.n},{self.k})")
        if not 0 <= self.N_B <= comb(self.n, self.k - 1):
            raise ValueError(f"N_B={self.N_B} exceeds C({self.n},{self.k - 1})")

    def materialize(self) -> SetFamilyPair:
        return SetFamilyPair(self.n, self.k, tuple(first_colex_masks(self.k, self.N_A)),
                             tuple(first_colex_masks(self.k - 1, self.N_B)))


def _edges(A: Iterable[int], B: Iterable[int]) -> int:
    lower = set(B)
    total = 0
    for x in A:
        y = x
        while y:
            low = y & -y
            if x ^ low in lower:
                total += 1
            y ^= low
    return total


def edge_count(pair: SetFamilyPair) -> int:
    """Number of pairs (A, B) with B a subset of A."""
    return _edges(pair.A, pair.B)


def compressed_edge_count(spec: CompressedSpec) -> int:
    return _edges(first_colex_masks(spec.k, spec.N_A), first_colex_masks(spec.k - 1, spec.N_B))


def _shift_family(fam: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    present = set(fam)
    bi, bj = bit(i), bit(j)
    out = []
    for x in fam:
        if x & bj and not x & bi:
            y = x ^ bj ^ bi
            if y not in present:
                out.append(y)
                continue
        out.append(x)
    return tuple(out)


def shift(pair: SetFamilyPair, i: int, j: int) -> SetFamilyPair:
    """Apply R_ij to both families separately (replace j by i unless the image is taken)."""
    if not 1 <= i < j <= pair.n:
        raise ValueError(f"need 1 <= i < j <= {pair.n}, got ({i}, {j})")
    return SetFamilyPair(pair.n, pair.k, _shift_family(pair.A, i, j), _shift_family(pair.B, i, j))


def compress(pair: SetFamilyPair, trace: list | None = None) -> SetFamilyPair:
    """Shift to a fixpoint, sweeping (i, j) lexicographically and restarting after any change.

    If ``trace`` is given, the edge count after every effective shift is appended.
    """
    cur = pair.canonical()
    changed = True
    while changed:
        changed = False
        for i in range(1, pair.n):
            for j in range(i + 1, pair.n + 1):
                nxt = shift(cur, i, j).canonical()
                if nxt != cur:
                    cur = nxt
                    if trace is not None:
                        trace.append(edge_count(cur))
                    changed = True
                    break
            if changed:
                break
    return cur


def is_left_compressed(pair: SetFamilyPair) -> bool:
    return all(shift(pair, i, j).canonical() == pair.canonical()
               for i in range(1, pair.n) for j in range(i + 1, pair.n + 1))


# ----------------------------------------------------------------------------
# e(t)


@dataclass(frozen=True)
class EResult:
    t: int
    value: int
    witness: CompressedSpec
    super_value: int | None
    compressed_value: int
    compressed_witness: CompressedSpec

    @property
    def discrepancy(self) -> bool:
        """True when plain compressed splits beat the super-compressed / low-layer answer."""
        return self.compressed_value != self.value


def default_k_max(t: int) -> int:
    return max(1, ceil(log2(t)) + 2) if t > 1 else 1


def _ground(k: int, N_A: int, N_B: int) -> int:
    """Smallest n whose [n] holds the first N_A k-sets and first N_B (k-1)-sets."""
    top = 0
    if N_A:
        top |= first_colex_masks(k, N_A)[-1]
    if N_B:
        top |= first_colex_masks(k - 1, N_B)[-1]
    return max(k, top.bit_length())


def _spec(k: int, N_A: int, N_B: int) -> CompressedSpec:
    return CompressedSpec(_ground(k, N_A, N_B), k, N_A, N_B)


def _compressed_splits(t: int, k: int):
    cap_b = comb(t + k, k - 1)
    for N_A in range(t + 1):
        N_B = t - N_A
        if N_B <= cap_b:
            yield N_A, N_B


def _super_splits(t: int, k: int):
    a = k
    while comb(a - 1, k) < t:
        lo_a, hi_a = comb(a - 1, k) + 1, comb(a, k)
        lo_b, hi_b = comb(a - 1, k - 1), comb(a, k - 1)
        for N_A in range(lo_a, hi_a + 1):
            N_B = t - N_A
            if lo_b <= N_B <= hi_b:
                yield N_A, N_B
        a += 1


def _best(t: int, ks: Iterable[int], splits) -> tuple[int, CompressedSpec | None]:
    best, arg = -1, None
    for k in ks:
        for N_A, N_B in splits(t, k):
            e = _edges(first_colex_masks(k, N_A), first_colex_masks(k - 1, N_B))
            if e > best:
                best, arg = e, (k, N_A, N_B)
    return best, (None if arg is None else _spec(*arg))


def e_exact(t: int, k_max: int | None = None) -> EResult:
    """Largest edge count of a t-vertex graph inside one edge layer.

    The answer is the best super-compressed split over layers 1..k_max,
    together with arbitrary compressed splits in layers 1 and 2 (where every
    degree on one side is at most 2).  The unrestricted compressed maximum is
    computed too and exposed for cross-checking.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if k_max is None:
        k_max = default_k_max(t)
    sup, sup_w = _best(t, range(1, k_max + 1), _super_splits)
    low, low_w = _best(t, range(1, min(2, k_max) + 1), _compressed_splits)
    if sup >= low:
        value, witness = sup, sup_w
    else:
        value, witness = low, low_w
    comp, comp_w = _best(t, range(1, k_max + 1), _compressed_splits)
    return EResult(t, value, witness, sup if sup_w else None, comp, comp_w)


def e_table(t_max: int, k_max: int | None = None) -> list[EResult]:
    return [e_exact(t, k_max) for t in range(1, t_max + 1)]
