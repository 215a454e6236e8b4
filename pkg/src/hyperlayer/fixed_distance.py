"""Maps Q_n -> Q_N that send adjacent vertices to pairs at a prescribed distance m.

Images stay inside one vertex layer when m is even and inside two consecutive
layers when m is odd.  Words are built left to right with coordinate 1 first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cube import cube_edges, from_bits, to_bits


@dataclass(frozen=True)
class FixedDistanceEmbedding:
    n: int
    N: int
    m: int
    images: tuple[int, ...]  # indexed by the vertex mask of Q_n

    def __call__(self, v: int) -> int:
        return self.images[v]

    def word(self, v: int | str) -> str:
        if isinstance(v, str):
            v = from_bits(v)
        return to_bits(self.images[v], self.N)

    def layers(self) -> list[int]:
        return sorted({x.bit_count() for x in self.images})


@dataclass(frozen=True)
class DistanceReport:
    ok: bool
    injective: bool
    distances: tuple[int, ...]
    layers: tuple[int, ...]
    problem: str | None = None


def _bits(v: int, i: int) -> int:
    return v >> (i - 1) & 1


def _from_word(w: str) -> int:
    return from_bits(w)


def embed_fk(n: int, k: int) -> FixedDistanceEmbedding:
    """Blocks of length 2k+2: 0101..01 for a 0 coordinate, 1010..10 for a 1."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    zero, one = "01" * (k + 1), "10" * (k + 1)
    images = tuple(_from_word("".join(one if _bits(v, i) else zero for i in range(1, n + 1)))
                   for v in range(1 << n))
    return FixedDistanceEmbedding(n, (2 * k + 2) * n, 2 * k + 2, images)


def _f_word(n: int, v: int) -> str:
    odd = v.bit_count() % 2
    pairs = "".join("10" if _bits(v, i) else "01" for i in range(1, n + 1))
    return pairs + str(odd)


def embed_f(n: int) -> FixedDistanceEmbedding:
    """Pair i is 10 or 01 by v[i]; the shared last coordinate records the parity of |v|."""
    if n < 1:
        raise ValueError("need n >= 1")
    images = tuple(_from_word(_f_word(n, v)) for v in range(1 << n))
    return FixedDistanceEmbedding(n, 2 * n + 1, 3, images)


def embed_fprime(n: int) -> FixedDistanceEmbedding:
    """Triples: 010 for a 0; for a 1, 100 except 101 at the last 1 of an odd-weight vertex."""
    if n < 1:
        raise ValueError("need n >= 1")
    images = []
    for v in range(1 << n):
        odd = v.bit_count() % 2
        last = v.bit_length()
        blocks = []
        for i in range(1, n + 1):
            if not _bits(v, i):
                blocks.append("010")
            elif odd and i == last:
                blocks.append("101")
            else:
                blocks.append("100")
        images.append(_from_word("".join(blocks)))
    return FixedDistanceEmbedding(n, 3 * n, 3, tuple(images))


def embed_F(n: int, m: int) -> FixedDistanceEmbedding:
    """Distance m >= 2: f_k for even m, f for m = 3, f plus 2l padding coordinates for m = 3 + 2l."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if m % 2 == 0:
        return embed_fk(n, (m - 2) // 2)
    if m == 3:
        return embed_f(n)
    ell = (m - 3) // 2
    images = []
    for v in range(1 << n):
        tail = "1" * ell + "0" * ell if v.bit_count() % 2 else "0" * ell + "1" * ell
        images.append(_from_word(_f_word(n, v) + tail))
    return FixedDistanceEmbedding(n, 2 * n + 1 + 2 * ell, m, tuple(images))


def verify_fixed_distance(emb: FixedDistanceEmbedding) -> DistanceReport:
    injective = len(set(emb.images)) == len(emb.images)
    dists = sorted({(emb.images[u] ^ emb.images[v]).bit_count() for u, v in cube_edges(emb.n)})
    layers = emb.layers()
    problem = None
    if not injective:
        problem = "not injective"
    elif dists and dists != [emb.m]:
        problem = f"adjacent distances {dists}, expected {emb.m}"
    elif emb.m % 2 == 0 and len(layers) != 1:
        problem = f"even m but images in layers {layers}"
    elif emb.m % 2 == 1 and (len(layers) > 2 or (len(layers) == 2 and layers[1] - layers[0] != 1)):
        problem = f"odd m but images in layers {layers}"
    return DistanceReport(problem is None, injective, tuple(dists), tuple(layers), problem)
