"""Acceptance criteria, one test per criterion.

Each test records a ``CRITERION n: PASS|FAIL`` line (with timing) that is
printed in the pytest terminal summary.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from itertools import combinations
from math import ceil, comb, log2

from hypothesis import HealthCheck, given, settings

import conftest
from hyperlayer import c10
from hyperlayer.colorings import (
    Verdict, check_nice, check_very_nice, color_class_cut_check, direction_coloring,
    find_nice_coloring, find_very_nice_coloring,
)
from hyperlayer.compression import (
    CompressedSpec, SetFamilyPair, compressed_edge_count, e_table, edge_count, shift,
)
from hyperlayer.embedder import (
    check_partite, decide_layered, embed_from_very_nice, embed_in_cube, verify_cube_embedding,
    verify_layer_embedding,
)
from hyperlayer.fixed_distance import embed_F, verify_fixed_distance
from hyperlayer.gallery import GALLERY_NAMES, by_name, cycle, g8, k23, theta
from hyperlayer.graph import components, girth
from hyperlayer.subdivisions import (
    embed_even_subdivision_bipartite, embed_odd_subdivision_complete, even_bipartite_spec,
    even_partition, odd_complete_spec, odd_partition, table_fidelity_check,
)
from hyperlayer.c10 import table3_cycle
from hyperlayer.turan import ex_exact
from oracles import covers_all_triples, e_oracle_table, hypercube_pairs
from strategies import layered_graphs


@contextmanager
def criterion(num: int, limit: float | None = None, informational: bool = False):
    start = time.perf_counter()
    status = {"ok": False, "detail": ""}
    try:
        yield status
    finally:
        took = time.perf_counter() - start
        ok = status["ok"] and (limit is None or took < limit)
        word = "PASS" if ok else ("INFO" if informational else "FAIL")
        bound = f" (limit {limit:.0f}s)" if limit else ""
        line = f"CRITERION {num}: {word} in {took:.2f}s{bound} {status['detail']}".rstrip()
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
    if limit is not None:
        assert took < limit, f"criterion {num} took {took:.1f}s, limit {limit}s"


def test_criterion_01_ex_q3_c6_minus():
    with criterion(1, 5) as st:
        r = ex_exact(3, "C6-")
        st["detail"] = f"ex*(Q3,C6-)={r.value} exact={r.exact}"
        st["ok"] = r.exact and r.value == 8
    assert st["ok"]


def test_criterion_02_ex_q3_c6():
    with criterion(2, 60) as st:
        r = ex_exact(3, "C6")
        st["detail"] = f"ex(Q3,C6)={r.value} exact={r.exact}"
        st["ok"] = r.exact and r.value <= 9
    assert st["ok"]


def test_criterion_03_recognition_suite():
    with criterion(3, 600) as st:
        verdicts = {
            "C4 not layered": decide_layered(cycle(4)) is None,
            "C6 layered": decide_layered(cycle(6)) is not None,
            "C8 layered": decide_layered(cycle(8)) is not None,
            "C12 layered": decide_layered(cycle(12)) is not None,
            "K23 not cubical": find_nice_coloring(k23()) is None,
            "theta333 not layered": decide_layered(theta(3, 3, 3)) is None,
        }
        for m in (3, 4, 5):
            g = theta(*([m] * m))
            c = find_nice_coloring(g)
            verdicts[f"theta {m}x{m} nice"] = c is not None and check_nice(g, c).ok
        G = g8()
        emb = embed_in_cube(G, 5)
        verdicts["G8 cubical in Q5"] = emb is not None and verify_cube_embedding(G, emb).ok
        verdicts["G8 girth 8"] = girth(G) == 8
        verdicts["G8 not layered"] = decide_layered(G) is None
        bad = [k for k, v in verdicts.items() if not v]
        st["detail"] = f"{len(verdicts) - len(bad)}/{len(verdicts)} verdicts" + (f" failing: {bad}" if bad else "")
        st["ok"] = not bad
    assert st["ok"]


def test_criterion_04_table_fidelity():
    with criterion(4) as st:
        reports = [table_fidelity_check(1, k) for k in (1, 2, 3)] + [table_fidelity_check(2, k) for k in (3, 4, 5)]
        names = {name: c10.classify_10cycle(table3_cycle(name)[0]).verdict for name in ("H1", "H2", "H3", "H4")}
        mism = sum(len(r.mismatches) for r in reports)
        st["detail"] = f"table mismatches={mism}, table3={names}"
        st["ok"] = mism == 0 and all(k == v for k, v in names.items())
    assert st["ok"]


def test_criterion_05_subdivision_embeddings():
    with criterion(5, 60) as st:
        failures = []
        for t in range(1, 5):
            for k in range(0, 6):
                spec, emb = odd_complete_spec(t, k), embed_odd_subdivision_complete(t, k)
                if not verify_layer_embedding(spec.graph, emb).ok:
                    failures.append(("odd", t, k))
                if k >= 1 and check_partite(emb, odd_partition(t, k)).sizes != (t,) * k + (comb(t, 2),):
                    failures.append(("odd-partite", t, k))
        for t in range(1, 4):
            for k in range(1, 6):
                spec, emb = even_bipartite_spec(t, k), embed_even_subdivision_bipartite(t, k)
                if not verify_layer_embedding(spec.graph, emb).ok:
                    failures.append(("even", t, k))
                if k >= 4 and k % 2 == 0:
                    sizes = check_partite(emb, even_partition(t, k)).sizes
                    bound = (2 * t,) + (k,) * (t * t) + (k * t * t,)
                    if len(sizes) != len(bound) or any(a > b for a, b in zip(sizes, bound)):
                        failures.append(("even-partite", t, k))
        st["detail"] = f"{len(failures)} failures" + (f": {failures}" if failures else "")
        st["ok"] = not failures
    assert st["ok"]


def _round_trip(g):
    """Very nice coloring -> embedding -> direction coloring; returns a list of problems."""
    c = find_very_nice_coloring(g)
    if c is None:
        return [] if decide_layered(g) is None else ["layered but no very nice coloring"]
    problems = []
    if check_very_nice(g, c).verdict is not Verdict.VERY_NICE:
        problems.append("search result not very nice")
    for comp in components(g):
        if len(comp) < 2:
            continue
        sub_ids = [i for i, (u, v) in enumerate(g.edges) if u in set(comp)]
        idx = {v: i for i, v in enumerate(comp)}
        from hyperlayer.graph import Graph
        from hyperlayer.colorings import EdgeColoring

        h = Graph(len(comp), [(idx[g.edges[i][0]], idx[g.edges[i][1]]) for i in sub_ids])
        hc = EdgeColoring.normalized(h, [c.colors[i] for i in sub_ids])
        emb = embed_from_very_nice(h, hc)
        if not verify_layer_embedding(h, emb).ok:
            problems.append("embedding not in two layers")
            continue
        dc = direction_coloring(h, emb)
        if check_very_nice(h, dc).verdict is not Verdict.VERY_NICE:
            problems.append("direction coloring not very nice")
        for checks in (color_class_cut_check(h, hc), color_class_cut_check(h, dc)):
            if not all(ch.is_cut and ch.is_induced_matching for ch in checks.values()):
                problems.append("class not a cut or not an induced matching")
    return problems


ROUND_TRIP_FAILURES: list = []


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(layered_graphs(max_dim=5, max_edges=12))
def _random_round_trip(data):
    g, _ = data
    probs = _round_trip(g)
    if probs:
        ROUND_TRIP_FAILURES.append((g.n, g.edges, probs))
    assert not probs


def test_criterion_06_round_trip():
    with criterion(6) as st:
        gallery_probs = {name: _round_trip(by_name(name)) for name in GALLERY_NAMES}
        gallery_bad = {k: v for k, v in gallery_probs.items() if v}
        ROUND_TRIP_FAILURES.clear()
        try:
            _random_round_trip()
            random_ok = True
        except AssertionError:
            random_ok = False
        st["detail"] = (f"gallery {len(GALLERY_NAMES) - len(gallery_bad)}/{len(GALLERY_NAMES)} ok, "
                        f"200 random layered graphs {'ok' if random_ok else 'FAILED'}")
        st["ok"] = not gallery_bad and random_ok
    assert st["ok"], (gallery_bad, ROUND_TRIP_FAILURES[:1])


def test_criterion_07_compression_n4():
    with criterion(7, 300) as st:
        n = 4
        dominance, shifts, total = [], 0, 0
        for k in range(1, n + 1):
            up = [x for x in range(1 << n) if x.bit_count() == k]
            lo = [x for x in range(1 << n) if x.bit_count() == k - 1]
            for a in range(1 << len(up)):
                A = tuple(x for i, x in enumerate(up) if a >> i & 1)
                for b in range(1 << len(lo)):
                    B = tuple(x for i, x in enumerate(lo) if b >> i & 1)
                    p = SetFamilyPair(n, k, A, B)
                    total += 1
                    e = edge_count(p)
                    if e > compressed_edge_count(CompressedSpec(n, k, len(A), len(B))):
                        dominance.append(p.sets())
                    shifts += sum(edge_count(shift(p, i, j)) < e for i, j in combinations(range(1, n + 1), 2))
        st["detail"] = (f"{total} pairs, dominance violations={len(dominance)}, shift violations={shifts}"
                        + (f", e.g. A={dominance[0][0]} B={dominance[0][1]}" if dominance else ""))
        st["ok"] = not dominance and shifts == 0
    assert st["ok"], st["detail"]


def test_criterion_08_e_of_t():
    with criterion(8) as st:
        table = e_table(10)
        oracle = e_oracle_table(10, 5)
        vals = [r.value for r in table]
        agree = vals == [oracle[t] for t in range(1, 11)]
        monotone = vals == sorted(vals)
        within = all(r.value <= r.witness.k * r.t for r in table)
        st["detail"] = f"e(1..10)={vals} oracle_agrees={agree} monotone={monotone} e<=k*t={within}"
        st["ok"] = agree and monotone and within
    assert st["ok"]


def _c10_check(n):
    cover = c10.build_cover(n)
    col = c10.combined_coloring(n, cover)
    rep = c10.verify_no_mono_c10(n, col)
    bound = n * 2 ** (n - 1) / (2 * 3 ** len(cover))
    single = {k: v for k, v in rep.class_counts.items() if k != "NotSingleLayer"}
    ok = (covers_all_triples(n, cover.perms) and not rep.monochromatic and rep.largest_class_cycles == 0
          and rep.class_size >= bound and set(single) <= {"H1", "H2", "H3", "H4", "H5"} and rep.ok)
    return ok, f"n={n}: |Pi|={len(cover)} cycles={rep.cycles} mono={len(rep.monochromatic)} class={rep.class_size}>={bound:.2f} {single}"


def test_criterion_09_c10_construction():
    with criterion(9, 1800) as st:
        ok5, d5 = _c10_check(5)
        ok6, d6 = _c10_check(6)
        st["detail"] = f"{d5}; {d6}"
        st["ok"] = ok5 and ok6
    assert st["ok"]


def test_criterion_10_appendix_b():
    with criterion(10, 60) as st:
        bad = []
        for n in range(1, 6):
            for m in range(2, 7):
                emb = embed_F(n, m)
                dists = {(emb(u) ^ emb(v)).bit_count() for u, v in hypercube_pairs(n)}
                layers = emb.layers()
                good = (len(set(emb.images)) == 2 ** n and dists == {m}
                        and (len(layers) == 1 if m % 2 == 0 else layers[-1] - layers[0] <= 1)
                        and verify_fixed_distance(emb).ok)
                if not good:
                    bad.append((n, m))
        st["detail"] = f"{25 - len(bad)}/25 (n,m) pairs verified"
        st["ok"] = not bad
    assert st["ok"]


def test_criterion_11_envelope_informational():
    with criterion(11, informational=True) as st:
        over = [(r.t, r.value) for r in e_table(10) if r.value > ceil(0.5 * r.t * log2(r.t)) + r.t]
        st["detail"] = "informational; all e(t) within ceil(t log2 t / 2) + t" if not over else f"informational; above envelope: {over}"
        st["ok"] = not over
