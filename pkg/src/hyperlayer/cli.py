"""Command line entry point: ``hyperlayer <command> ...``.

Every command prints JSON on stdout (``e-of-t`` prints TSV, ``tables`` prints
text).  Exit codes: 0 success, 2 property violated, 3 budget exhausted,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import c10, compression, fixed_distance, gallery, subdivisions, turan
from .colorings import find_nice_coloring, find_very_nice_coloring
from .cube import to_bits
from .embedder import check_partite, decide_layered, embed_from_very_nice, verify_layer_embedding
from .graph import GraphFormatError, girth, graph_from_json, graph_to_json, is_connected, to_dot
from .search import BudgetExhausted

EXIT_OK, EXIT_VIOLATION, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(payload, args) -> None:
    print(json.dumps(payload, indent=None if args.compact else 2, sort_keys=False))


def _read_graph(source: str):
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    return graph_from_json(text)


def _maybe_dot(args, g, edge_labels=None) -> None:
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(g, edge_labels=edge_labels))


# ----------------------------------------------------------------------------
# commands


def cmd_graph_check(args) -> int:
    g = _read_graph(args.file)
    prop = args.property
    out = {"command": "graph check", "property": prop, "vertices": g.n, "edges": g.m}
    if prop == "girth":
        gi = girth(g)
        out["value"] = None if gi == float("inf") else gi
        _emit(out, args)
        return EXIT_OK
    if prop == "cubical":
        col = find_nice_coloring(g, budget=args.budget)
    else:
        col = find_very_nice_coloring(g, budget=args.budget)
    out["value"] = col is not None
    if col is not None:
        out["coloring"] = col.to_json()
        if prop == "layered":
            if is_connected(g):
                out["embedding"] = embed_from_very_nice(g, col).to_json()
            else:
                emb = decide_layered(g, args.budget)
                out["embedding"] = emb.to_json() if emb else None
        _maybe_dot(args, g, list(col.colors))
    else:
        _maybe_dot(args, g)
    _emit(out, args)
    return EXIT_OK if col is not None else EXIT_VIOLATION


def cmd_embed_subdivision(args) -> int:
    t, k = args.t, args.k
    if args.family == "odd-complete":
        spec = subdivisions.odd_complete_spec(t, k)
        emb = subdivisions.embed_odd_subdivision_complete(t, k)
        parts = subdivisions.odd_partition(t, k) if k >= 1 else None
    else:
        spec = subdivisions.even_bipartite_spec(t, k)
        emb = subdivisions.embed_even_subdivision_bipartite(t, k)
        parts = subdivisions.even_partition(t, k) if k >= 4 and k % 2 == 0 else None
    rep = verify_layer_embedding(spec.graph, emb)
    out = {"command": "embed subdivision", "family": args.family, "t": t, "k": k,
           "graph": graph_to_json(spec.graph), "embedding": emb.to_json(),
           "verified": rep.ok, "violation": rep.violation}
    if parts is not None:
        try:
            cert = check_partite(emb, parts)
            out["partite"] = {"parts": [sorted(p) for p in cert.parts], "sizes": list(cert.sizes)}
        except ValueError as exc:
            out["partite"] = {"error": str(exc)}
    _maybe_dot(args, spec.graph)
    _emit(out, args)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_turan_ex(args) -> int:
    try:
        res = turan.ex_exact(args.n, args.forbid, budget=args.budget)
    except BudgetExhausted as exc:
        lo, hi = exc.partial
        _emit({"command": "turan ex", "n": args.n, "pattern": args.forbid, "exact": False,
               "lower": lo, "upper": hi, "nodes": exc.nodes}, args)
        return EXIT_BUDGET
    out = {"command": "turan ex", **res.to_json()}
    if args.n > 4:
        out["note"] = "exactness is only guaranteed for n <= 4 within the budget"
    _emit(out, args)
    return EXIT_OK


def cmd_e_of_t(args) -> int:
    print("t\te(t)\tn\tk\tN_A\tN_B")
    for r in compression.e_table(args.t, args.k_max):
        w = r.witness
        print(f"{r.t}\t{r.value}\t{w.n}\t{w.k}\t{w.N_A}\t{w.N_B}")
    return EXIT_OK


def cmd_c10_build(args) -> int:
    cover = c10.build_cover(args.n, seed=args.seed)
    coloring = c10.combined_coloring(args.n, cover)
    color, edges = c10.largest_class(args.n, coloring)
    out = {"command": "c10 build", "n": args.n, "cover_size": len(cover),
           "cover": [list(p) for p in cover.perms], "class_color": list(color),
           "class_size": len(edges), "palette_bound": coloring.palette_bound}
    code = EXIT_OK
    if args.verify:
        rep = c10.verify_no_mono_c10(args.n, coloring, workers=args.threads)
        out["verified"] = rep.ok
        out["report"] = rep.to_json()
        code = EXIT_OK if rep.ok else EXIT_VIOLATION
    else:
        out["verified"] = False
    _emit(out, args)
    return code


def cmd_appendix_b(args) -> int:
    emb = fixed_distance.embed_F(args.n, args.m)
    out = {"command": "appendix-b", "n": args.n, "m": args.m, "N": emb.N, "layers": emb.layers()}
    code = EXIT_OK
    if args.verify:
        rep = fixed_distance.verify_fixed_distance(emb)
        out["verified"] = rep.ok
        out["distances"] = list(rep.distances)
        if rep.problem:
            out["problem"] = rep.problem
        code = EXIT_OK if rep.ok else EXIT_VIOLATION
    if args.words:
        out["map"] = {to_bits(v, args.n): emb.word(v) for v in range(1 << args.n)}
    _emit(out, args)
    return code


def cmd_gallery_get(args) -> int:
    try:
        g = gallery.by_name(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    _maybe_dot(args, g)
    _emit(graph_to_json(g), args)
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.table in (1, 2):
        reports = [subdivisions.table_fidelity_check(args.table, k)
                   for k in sorted(subdivisions.TABLE1 if args.table == 1 else subdivisions.TABLE2)]
        sys.stdout.write(subdivisions.render_table(args.table))
        ok = all(r.ok for r in reports)
    else:
        ok = True
        for name in sorted(c10.TABLE3):
            order, rows = c10.TABLE3[name]
            cyc, _ = c10.table3_cycle(name)
            got = c10.classify_10cycle(cyc).verdict
            ok &= got == name
            print(f"{name} (columns {' '.join(order)}): {' '.join(rows)} -> {got}")
    if not ok:
        print("mismatch against the reference table", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


# ----------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=c10.DEFAULT_SEED, help="seed for randomized steps")
    common.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")
    common.add_argument("--dot", metavar="FILE", help="also write the graph in DOT format")
    common.add_argument("--compact", action="store_true", help="single-line JSON")

    p = _Parser(prog="hyperlayer", description="Layered subgraphs of the hypercube.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gr = sub.add_parser("graph", help="graph utilities").add_subparsers(dest="sub", required=True,
                                                                           parser_class=_Parser)
    chk = gr.add_parser("check", parents=[common], help="decide a property of a JSON graph")
    chk.add_argument("file", help="graph JSON file, or - for stdin")
    chk.add_argument("--property", choices=["cubical", "layered", "girth"], required=True)
    chk.add_argument("--budget", type=int, default=None)
    chk.set_defaults(func=cmd_graph_check)

    em = sub.add_parser("embed", help="explicit embeddings").add_subparsers(dest="sub", required=True,
                                                                              parser_class=_Parser)
    sd = em.add_parser("subdivision", parents=[common], help="layer embedding of a subdivision")
    sd.add_argument("--family", choices=["odd-complete", "even-bipartite"], required=True)
    sd.add_argument("-t", type=int, required=True)
    sd.add_argument("-k", type=int, required=True)
    sd.set_defaults(func=cmd_embed_subdivision)

    tu = sub.add_parser("turan", help="extremal numbers").add_subparsers(dest="sub", required=True,
                                                                           parser_class=_Parser)
    ex = tu.add_parser("ex", parents=[common], help="exact ex(Q_n, H) by branch and bound")
    ex.add_argument("--n", type=int, required=True)
    ex.add_argument("--forbid", choices=["C4", "C6", "C6-", "C8", "C10"], required=True)
    ex.add_argument("--budget", type=int, default=None)
    ex.set_defaults(func=cmd_turan_ex)

    et = sub.add_parser("e-of-t", parents=[common], help="table of e(t) as TSV")
    et.add_argument("--t", type=int, required=True)
    et.add_argument("--k-max", type=int, default=None)
    et.set_defaults(func=cmd_e_of_t)

    cc = sub.add_parser("c10", help="C10-free construction").add_subparsers(dest="sub", required=True,
                                                                              parser_class=_Parser)
    cb = cc.add_parser("build", parents=[common], help="cover, coloring and largest class")
    cb.add_argument("--n", type=int, required=True)
    cb.add_argument("--verify", action="store_true", help="enumerate all 10-cycles (n <= 6)")
    cb.set_defaults(func=cmd_c10_build)

    ab = sub.add_parser("appendix-b", parents=[common], help="fixed-distance embedding of Q_n")
    ab.add_argument("--n", type=int, required=True)
    ab.add_argument("--m", type=int, required=True)
    ab.add_argument("--verify", action="store_true")
    ab.add_argument("--words", action="store_true", help="include the full vertex map")
    ab.set_defaults(func=cmd_appendix_b)

    ga = sub.add_parser("gallery", help="named graphs").add_subparsers(dest="sub", required=True,
                                                                         parser_class=_Parser)
    gg = ga.add_parser("get", parents=[common], help="print a named graph as JSON")
    gg.add_argument("name", help="g8, k23, c6, theta:4,4,4, q3, ...")
    gg.set_defaults(func=cmd_gallery_get)

    tb = sub.add_parser("tables", help="reference tables").add_subparsers(dest="sub", required=True,
                                                                            parser_class=_Parser)
    tr = tb.add_parser("reproduce", parents=[common], help="rebuild a table from the constructions")
    tr.add_argument("--table", type=int, choices=[1, 2, 3], required=True)
    tr.set_defaults(func=cmd_tables)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hyperlayer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, OSError) as exc:
        print(f"hyperlayer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"hyperlayer: {exc}", file=sys.stderr)
        _emit({"command": args.command, "budget_exhausted": True, "nodes": exc.nodes}, args)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"hyperlayer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
