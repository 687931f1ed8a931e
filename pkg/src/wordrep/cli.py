"""Command-line interface.

Exit codes: 0 success (or PASS / found), 1 negative verdict (FAIL, absent,
not a circle graph), 2 bad input, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path
from typing import Sequence

from . import constructions as cons
from . import graphs as gr
from . import models
from . import represent as rp
from . import search as sr
from .graphs import Graph
from .represent import RepresentationError, graph_of_word, verify
from .universal import represent2, represent2_connected
from .words import Word, compact, format_word, parse_word

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str) -> Graph:
    return gr.parse_graph(_read(path))


def _one_word(args: argparse.Namespace) -> Word:
    words = _words(args)
    if len(words) != 1:
        raise InputError(f"expected one word, got {len(words)}")
    return words[0]


def _words(args: argparse.Namespace) -> list[Word]:
    texts = list(args.word or []) + [_read(p) for p in args.word_file or []]
    if not texts:
        raise InputError("give a word with --word or --word-file")
    out = []
    for t in texts:
        w = parse_word(t)
        if not w:
            raise InputError("empty word")
        out.append(w)
    return out


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None


def _emit_graph(g: Graph, fmt: str) -> str:
    return gr.serialize_graph6(g) + "\n" if fmt == "g6" else gr.serialize_edgelist(g)


def _compacted(w: Word, args: argparse.Namespace) -> Word:
    if not args.compact:
        return w
    out, back = compact(w)
    pairs = " ".join(f"{new}<-{old}" for new, old in sorted(back.items()))
    print(f"relabel: {pairs}", file=sys.stderr)
    return out


def _write_svg(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


# -- commands ----------------------------------------------------------------------

def cmd_graph_of_word(args: argparse.Namespace) -> int:
    w = _compacted(_one_word(args), args)
    sys.stdout.write(_emit_graph(graph_of_word(w, args.k), args.out))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    w = _compacted(_one_word(args), args)
    verdict = verify(w, _graph(args.graph), args.k)
    print(verdict)
    return EXIT_OK if verdict else EXIT_NO


def cmd_represent2(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    build = represent2_connected if args.connected else represent2
    pw = build(g, exact_blocks=args.exact_blocks)
    print(pw)
    print(f"# {len(pw)} blocks, {pw.duplications} duplicated")
    return EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    sub = args.sub
    if sub in ("extend", "double", "endpoints"):
        w = _one_word(args)
        if sub == "extend":
            out = rp.extend_level(w, args.side)
        elif sub == "double":
            out = rp.double(w)
        else:
            out = rp.with_endpoints(w, args.first, args.last)
        print(format_word(out))
        return EXIT_OK
    if sub == "union":
        parts = [(w, graph_of_word(w, args.k)) for w in _words(args)]
        res = cons.disjoint_union(parts, args.k)
    elif sub in ("glue", "connect"):
        words = _words(args)
        if len(words) != 2:
            raise InputError(f"{sub} needs exactly two words")
        op = cons.glue_at_vertex if sub == "glue" else cons.connect_by_edge
        res = op(words[0], words[1], args.k, args.x, args.y)
    else:
        w = _one_word(args)
        if sub == "pendant":
            res = cons.add_pendant(w, args.k, args.x)
        elif sub == "twin":
            res = cons.add_twin(w, args.k, args.y, args.adjacent)
        elif sub == "cone-uniform":
            res = cons.add_vertex_from_uniform(w, _vertex_list(args.nbrs))
        elif sub == "cone-general":
            res = cons.add_vertex_general(w, args.k, _vertex_list(args.nbrs))
        elif sub == "triangle":
            res = cons.add_triangle(w, args.x, args.y)
        elif sub == "cone-perm":
            res = cons.add_vertex_from_permutational(w, _vertex_list(args.nbrs))
        elif sub == "remove-edge":
            res = cons.remove_edge(w, args.x, args.y)
        elif sub == "remove-clique":
            res = cons.remove_clique_edges(w, _vertex_list(args.clique))
        else:
            res = cons.remove_star_edges(w, args.v, _vertex_list(args.nbrs))
    print(format_word(res.word))
    print(f"# level {res.level}: {res.certificate}")
    for note in res.notes:
        print(f"# {note}")
    return EXIT_OK


def _budget(args: argparse.Namespace) -> sr.SearchBudget:
    if args.uniform is not None and args.free is not None:
        raise InputError("--uniform and --free are exclusive")
    copies = args.uniform or args.free or sr.SearchBudget.max_copies_per_letter
    return sr.SearchBudget(
        max_copies_per_letter=copies,
        uniform_only=args.free is None,
        permutational_only=args.permutational,
        node_limit=args.node_limit or None,
        worker_hint=args.workers,
    )


def cmd_search(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    res = sr.find_representant(g, args.k, _budget(args))
    meta = f"# family {res.family}, nodes {res.nodes}, k=0 length bound {res.length_bound}"
    if res.status == "found":
        print(format_word(res.word))
        print(meta)
        return EXIT_OK
    if res.status == "absent":
        print(f"proved absent in family {res.family}")
        print(meta)
        return EXIT_NO
    print(f"budget exhausted in family {res.family}")
    print(meta)
    return EXIT_BUDGET


def cmd_min_level(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    res = sr.min_level(g, _budget(args))
    assert res is not None
    print(f"level {res.qualifier} {res.k}")
    print(format_word(res.word, block=g.n if res.family == "universal-permutational" else None))
    for s in res.searches:
        print(f"# searched {s.family}: {s.status}, nodes {s.nodes}")
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    b = _budget(args)
    graphs = None
    if args.graphs:
        graphs = [gr.parse_graph6(ln) for ln in _read(args.graphs).split() if ln]
        bad = [g for g in graphs if g.n != args.n]
        if bad:
            raise InputError(f"supplied graphs must all have {args.n} vertices")
    rows = list(sr.census_rows(args.n, args.k, b, graphs=graphs, universal_only=args.universal_only))
    text = sr.census_csv(rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        tally = Counter((r["k_claimed"], r["qualifier"]) for r in rows)
        print(f"{len(rows)} graphs")
        for (k, q), c in sorted(tally.items()):
            print(f"k {q} {k}: {c}")
    return EXIT_OK


def cmd_interval(args: argparse.Namespace) -> int:
    if args.sub == "to-word":
        model = models.parse_interval_model(_read(args.model))
        print(format_word(models.interval_to_word(model)))
        _write_svg(args.svg, models.emit_svg("intervals", model))
        return EXIT_OK
    w = _one_word(args)
    if args.sub == "from-word":
        model = models.word_to_intervals(w)
    else:
        model = models.runiform_to_intervals(w, args.r)
    sys.stdout.write(models.serialize_interval_model(model))
    _write_svg(args.svg, models.emit_svg("intervals", model))
    return EXIT_OK


def cmd_circle(args: argparse.Namespace) -> int:
    g = _graph(args.graph)
    if g.n > args.cap:
        raise InputError(f"graph has {g.n} vertices, above the cap {args.cap}")
    res = sr.find_representant(g, 0, sr.SearchBudget(max_copies_per_letter=2, node_limit=None, worker_hint=args.workers))
    if res.found:
        print("circle graph")
        print(format_word(res.word))
        _write_svg(args.svg, models.emit_svg("chords", res.word))
        return EXIT_OK
    print("not a circle graph")
    return EXIT_NO


def cmd_geometry(args: argparse.Namespace) -> int:
    c = models.parse_coloring(_read(args.coloring), r=args.r)
    g = models.m_intersection_graph(c, args.m)
    sys.stdout.write(_emit_graph(g, args.out))
    _write_svg(args.svg, models.emit_svg("curves", c))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def _word_args(p: argparse.ArgumentParser, many: bool = False) -> None:
    hint = " (repeatable)" if many else ""
    p.add_argument("--word", action="append", help="quoted whitespace-separated letters" + hint)
    p.add_argument("--word-file", action="append", help="file holding a word" + hint)


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--uniform", type=int, metavar="T", help="t-uniform words for t = 1..T (default family, T=3)")
    p.add_argument("--free", type=int, metavar="T", help="any word with at most T copies of each letter")
    p.add_argument("--permutational", action="store_true", help="only concatenations of permutations")
    p.add_argument("--node-limit", type=int, default=5_000_000, help="0 means unlimited")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wordrep", description="k-11-representation of graphs by words")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph-of-word", help="graph a word represents at level k")
    p.add_argument("--k", type=int, required=True)
    _word_args(p)
    p.add_argument("--out", choices=("g6", "edges"), default="edges")
    p.add_argument("--compact", action="store_true", help="relabel the alphabet to 1..n first")
    p.set_defaults(func=cmd_graph_of_word)

    p = sub.add_parser("verify", help="check a word against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    _word_args(p)
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("represent2", help="permutational 2-11-representant")
    p.add_argument("--graph", required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--exact-blocks", action="store_true")
    p.set_defaults(func=cmd_represent2)

    p = sub.add_parser("transform", help="word constructions")
    tsub = p.add_subparsers(dest="sub", required=True)
    t = tsub.add_parser("extend", help="same graph one level up")
    _word_args(t)
    t.add_argument("--side", choices=("left", "right"), default="left")
    t = tsub.add_parser("double", help="ww: level 0 graph read at level 1")
    _word_args(t)
    t = tsub.add_parser("endpoints", help="force the first and last letters")
    _word_args(t)
    t.add_argument("--first", type=int, required=True)
    t.add_argument("--last", type=int, required=True)
    t = tsub.add_parser("union", help="disjoint union of graphs")
    _word_args(t, many=True)
    t.add_argument("--k", type=int, required=True)
    for name in ("glue", "connect"):
        t = tsub.add_parser(name, help="join at a shared vertex" if name == "glue" else "join by the edge xy")
        _word_args(t, many=True)
        t.add_argument("--k", type=int, required=True)
        t.add_argument("--x", type=int, required=True, help="vertex of the first graph")
        t.add_argument("--y", type=int, required=True, help="vertex of the second graph")
    t = tsub.add_parser("pendant", help="new vertex hanging off x")
    _word_args(t)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--x", type=int, required=True)
    t = tsub.add_parser("twin", help="new twin of y")
    _word_args(t)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--y", type=int, required=True)
    t.add_argument("--adjacent", action="store_true")
    t = tsub.add_parser("cone-uniform", help="new vertex on NBRS, from a uniform word")
    _word_args(t)
    t.add_argument("--nbrs", default="")
    t = tsub.add_parser("cone-general", help="new vertex on NBRS at a higher level")
    _word_args(t)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--nbrs", default="")
    t = tsub.add_parser("triangle", help="new vertex adjacent to the edge xy")
    _word_args(t)
    t.add_argument("--x", type=int, required=True)
    t.add_argument("--y", type=int, required=True)
    t = tsub.add_parser("cone-perm", help="new vertex on NBRS, from a permutational word")
    _word_args(t)
    t.add_argument("--nbrs", default="")
    t = tsub.add_parser("remove-edge", help="delete the edge xy")
    _word_args(t)
    t.add_argument("--x", type=int, required=True)
    t.add_argument("--y", type=int, required=True)
    t = tsub.add_parser("remove-clique", help="delete all edges inside a clique")
    _word_args(t)
    t.add_argument("--clique", required=True)
    t = tsub.add_parser("remove-star", help="delete edges from v to NBRS")
    _word_args(t)
    t.add_argument("--v", type=int, required=True)
    t.add_argument("--nbrs", required=True)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search", help="brute-force representant search")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    _budget_args(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("min-level", help="smallest level with a witness")
    p.add_argument("--graph", required=True)
    _budget_args(p)
    p.set_defaults(func=cmd_min_level)

    p = sub.add_parser("census", help="classify every labeled graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV path, or - for standard output")
    p.add_argument("--graphs", help="file of graph6 lines to use instead of all labeled graphs")
    p.add_argument("--universal-only", action="store_true", help="skip searching, use the level-2 construction")
    _budget_args(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("interval", help="interval models and words")
    isub = p.add_subparsers(dest="sub", required=True)
    t = isub.add_parser("to-word", help="interval model to 2-uniform word")
    t.add_argument("--model", required=True)
    t.add_argument("--svg")
    t = isub.add_parser("from-word", help="2-uniform word to interval model")
    _word_args(t)
    t.add_argument("--svg")
    t = isub.add_parser("from-runiform", help="r-uniform word to interval model")
    _word_args(t)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--svg")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("circle", help="decide circle-graph membership")
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_circle)

    p = sub.add_parser("geometry", help="curves on a convex arc")
    gsub = p.add_subparsers(dest="sub", required=True)
    t = gsub.add_parser("imgraph", help="m-intersection graph of a colouring")
    t.add_argument("--coloring", required=True)
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--out", choices=("g6", "edges"), default="edges")
    t.add_argument("--svg")
    p.set_defaults(func=cmd_geometry)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RepresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
