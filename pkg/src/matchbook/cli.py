"""Command line interface.

Subcommands read a graph from a file (or '-' for stdin) as JSON or graph6,
emit JSON on stdout and diagnostics on stderr. Exit codes: 0 success,
1 invalid input or failed verification, 2 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .coloring import induced_edge_coloring, three_face_coloring
from .decompose import ternary_decompose
from .embedding import embed
from .errors import (
    BcpValidationError,
    ColoringError,
    DecompositionError,
    DisconnectedGraphError,
    FormatError,
    GraphInputError,
    MatchbookError,
    NotBipartiteError,
    NotPlanarError,
    OracleLimitError,
)
from .generators import gen_chain, gen_cube, gen_join, gen_ladder, gen_prism
from .graphs import (
    Graph,
    edge_connectivity,
    is_bipartite,
    is_connected,
    is_cubic,
    planar_embedding,
    vertex_connectivity,
)
from .render import render_svg
from .verify import mbt_oracle, verify_matching_book_embedding

_INPUT_ERRORS = (
    FormatError,
    GraphInputError,
    NotBipartiteError,
    NotPlanarError,
    DisconnectedGraphError,
    BcpValidationError,
    OracleLimitError,
    ColoringError,
    DecompositionError,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        return formats.parse_graph6(text)
    return formats.parse_graph_json(text)


def _emit(data, out: str | None) -> None:
    text = data if isinstance(data, str) else json.dumps(data, indent=2)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_check(args) -> int:
    g = _read_graph(args.graph, args.format)
    report = {
        "n": g.n,
        "m": g.num_edges,
        "connected": is_connected(g),
        "cubic": is_cubic(g),
        "bipartite": is_connected(g) and is_bipartite(g),
    }
    try:
        planar_embedding(g)
        report["planar"] = True
    except (NotPlanarError, DisconnectedGraphError, GraphInputError):
        report["planar"] = False
    if report["connected"] and g.n >= 2:
        report["edge_connectivity"] = edge_connectivity(g)
        report["vertex_connectivity"] = vertex_connectivity(g)
    report["bcp"] = all(report[k] for k in ("connected", "cubic", "bipartite", "planar"))
    _emit(report, args.output)
    return 0


def _cmd_color(args) -> int:
    g = _read_graph(args.graph, args.format)
    emb = planar_embedding(g)
    fc = three_face_coloring(emb)
    ec = induced_edge_coloring(emb, fc)
    _emit(formats.coloring_to_json_dict(fc, ec), args.output)
    return 0


def _cmd_decompose(args) -> int:
    g = _read_graph(args.graph, args.format)
    tree = ternary_decompose(g)
    _emit(formats.tree_to_json_dict(tree), args.output)
    return 0


def _cmd_embed(args) -> int:
    g = _read_graph(args.graph, args.format)
    be = embed(g)
    _emit(formats.embedding_to_json_dict(be), args.output)
    return 0


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.format)
    be = formats.embedding_from_json_dict(json.loads(_read_text(args.embedding)))
    violations = verify_matching_book_embedding(g, be, args.pages)
    result = {"valid": not violations,
              "violations": [v.describe() for v in violations]}
    _emit(result, args.output)
    if violations:
        for v in violations:
            print(v.describe(), file=sys.stderr)
        return 1
    return 0


def _cmd_mbt(args) -> int:
    g = _read_graph(args.graph, args.format)
    value = mbt_oracle(g, page_bound=args.pages, max_vertices=args.limit)
    if value is None:
        _emit({"exceeds_bound": args.pages}, args.output)
        return 0
    delta = max(g.degrees()) if g.num_edges else 0
    _emit({"mbt": value, "max_degree": delta, "dispersable": value == delta},
          args.output)
    return 0


def _cmd_gen(args) -> int:
    if args.generator == "prism":
        g = gen_prism(args.m)
    elif args.generator == "cube":
        g = gen_cube()
    elif args.generator == "ladder":
        g = gen_ladder(args.k)
    elif args.generator == "join":
        import random

        left = gen_prism(args.m)
        right = gen_prism(args.m2)
        rng = random.Random(args.seed)
        g = gen_join(left, rng.choice(left.edge_list()),
                     right, rng.choice(right.edge_list()), args.k)
    else:  # chain
        parts = [gen_prism(m) for m in args.sizes]
        ks = [int(x) for x in args.ks.split(",")] if args.ks else [0] * (len(parts) - 1)
        g = gen_chain(parts, ks, seed=args.seed)
    if args.format == "graph6":
        _emit(formats.emit_graph6(g), args.output)
    else:
        _emit(formats.graph_to_json_dict(g), args.output)
    return 0


def _cmd_render(args) -> int:
    g = _read_graph(args.graph, args.format)
    if args.embedding:
        be = formats.embedding_from_json_dict(json.loads(_read_text(args.embedding)))
        violations = verify_matching_book_embedding(g, be, args.pages)
        if violations:
            for v in violations:
                print(v.describe(), file=sys.stderr)
            return 1
    else:
        be = embed(g)
    _emit(render_svg(g, be), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchbook",
        description="3-page matching book embeddings of bipartite cubic planar graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph_arg=True):
        if graph_arg:
            p.add_argument("graph", help="graph file, or '-' for stdin")
        p.add_argument("--format", choices=("json", "graph6"), default="json",
                       help="graph input/output format")
        p.add_argument("-o", "--output", help="output file (default stdout)")

    add_common(sub.add_parser("check", help="structural predicates and connectivity"))
    add_common(sub.add_parser("color", help="3-face-coloring and induced edge coloring"))
    add_common(sub.add_parser("decompose", help="join-tree decomposition as JSON"))
    add_common(sub.add_parser("embed", help="compute a 3-page matching book embedding"))

    p = sub.add_parser("verify", help="check an embedding against a graph")
    add_common(p)
    p.add_argument("--embedding", required=True, help="embedding JSON file")
    p.add_argument("--pages", type=int, default=3, help="page budget (default 3)")

    p = sub.add_parser("mbt", help="exact matching book thickness (small graphs)")
    add_common(p)
    p.add_argument("--pages", type=int, default=None,
                   help="report 'exceeds_bound' beyond this page count")
    p.add_argument("--limit", type=int, default=10,
                   help="max vertices for the exhaustive search (default 10)")

    p = sub.add_parser("gen", help="generate a corpus graph")
    gsub = p.add_subparsers(dest="generator", required=True)
    gp = gsub.add_parser("prism")
    gp.add_argument("m", type=int)
    add_common(gp, graph_arg=False)
    gc = gsub.add_parser("cube")
    add_common(gc, graph_arg=False)
    gl = gsub.add_parser("ladder")
    gl.add_argument("k", type=int)
    add_common(gl, graph_arg=False)
    gj = gsub.add_parser("join")
    gj.add_argument("m", type=int, help="left prism size")
    gj.add_argument("m2", type=int, help="right prism size")
    gj.add_argument("--k", type=int, default=0, help="ladder length")
    gj.add_argument("--seed", type=int, default=0, help="edge choice seed")
    add_common(gj, graph_arg=False)
    gch = gsub.add_parser("chain")
    gch.add_argument("sizes", type=int, nargs="+", help="prism sizes, joined left to right")
    gch.add_argument("--ks", help="comma-separated ladder lengths (default all 0)")
    gch.add_argument("--seed", type=int, default=0, help="edge choice seed")
    add_common(gch, graph_arg=False)

    p = sub.add_parser("render", help="SVG arc diagram of an embedding")
    add_common(p)
    p.add_argument("--embedding", help="embedding JSON (computed when omitted)")
    p.add_argument("--pages", type=int, default=3)

    return parser


_COMMANDS = {
    "check": _cmd_check,
    "color": _cmd_color,
    "decompose": _cmd_decompose,
    "embed": _cmd_embed,
    "verify": _cmd_verify,
    "mbt": _cmd_mbt,
    "gen": _cmd_gen,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MatchbookError as exc:
        # contract breaches, embedding failures, blown search budgets
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
