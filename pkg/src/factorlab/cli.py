"""``factorlab`` command line: props, construct, verify-paper, scan, catalog."""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from typing import Iterator, Sequence

from . import constructions as C
from .catalog import load_bipartite_cubic, load_cubic, named_catalog
from .errors import FactorLabError, NoPerfectMatching
from .factors import WORKBOUND_ENV, is_2fh, is_e2f, is_pmh, malleable_vertices
from .graph import (Graph, girth, is_bipartite, is_connected, parse_edge_list, read_graph6_stream,
                    write_edge_list, write_graph6)
from .verifier import REGISTRY, ScanFilter, default_catalog, scan, verify_paper

log = logging.getLogger("factorlab")


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_graphs(path: str, fmt: str) -> Iterator[Graph]:
    """graph6 is one graph per line; edge lists are separated by blank lines."""
    text = _read_text(path)
    if fmt == "g6":
        yield from read_graph6_stream(text.splitlines())
        return
    block: list[str] = []
    for line in text.splitlines() + [""]:
        if line.strip():
            block.append(line)
        elif block:
            yield parse_edge_list("\n".join(block))
            block = []


def _emit(obj, args) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def graph_props(g: Graph) -> dict:
    if not is_connected(g):
        raise UsageError("input graph is disconnected; PMH and 2FH do not decompose over components")
    g_ = girth(g)
    out = {"n": g.n, "m": g.m, "girth": None if math.isinf(g_) else int(g_),
           "bipartite": is_bipartite(g) is not None, "2fh": is_2fh(g).verdict, "e2f": is_e2f(g).verdict}
    try:
        out["pmh"] = is_pmh(g).verdict
        out["malleable"] = sorted(malleable_vertices(g))
    except NoPerfectMatching:
        out["pmh"] = None
        out["malleable"] = []
        out["note"] = "no perfect matching"
    return out


def _props_text(label: str, p: dict) -> str:
    fields = ["pmh", "2fh", "e2f", "girth", "bipartite"]
    body = "  ".join(f"{k}={p[k]}" for k in fields)
    return f"{label}: n={p['n']} m={p['m']}  {body}  malleable={p['malleable']}"


def cmd_props(args) -> int:
    if args.name:
        graphs = [(args.name, C.make_named(args.name))]
    elif args.input:
        graphs = [(f"#{i}", g) for i, g in enumerate(read_graphs(args.input, args.format))]
    else:
        raise UsageError("props needs --name or an input path")
    results = [(label, graph_props(g)) for label, g in graphs]
    if args.output == "json":
        payload = [dict(p, graph=label) for label, p in results]
        _emit(payload[0] if args.name else payload, args)
    else:
        for label, p in results:
            print(_props_text(label, p))
    return 0


def run_script(script: dict) -> Graph:
    """Apply a construction script ``{"base": name, "ops": [...]}``.

    ``star`` and ``y`` ops address vertices of the base graph by their
    original ids; ``2cut`` addresses edges of the current graph.
    """
    g = C.make_named(script["base"]) if isinstance(script["base"], str) else \
        Graph(script["base"]["n"], script["base"]["edges"])
    track = {v: v for v in range(g.n)}
    for op in script.get("ops", []):
        kind = op.get("op")
        if kind in ("star", "y"):
            at = op["at"]
            if at not in track:
                raise UsageError(f"base vertex {at} was consumed by an earlier step")
            attach = C.complete(4) if kind == "y" else C.make_named(op["attach"])
            pairing = tuple(op.get("pairing", (0, 1, 2)))
            res = C.star_product(C.StarSpec(g, track[at], attach, op.get("attachAt", 0), pairing,
                                            allow_theta=op.get("allowTheta", False)))
            track = {v: res.maps[0][cur] for v, cur in track.items() if v != at}
        elif kind == "2cut":
            other = C.make_named(op["attach"])
            res = C.two_cut_connection(C.TwoCutSpec(g, op["edge"], other, op.get("attachEdge", 0),
                                                    op.get("crossed", False)))
        else:
            raise UsageError(f"unknown op {kind!r}")
        g = res.graph
    return g


def cmd_construct(args) -> int:
    try:
        script = json.loads(_read_text(args.script))
    except json.JSONDecodeError as exc:
        raise UsageError(f"script is not valid JSON: {exc}") from None
    g = run_script(script)
    if args.output == "json":
        out = {"n": g.n, "edges": [list(p) for p in g.pairs()]}
        if args.props:
            out["props"] = graph_props(g)
        _emit(out, args)
    else:
        sys.stdout.write(_format_graph(g, args.format))
        if args.props:
            print(_props_text("result", graph_props(g)))
    return 0


def cmd_verify(args) -> int:
    ids = args.only.split(",") if args.only else None
    summary = verify_paper(default_catalog(args.max_n), ids)
    if args.output == "json":
        _emit(summary.to_json(), args)
    else:
        print(summary.table())
        for c in summary.checks:
            for f in c.failures[:3]:
                print(f"  {c.id} failed on {f['instance']}")
    return 0 if summary.ok else 1


def cmd_scan(args) -> int:
    try:
        filt = ScanFilter.parse(args.filter, args.max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.girth is not None:
        filt = ScanFilter(**{**filt.__dict__, "min_girth": args.girth})
    records = scan(read_graphs(args.input, args.format), filt, args.jobs)
    survivors = [r for r in records if r.get("survivor")]
    flagged = [r for r in survivors if r.get("counterexample")]
    if args.output == "json":
        _emit({"scanned": len(records), "survivors": survivors,
               "counterexamples": len(flagged)}, args)
    else:
        print(f"scanned {len(records)}, survivors {len(survivors)}, counterexamples {len(flagged)}")
        for r in survivors:
            code = r.get("graph6", "(multigraph)")
            tag = " COUNTEREXAMPLE" if r.get("counterexample") else ""
            mark = " heawood" if r.get("heawood_signature") else " k33" if r.get("k33_signature") else ""
            uniq = r.get("unique_extension_pm") is not None
            print(f"{r['index']:5d} n={r['n']:<3d} 2fh={r.get('2fh')!s:5} pmh={r.get('pmh')!s:5} "
                  f"unique_pm={uniq!s:5} {code}{mark}{tag}")
    return 0


def _format_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return write_graph6(g) + "\n"
    return write_edge_list(g)


def cmd_catalog(args) -> int:
    if args.name:
        g = C.make_named(args.name)
        sys.stdout.write(_format_graph(g, args.format))
        return 0
    if args.cubic is not None:
        gs = load_bipartite_cubic(args.cubic) if args.bipartite else load_cubic(args.cubic)
        for g in gs:
            sys.stdout.write(_format_graph(g, args.format))
            if args.format == "edgelist":
                sys.stdout.write("\n")
        return 0
    rows = {k: {"n": g.n, "m": g.m} for k, g in named_catalog().items()}
    if args.output == "json":
        _emit(rows, args)
    else:
        for k, r in rows.items():
            print(f"{k:10} n={r['n']:<3d} m={r['m']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="factorlab", description=__doc__)
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.add_argument("--workbound", type=int, help=f"search-node cap (also ${WORKBOUND_ENV})")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("props", help="decide PMH/2FH/E2F/malleability for input graphs")
    s.add_argument("input", nargs="?", help="graph file or - for stdin")
    s.add_argument("--name", help="named graph instead of an input file")
    s.add_argument("--format", choices=("g6", "edgelist"), default="edgelist")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("construct", help="run a JSON construction script")
    s.add_argument("script", help="script file or - for stdin")
    s.add_argument("--format", choices=("g6", "edgelist"), default="edgelist")
    s.add_argument("--props", action="store_true", help="also decide properties of the result")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify-paper", help="run the theorem registry")
    s.add_argument("--only", help=f"comma-separated ids from: {', '.join(REGISTRY)}")
    s.add_argument("--max-n", type=int, default=10, help="largest catalog cubic order (<= 12)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="scan a graph stream for conjecture counterexamples")
    s.add_argument("input", help="graph file or - for stdin")
    s.add_argument("--format", choices=("g6", "edgelist"), default="g6")
    s.add_argument("--filter", default="", help="comma list: bipartite,cubic,pmh,girth>=G,cyclicK,conjecture")
    s.add_argument("--max-n", type=int)
    s.add_argument("--girth", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("catalog", help="list or emit catalog graphs")
    s.add_argument("--name")
    s.add_argument("--cubic", type=int, metavar="N", help="emit all connected cubic graphs on N vertices")
    s.add_argument("--bipartite", action="store_true")
    s.add_argument("--format", choices=("g6", "edgelist"), default="edgelist")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    saved = os.environ.get(WORKBOUND_ENV)
    if args.workbound is not None:
        # via the environment so scan workers inherit it
        os.environ[WORKBOUND_ENV] = str(args.workbound)
    try:
        return args.func(args)
    except (UsageError, FactorLabError, OSError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"factorlab: error: {msg}", file=sys.stderr)
        return 2
    finally:
        if saved is None:
            os.environ.pop(WORKBOUND_ENV, None)
        else:
            os.environ[WORKBOUND_ENV] = saved


if __name__ == "__main__":
    sys.exit(main())
