"""Command-line front end.

Every subcommand reads one graph document and prints one JSON result
document on stdout. Exit status: 0 ok, 1 not-chordless / delta-too-small /
invalid-colouring, 2 invalid-input.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from contextlib import contextmanager

from .chordless import (
    DeltaTooSmallError,
    NotChordlessError,
    Trace,
    colour_small_degree,
    edge_colour_chordless,
    total_colour_chordless,
)
from .graph import max_degree
from .io import DocumentError, GraphDocument, ResultDocument, parse_graph, serialise_graph
from .oracle import (
    OracleError,
    brute_force_chromatic_index,
    brute_force_total_chromatic,
    generate_chordless,
    verify_edge_colouring,
    verify_total_colouring,
)
from .recognition import decomposition_tree, find_chord, find_dense_edge

log = logging.getLogger("chordless")

EXIT = {"ok": 0, "not-chordless": 1, "delta-too-small": 1, "invalid-colouring": 1, "invalid-input": 2}
ORACLE_MAX_EDGES = 30


@contextmanager
def _timed(doc: ResultDocument, phase: str):
    start = time.perf_counter()
    try:
        yield
    finally:
        doc.timing_ms[phase] = round((time.perf_counter() - start) * 1000, 3)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _witness(w) -> dict:
    return {"cycle": list(w.cycle), "chord": list(w.chord)}


def _cmd_colour(args, doc: GraphDocument, out: ResultDocument) -> None:
    g = doc.graph()
    with _timed(out, "recognition"):
        w = find_chord(g)
    if w is not None:
        out.status = "not-chordless"
        out.witness = _witness(w)
        return
    delta = max_degree(g) if len(g) else 0
    trace = Trace()
    if delta < 3:
        out.status = "delta-too-small"
        with _timed(out, "colouring"):
            c = colour_small_degree(g, args.mode)
    else:
        with _timed(out, "colouring"):
            if args.mode == "edge":
                c = edge_colour_chordless(g, trace)
            else:
                c = total_colour_chordless(g, trace)
        # split search happens inside the recursion; report it as its own phase
        split_ms = round(trace.split_seconds * 1000, 3)
        out.timing_ms["decomposition"] = split_ms
        out.timing_ms["colouring"] = round(out.timing_ms["colouring"] - split_ms, 3)
    out.set_colouring(c, doc.n)
    if args.stats:
        out.extra["stats"] = {
            "n": doc.n,
            "m": len(doc.edges),
            "max_degree": delta,
            "colours_used": c.colours_used(),
            "recursive_steps": len(trace.steps),
        }


def _cmd_recognise(args, doc: GraphDocument, out: ResultDocument) -> None:
    g = doc.graph()
    with _timed(out, "recognition"):
        w = find_chord(g)
        dense = find_dense_edge(g)
    out.extra.update(
        chordless=w is None,
        two_sparse=dense is None,
        max_degree=max_degree(g) if len(g) else 0,
        dense_edge=list(dense) if dense else None,
    )
    if w is not None:
        out.witness = _witness(w)


def _cmd_decompose(args, doc: GraphDocument, out: ResultDocument) -> None:
    g = doc.graph()
    with _timed(out, "recognition"):
        w = find_chord(g)
    if w is not None:
        out.status = "not-chordless"
        out.witness = _witness(w)
        return
    with _timed(out, "decomposition"):
        out.extra["tree"] = decomposition_tree(g)


def _cmd_oracle(args, doc: GraphDocument, out: ResultDocument) -> None:
    g = doc.graph()
    if len(doc.edges) > ORACLE_MAX_EDGES:
        raise DocumentError(f"oracle is limited to {ORACLE_MAX_EDGES} edges")
    with _timed(out, "oracle"):
        out.extra["max_degree"] = max_degree(g) if len(g) else 0
        out.extra["chromatic_index"] = brute_force_chromatic_index(g, limit=ORACLE_MAX_EDGES)
        out.extra["total_chromatic_number"] = brute_force_total_chromatic(g, limit=ORACLE_MAX_EDGES)


def _cmd_verify(args, doc: GraphDocument, out: ResultDocument) -> None:
    result = ResultDocument.from_json(_read(args.result))
    if result.edge_colours is None:
        raise DocumentError("result document carries no colouring")
    g = doc.graph()
    c = result.colouring()
    total = result.vertex_colours is not None
    out.extra["checked_mode"] = "total" if total else "edge"
    try:
        with _timed(out, "verification"):
            report = verify_total_colouring(g, c) if total else verify_edge_colouring(g, c)
    except OracleError as exc:
        raise DocumentError(str(exc)) from None
    in_palette = all(1 <= x <= (result.palette or 0) for x in c.edge_colours.values()) and all(
        1 <= x <= (result.palette or 0) for x in (c.vertex_colours or {}).values()
    )
    out.extra["valid"] = report.valid and in_palette
    out.extra["colours_used"] = report.colours_used
    out.extra["violations"] = [[list(map(_jsonable, pair)), col] for pair, col in report.violations[:20]]
    if not out.extra["valid"]:
        out.status = "invalid-colouring"


def _jsonable(element):
    kind, x = element
    return [kind, list(x) if isinstance(x, tuple) else x]


def _cmd_generate(args) -> str:
    g = generate_chordless(args.n, args.seed, args.profile)
    return serialise_graph(GraphDocument.from_graph(g, f"{args.profile}-{args.n}-{args.seed}"), args.format or "edgelist")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="graph document path, or - for stdin")
    common.add_argument("--format", choices=["edgelist", "structured"], help="input format (sniffed if omitted)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--stats", action="store_true", help="add size and run statistics")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="chordless", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("colour", parents=[common], help="optimal edge or total colouring")
    p.add_argument("--mode", choices=["edge", "total"], default="edge")
    sub.add_parser("recognise", parents=[common], help="chordless / 2-sparse recognition")
    sub.add_parser("decompose", parents=[common], help="print the extremal split tree")
    sub.add_parser("oracle", parents=[common], help="brute-force chromatic index and total chromatic number")
    p = sub.add_parser("verify", parents=[common], help="re-check a result document")
    p.add_argument("--result", required=True, help="result document path")
    p = sub.add_parser("generate", parents=[common], help="emit a random chordless graph document")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--profile", choices=["sparse", "composed"], default="sparse")
    return parser


COMMANDS = {
    "colour": _cmd_colour,
    "recognise": _cmd_recognise,
    "decompose": _cmd_decompose,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    mode = getattr(args, "mode", None) or args.command

    if args.command == "generate":
        try:
            stdout.write(_cmd_generate(args))
        except OracleError as exc:
            log.error("%s", exc)
            return 2
        return 0

    out = ResultDocument(mode=mode, status="ok")
    try:
        with _timed(out, "parse"):
            doc = parse_graph(_read(args.input), args.format)
        COMMANDS[args.command](args, doc, out)
    except (DocumentError, OracleError, OSError) as exc:
        log.error("%s", exc)
        out.status = "invalid-input"
        out.extra["error"] = str(exc)
    except (NotChordlessError, DeltaTooSmallError) as exc:
        log.error("%s", exc)
        out.status = "not-chordless" if isinstance(exc, NotChordlessError) else "delta-too-small"
    stdout.write(out.to_json() + "\n")
    return EXIT[out.status]


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
