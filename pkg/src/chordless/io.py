"""Graph and result documents: the edge-list and JSON formats used by the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Literal

from .colouring import Colouring
from .graph import Graph, edge_key

Format = Literal["edgelist", "structured"]


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]
    name: str | None = None

    def graph(self) -> Graph:
        return Graph.from_edges(self.edges, self.n)

    @classmethod
    def from_graph(cls, g: Graph, name: str | None = None) -> GraphDocument:
        if sorted(g) != list(range(len(g))):
            raise DocumentError("graph ids must be 0..n-1 to serialise")
        return cls(len(g), g.sorted_edges(), name)


def _check_edge(n: int, u: int, v: int, seen: set, line: int | None) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise DocumentError(f"vertex id out of range in edge ({u}, {v}) for n = {n}", line)
    if u == v:
        raise DocumentError(f"self-loop at vertex {u}", line)
    k = edge_key(u, v)
    if k in seen:
        raise DocumentError(f"duplicate edge ({u}, {v})", line)
    seen.add(k)


def _parse_edgelist(text: str) -> GraphDocument:
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    rows = [(i, parts) for i, parts in rows if parts and not parts[0].startswith("#")]
    if not rows:
        raise DocumentError("empty document", 1)
    line, head = rows[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise DocumentError("header must be 'n m'", line) from None
    if n < 0 or m < 0:
        raise DocumentError("negative counts in header", line)
    body = rows[1:]
    if len(body) != m:
        raise DocumentError(f"header announces {m} edges, found {len(body)}", body[-1][0] if body else line)
    seen: set = set()
    edges = []
    for line, parts in body:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise DocumentError("edge lines must be 'u v'", line) from None
        _check_edge(n, u, v, seen, line)
        edges.append((u, v))
    return GraphDocument(n, edges)


def _parse_structured(text: str) -> GraphDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise DocumentError("structured document needs fields 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError("'n' must be a non-negative integer")
    seen: set = set()
    edges = []
    for i, pair in enumerate(obj["edges"]):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise DocumentError(f"edge #{i} must be a pair of integers")
        _check_edge(n, pair[0], pair[1], seen, None)
        edges.append((pair[0], pair[1]))
    name = obj.get("name")
    return GraphDocument(n, edges, name if isinstance(name, str) else None)


def parse_graph(text: str, fmt: Format | None = None) -> GraphDocument:
    """Parse a graph document; the format is sniffed when not given."""
    if fmt is None:
        fmt = "structured" if text.lstrip().startswith("{") else "edgelist"
    if fmt == "structured":
        return _parse_structured(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise DocumentError(f"unknown format {fmt!r}")


def serialise_graph(doc: GraphDocument, fmt: Format = "edgelist") -> str:
    if fmt == "edgelist":
        lines = [f"{doc.n} {len(doc.edges)}"] + [f"{u} {v}" for u, v in doc.edges]
        return "\n".join(lines) + "\n"
    obj: dict[str, Any] = {"n": doc.n, "edges": [list(e) for e in doc.edges]}
    if doc.name is not None:
        obj = {"name": doc.name, **obj}
    return json.dumps(obj) + "\n"


@dataclass
class ResultDocument:
    mode: str
    status: str
    palette: int | None = None
    edge_colours: list[list[int]] | None = None
    vertex_colours: list[int] | None = None
    witness: dict | None = None
    timing_ms: dict[str, float] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)

    def set_colouring(self, c: Colouring, n: int) -> None:
        self.palette = c.palette
        self.edge_colours = [[u, v, col] for (u, v), col in sorted(c.edge_colours.items())]
        if c.vertex_colours is not None:
            self.vertex_colours = [c.vertex_colours[v] for v in range(n)]

    def colouring(self) -> Colouring:
        edges = {edge_key(u, v): c for u, v, c in self.edge_colours or []}
        verts = None
        if self.vertex_colours is not None:
            verts = dict(enumerate(self.vertex_colours))
        return Colouring(edges, verts, self.palette or 0)

    def to_json(self) -> str:
        obj: dict[str, Any] = {"mode": self.mode, "status": self.status}
        if self.palette is not None:
            obj["palette"] = self.palette
        if self.edge_colours is not None:
            obj["colours"] = {"edges": self.edge_colours, "vertices": self.vertex_colours}
        if self.witness is not None:
            obj["witness"] = self.witness
        obj.update(self.extra)
        obj["timing_ms"] = self.timing_ms
        return json.dumps(obj, indent=2)

    @classmethod
    def from_json(cls, text: str) -> ResultDocument:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        if not isinstance(obj, dict) or "mode" not in obj or "status" not in obj:
            raise DocumentError("result document needs 'mode' and 'status'")
        colours = obj.get("colours") or {}
        known = {"mode", "status", "palette", "colours", "witness", "timing_ms"}
        return cls(
            mode=obj["mode"],
            status=obj["status"],
            palette=obj.get("palette"),
            edge_colours=colours.get("edges"),
            vertex_colours=colours.get("vertices"),
            witness=obj.get("witness"),
            timing_ms=obj.get("timing_ms", {}),
            extra={k: v for k, v in obj.items() if k not in known},
        )
