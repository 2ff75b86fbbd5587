"""Optimal edge- and total-colouring of chordless graphs with Δ >= 3.

The recursion follows the extremal 2-cutset decomposition: biconnected
components are coloured separately and glued; a 2-sparse component is
coloured directly; any other component is split at a proper 2-cutset with
minimum X, the Y side is coloured recursively and the 2-sparse X side is
completed around it by the list-colouring routines.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal

from .colouring import Colouring, PreconditionError, complete_permutation, merge_block_colourings
from .graph import Edge, Graph, biconnected_components, block_vertices, degree, edge_key, induced_subgraph, max_degree
from .recognition import (
    ChordWitness,
    Split,
    build_blocks,
    find_chord,
    find_extremal_split,
    is_2sparse,
    stable_high_degree_set,
)
from .sparse import (
    edge_colour_2sparse,
    list_edge_colour_2sparse,
    total_colour_2sparse,
    total_colour_2sparse_cubic,
    total_colour_2sparse_delta4,
)

Mode = Literal["edge", "total"]


class NotChordlessError(ValueError):
    def __init__(self, witness: ChordWitness):
        super().__init__(f"graph has a chorded cycle {witness.cycle} with chord {witness.chord}")
        self.witness = witness


class DeltaTooSmallError(ValueError):
    """Maximum degree below 3: outside the range of the optimal colouring."""


@dataclass
class Step:
    """One decomposition step taken by the recursion."""

    graph: Graph
    split: Split
    kind: str


@dataclass
class Trace:
    """Bookkeeping shared by one colouring run."""

    next_id: int = 0
    steps: list[Step] = field(default_factory=list)
    split_seconds: float = 0.0

    def fresh(self) -> int:
        self.next_id += 1
        return self.next_id - 1


def _checked(g: Graph, trace: Trace | None) -> Trace:
    w = find_chord(g)
    if w is not None:
        raise NotChordlessError(w)
    if len(g) == 0 or max_degree(g) < 3:
        raise DeltaTooSmallError(f"maximum degree {max_degree(g) if len(g) else 0} < 3")
    if trace is None:
        trace = Trace()
    trace.next_id = max(trace.next_id, g.max_id() + 1)
    return trace


def edge_colour_chordless(g: Graph, trace: Trace | None = None) -> Colouring:
    """Δ-edge-colouring of a chordless graph with Δ >= 3."""
    trace = _checked(g, trace)
    return _colour(g, "edge", max_degree(g), trace)


def total_colour_chordless(g: Graph, trace: Trace | None = None) -> Colouring:
    """(Δ+1)-total-colouring of a chordless graph with Δ >= 3."""
    trace = _checked(g, trace)
    return _colour(g, "total", max_degree(g) + 1, trace)


def merge_articulation_blocks(g: Graph, mode: Mode, palette: int | None = None, trace: Trace | None = None) -> Colouring:
    """Colour every biconnected component of a chordless g and glue them.

    The palette defaults to Δ (edge) or Δ+1 (total) of g, at least 3 and 4.
    """
    if palette is None:
        delta = max_degree(g) if len(g) else 0
        palette = max(delta, 3) if mode == "edge" else max(delta + 1, 4)
    if trace is None:
        trace = Trace()
    trace.next_id = max(trace.next_id, g.max_id() + 1)
    return _colour(g, mode, palette, trace)


def _colour(g: Graph, mode: Mode, k: int, trace: Trace) -> Colouring:
    blocks, _ = biconnected_components(g)
    cols = [_colour_block(Graph(block_vertices(b), b), mode, k, trace) for b in blocks]
    return merge_block_colourings(g, blocks, cols, k, total=mode == "total")


def _colour_block(h: Graph, mode: Mode, k: int, trace: Trace) -> Colouring:
    if is_2sparse(h):
        if mode == "edge":
            return edge_colour_2sparse(h, palette=k)
        return total_colour_2sparse(h, palette=k)
    if mode == "edge":
        return colour_recursive_edge(h, k, trace)
    if k >= 5:
        return colour_recursive_total_delta4(h, k, trace)
    return colour_recursive_total_delta3(h, trace)


def _split(h: Graph, trace: Trace, kind: str) -> Split:
    start = time.perf_counter()
    s = find_extremal_split(h)
    trace.split_seconds += time.perf_counter() - start
    if s is None:
        raise PreconditionError("no proper 2-cutset in a block that is not 2-sparse")
    trace.steps.append(Step(h, s, kind))
    return s


def _x_side_high(h: Graph, s: Split) -> set[int]:
    """Vertices of degree >= 3 in the block G_X (marker counted for a and b)."""
    hx = induced_subgraph(h, s.x | {s.a, s.b})
    high = stable_high_degree_set(hx)
    high.update(v for v in (s.a, s.b) if degree(hx, v) + 1 >= 3)
    return high


def colour_recursive_edge(h: Graph, k: int, trace: Trace | None = None) -> Colouring:
    """Edge step: colour G[Y ∪ {a, b}] recursively, then list-colour the X side."""
    trace = trace or Trace(next_id=h.max_id() + 1)
    s = _split(h, trace, "edge")
    hy = induced_subgraph(h, s.y | {s.a, s.b})
    hx = induced_subgraph(h, s.x | {s.a, s.b})
    ycol = _colour(hy, "edge", k, trace)
    full = frozenset(range(1, k + 1))
    lists: dict[Edge, frozenset[int]] = {}
    for e in hx.edges:
        lists[e] = full
    for end in (s.a, s.b):
        boundary = {c for e, c in ycol.edge_colours.items() if end in e}
        for e in hx.incident_edges(end):
            lists[e] = full - boundary
    xcol = list_edge_colour_2sparse(hx, _x_side_high(h, s), lists)
    edges = dict(ycol.edge_colours)
    edges.update(xcol.edge_colours)
    return Colouring(edges, None, k)


def colour_recursive_total_delta4(h: Graph, k: int, trace: Trace | None = None) -> Colouring:
    """Total step with at least 5 colours.

    a and b keep their colours from the Y side, edges at them avoid the
    colours already seen there, other high-degree X vertices take colour 1
    with lists {2..k}.
    """
    trace = trace or Trace(next_id=h.max_id() + 1)
    if k < 5:
        raise PreconditionError("needs at least 5 colours")
    s = _split(h, trace, "total>=4")
    hy = induced_subgraph(h, s.y | {s.a, s.b})
    hx = induced_subgraph(h, s.x | {s.a, s.b})
    ycol = _colour(hy, "total", k, trace)
    high = _x_side_high(h, s)
    pre = {v: 1 for v in high}
    lists: dict[Edge, frozenset[int]] = {}
    others = frozenset(range(2, k + 1))
    for v in high:
        for e in hx.incident_edges(v):
            lists[e] = others
    for end in (s.a, s.b):
        pre[end] = ycol.vertex_colours[end]
        seen = {pre[end]} | {c for e, c in ycol.edge_colours.items() if end in e}
        for e in hx.incident_edges(end):
            lists[e] = frozenset(range(1, k + 1)) - seen
    xcol = total_colour_2sparse_delta4(hx, high, pre, lists, k)
    edges = dict(ycol.edge_colours)
    edges.update(xcol.edge_colours)
    verts = dict(ycol.vertex_colours)
    verts.update(xcol.vertex_colours)
    return Colouring(edges, verts, k)


def colour_recursive_total_delta3(h: Graph, trace: Trace | None = None) -> Colouring:
    """Total step with 4 colours (Δ = 3).

    a and b each have one neighbour a', b' in Y. The Y side with a and b
    contracted into one degree-2 vertex w_ab is coloured recursively and
    renamed so w_ab, w_ab a', w_ab b' read 1, 2, 3; G_X is then coloured by
    total_colour_2sparse_cubic anchored at its marker with a, b, wa, wb = 1, 1, 2, 3,
    and aa', bb' inherit 2 and 3.
    """
    trace = trace or Trace(next_id=h.max_id() + 1)
    if max_degree(h) != 3:
        raise PreconditionError("maximum degree must be 3")
    s = _split(h, trace, "total=3")
    a, b = s.a, s.b
    (a1,) = [v for v in h.neighbours(a) if v in s.y]
    (b1,) = [v for v in h.neighbours(b) if v in s.y]
    if a1 == b1:
        raise AssertionError("a' and b' coincide")
    w_ab = trace.fresh()
    gy = induced_subgraph(h, s.y)
    gy = Graph(gy.vertices | {w_ab}, list(gy.edges) + [(w_ab, a1), (w_ab, b1)])
    ycol = _colour(gy, "total", 4, trace)
    sigma = complete_permutation(
        {ycol.vertex_colours[w_ab]: 1, ycol.edge(w_ab, a1): 2, ycol.edge(w_ab, b1): 3}, 4
    )
    ycol = ycol.permuted(sigma)

    bx, _ = build_blocks(h, s, (trace.fresh(), trace.fresh()))
    w = bx.marker
    xcol = total_colour_2sparse_cubic(bx.graph, anchor=(w, a, b))

    edges = {e: c for e, c in ycol.edge_colours.items() if w_ab not in e}
    edges.update({e: c for e, c in xcol.edge_colours.items() if w not in e})
    edges[edge_key(a, a1)] = 2
    edges[edge_key(b, b1)] = 3
    verts = {v: c for v, c in ycol.vertex_colours.items() if v != w_ab}
    verts.update({v: c for v, c in xcol.vertex_colours.items() if v != w})
    return Colouring(edges, verts, 4)


def colour_small_degree(g: Graph, mode: Mode) -> Colouring:
    """Colour a graph of maximum degree <= 2 (disjoint paths and cycles).

    Edge mode uses 2 colours unless an odd cycle forces 3; total mode
    always works with the palette 1..4.
    """
    if len(g) and max_degree(g) > 2:
        raise PreconditionError("maximum degree exceeds 2")
    if mode == "edge":
        colours: dict[Edge, int] = {}
        for comp in _walks(g):
            walk, closed = comp
            n_edges = len(walk) - 1
            for i in range(n_edges):
                c = 1 + i % 2
                if closed and n_edges % 2 == 1 and i == n_edges - 1:
                    c = 3
                colours[edge_key(walk[i], walk[i + 1])] = c
        return Colouring(colours, None, max(colours.values(), default=0))
    return total_colour_2sparse(g, palette=4)


def _walks(g: Graph):
    seen: set[int] = set()
    ends = sorted(v for v in g if degree(g, v) <= 1)
    for start in ends + sorted(g):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        closed = False
        while True:
            nxt = [w for w in sorted(g.neighbours(walk[-1])) if w not in seen]
            if not nxt:
                closed = len(walk) > 2 and g.has_edge(walk[-1], start)
                break
            walk.append(nxt[0])
            seen.add(nxt[0])
        if closed:
            walk.append(start)
        yield walk, closed
