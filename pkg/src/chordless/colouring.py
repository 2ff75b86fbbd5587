"""Colouring containers and the palette-permutation merge of blocks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Edge, Graph, block_vertices, edge_key


class PreconditionError(ValueError):
    """A colouring routine was called outside the hypotheses it relies on."""


@dataclass
class Colouring:
    """Edge colours and, for total colourings, vertex colours.

    Colours are integers in 1..palette. ``vertex_colours`` is None for a
    pure edge colouring.
    """

    edge_colours: dict[Edge, int] = field(default_factory=dict)
    vertex_colours: dict[int, int] | None = None
    palette: int = 0

    @property
    def is_total(self) -> bool:
        return self.vertex_colours is not None

    def colours_used(self) -> int:
        used = set(self.edge_colours.values())
        if self.vertex_colours is not None:
            used.update(self.vertex_colours.values())
        return len(used)

    def edge(self, u: int, v: int) -> int:
        return self.edge_colours[edge_key(u, v)]

    def restrict(self, g: Graph) -> Colouring:
        """The colouring limited to the elements of g."""
        edges = {e: c for e, c in self.edge_colours.items() if e in g.edges}
        verts = None
        if self.vertex_colours is not None:
            verts = {v: c for v, c in self.vertex_colours.items() if v in g}
        return Colouring(edges, verts, self.palette)

    def permuted(self, sigma: Mapping[int, int]) -> Colouring:
        edges = {e: sigma[c] for e, c in self.edge_colours.items()}
        verts = None
        if self.vertex_colours is not None:
            verts = {v: sigma[c] for v, c in self.vertex_colours.items()}
        return Colouring(edges, verts, self.palette)


def complete_permutation(partial: Mapping[int, int], k: int) -> dict[int, int]:
    """Extend an injective partial map on 1..k to a permutation of 1..k."""
    sigma = dict(partial)
    if len(set(sigma.values())) != len(sigma):
        raise ValueError(f"partial map {partial} is not injective")
    free_targets = [c for c in range(1, k + 1) if c not in set(sigma.values())]
    free_sources = [c for c in range(1, k + 1) if c not in sigma]
    sigma.update(zip(free_sources, free_targets))
    return sigma


def align_at_vertex(
    k: int,
    placed_edges: set[int],
    new_edges: Iterable[int],
    placed_vertex: int | None = None,
    new_vertex: int | None = None,
) -> dict[int, int]:
    """Permutation of 1..k that makes a new block agree with what is placed at v.

    The new block's colour at v (total case) is sent to the placed one, and
    its edge colours at v are sent away from every colour already present.
    """
    partial: dict[int, int] = {}
    taken = set(placed_edges)
    if new_vertex is not None:
        partial[new_vertex] = placed_vertex
        taken.add(placed_vertex)
    free = (c for c in range(1, k + 1) if c not in taken)
    for c in sorted(set(new_edges)):
        try:
            partial[c] = next(free)
        except StopIteration:
            raise PreconditionError("palette too small to merge blocks") from None
    return complete_permutation(partial, k)


def merge_block_colourings(
    g: Graph,
    blocks: list[set[Edge]],
    colourings: list[Colouring],
    palette: int,
    total: bool,
) -> Colouring:
    """Glue independently coloured blocks of g into one colouring.

    Blocks are attached in breadth-first order over the block-cut tree; each
    new block shares exactly one vertex with what is already placed and is
    recoloured by a permutation of the palette so the union stays proper.
    Vertices lying in no block get colour 1 in the total case.
    """
    by_vertex: dict[int, list[int]] = {}
    vsets = [block_vertices(b) for b in blocks]
    for i, vs in enumerate(vsets):
        for v in vs:
            by_vertex.setdefault(v, []).append(i)

    edges: dict[Edge, int] = {}
    verts: dict[int, int] = {}
    at: dict[int, set[int]] = {v: set() for v in g}

    def place(i: int, col: Colouring) -> None:
        for e in blocks[i]:
            c = col.edge_colours[e]
            edges[e] = c
            at[e[0]].add(c)
            at[e[1]].add(c)
        if total:
            for v in vsets[i]:
                verts.setdefault(v, col.vertex_colours[v])

    done = [False] * len(blocks)
    for start in range(len(blocks)):
        if done[start]:
            continue
        done[start] = True
        place(start, colourings[start])
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for v in sorted(vsets[i]):
                for j in by_vertex[v]:
                    if done[j]:
                        continue
                    col = colourings[j]
                    new_edges = {col.edge_colours[e] for e in blocks[j] if v in e}
                    if total:
                        sigma = align_at_vertex(palette, at[v], new_edges, verts[v], col.vertex_colours[v])
                    else:
                        sigma = align_at_vertex(palette, at[v], new_edges)
                    done[j] = True
                    place(j, col.permuted(sigma))
                    queue.append(j)
    if total:
        for v in g:
            verts.setdefault(v, 1)
    return Colouring(edges, verts if total else None, palette)
