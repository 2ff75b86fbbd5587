"""Immutable simple undirected graphs with integer vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (low, high) key of the undirected edge uv."""
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    """Raised for malformed graphs or queries on unknown vertices."""


class Graph:
    """A simple undirected graph.

    Vertex ids are arbitrary non-negative integers and survive subgraph
    extraction, so a colouring computed on a piece maps back to the parent
    by plain id lookup. Instances are never mutated after construction.
    """

    __slots__ = ("_adj", "_edges")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")
            adj.setdefault(v, set())
        keys: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) uses an unknown vertex")
            k = edge_key(u, v)
            if k in keys:
                raise GraphError(f"parallel edge {k}")
            keys.add(k)
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._edges = frozenset(keys)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        """Build a graph from an edge list; vertices 0..n-1 when n is given."""
        edges = list(edges)
        vs: set[int] = set(range(n)) if n is not None else set()
        for u, v in edges:
            vs.add(u)
            vs.add(v)
        return cls(vs, edges)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((frozenset(self._adj), self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={len(self._adj)}, m={len(self._edges)})"

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbours(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self._edges)

    def incident_edges(self, v: int) -> list[Edge]:
        return [edge_key(v, w) for w in sorted(self.neighbours(v))]

    def max_id(self) -> int:
        """Largest vertex id, or -1 for the empty graph."""
        return max(self._adj, default=-1)

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbours(v))


def max_degree(g: Graph) -> int:
    if len(g) == 0:
        raise GraphError("maximum degree of the empty graph is undefined")
    return max(len(ns) for ns in g.adjacency().values())


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """The subgraph of g on s, keeping every edge of g with both ends in s."""
    s = set(s)
    unknown = s - g.vertices
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    return Graph(s, [(u, v) for (u, v) in g.edges if u in s and v in s])


def connected_components(g: Graph) -> list[set[int]]:
    """Vertex sets of the connected components, ordered by smallest id."""
    seen: set[int] = set()
    comps = []
    for root in g:
        if root in seen:
            continue
        comp = {root}
        seen.add(root)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def biconnected_components(g: Graph) -> tuple[list[set[Edge]], set[int]]:
    """Blocks (as edge sets) and cut vertices, by Hopcroft-Tarjan.

    Iterative DFS with an edge stack; linear in n + m. Isolated vertices
    belong to no block.
    """
    adj = g.adjacency()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[set[Edge]] = []
    cuts: set[int] = set()
    t = 0
    for root in g:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    edge_stack.append(edge_key(v, w))
                    stack.append((w, v, iter(sorted(adj[w]))))
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(edge_key(v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent < 0:
                    continue
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    if parent == root:
                        root_children += 1
                    else:
                        cuts.add(parent)
                    top = edge_key(parent, v)
                    block = set()
                    while True:
                        e = edge_stack.pop()
                        block.add(e)
                        if e == top:
                            break
                    blocks.append(block)
        if root_children > 1:
            cuts.add(root)
    return blocks, cuts


def block_vertices(block: Iterable[Edge]) -> set[int]:
    return {x for e in block for x in e}


def is_biconnected(g: Graph) -> bool:
    """True for connected graphs on at least 3 vertices without cut vertices."""
    if len(g) < 3:
        return False
    blocks, _ = biconnected_components(g)
    return len(blocks) == 1 and len(block_vertices(blocks[0])) == len(g)


def is_bipartite(g: Graph) -> tuple[set[int], set[int]] | None:
    """A bipartition (X, Y), or None when g has an odd cycle.

    The smallest id of every component goes to X.
    """
    side: dict[int, int] = {}
    for root in g:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if w not in side:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return ({v for v, s in side.items() if s == 0}, {v for v, s in side.items() if s == 1})
