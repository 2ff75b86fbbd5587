"""Recognition of chordless and 2-sparse graphs, and 2-cutset decomposition."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from .graph import (
    Edge,
    Graph,
    GraphError,
    biconnected_components,
    block_vertices,
    connected_components,
    degree,
    edge_key,
    induced_subgraph,
    is_biconnected,
)


class DecompositionError(ValueError):
    """Input violates the hypotheses of a decomposition routine."""


@dataclass(frozen=True)
class ChordWitness:
    """A cycle of the graph together with one of its chords."""

    cycle: tuple[int, ...]
    chord: Edge

    def check(self, g: Graph) -> bool:
        """Independent validity check of the witness against g."""
        c = self.cycle
        if len(c) < 4 or len(set(c)) != len(c):
            return False
        if any(not g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
            return False
        x, y = self.chord
        if x not in c or y not in c or not g.has_edge(x, y):
            return False
        i, j = c.index(x), c.index(y)
        return (i - j) % len(c) not in (1, len(c) - 1)


@dataclass(frozen=True)
class Split:
    """Witness (X, Y, a, b) of a proper 2-cutset {a, b}."""

    x: frozenset[int]
    y: frozenset[int]
    a: int
    b: int

    def side(self, which: Literal["X", "Y"]) -> frozenset[int]:
        return self.x if which == "X" else self.y


@dataclass(frozen=True)
class Block:
    graph: Graph
    marker: int
    side: Literal["X", "Y"]
    cut_pair: tuple[int, int]


# --- recognition -----------------------------------------------------------


def find_dense_edge(g: Graph) -> Edge | None:
    """First edge (in id order) whose ends both have degree at least 3."""
    for u, v in g.sorted_edges():
        if degree(g, u) >= 3 and degree(g, v) >= 3:
            return (u, v)
    return None


def is_2sparse(g: Graph) -> bool:
    return find_dense_edge(g) is None


def stable_high_degree_set(g: Graph) -> set[int]:
    """Vertices of degree at least 3 (a stable set whenever g is 2-sparse)."""
    return {v for v in g if degree(g, v) >= 3}


def one_end_bipartite(g: Graph, s: set[int]) -> Graph:
    """The bipartite graph on s and its neighbours with the edges meeting s."""
    s = set(s)
    for u, v in g.edges:
        if u in s and v in s:
            raise DecompositionError(f"{sorted(s)} is not stable: edge ({u}, {v})")
    edges = [e for e in g.edges if e[0] in s or e[1] in s]
    verts = set(s)
    for e in edges:
        verts.update(e)
    return Graph(verts, edges)


def _disjoint_paths(g: Graph, x: int, y: int, banned: Edge) -> tuple[list[int], list[int]] | None:
    """Two internally vertex-disjoint x-y paths avoiding edge ``banned``.

    Unit-capacity max flow on the split-vertex network, two augmentations.
    """
    # node (v, 0) is v_in, (v, 1) is v_out; x and y are not split
    def out_node(v):
        return (v, 1) if v not in (x, y) else (v, 2)

    def in_node(v):
        return (v, 0) if v not in (x, y) else (v, 2)

    cap: dict[tuple, dict[tuple, int]] = {}

    def add(a, b, c):
        cap.setdefault(a, {}).setdefault(b, 0)
        cap[a][b] += c
        cap.setdefault(b, {}).setdefault(a, 0)

    for v in g:
        if v not in (x, y):
            add((v, 0), (v, 1), 1)
    for u, v in g.edges:
        if (u, v) == banned:
            continue
        add(out_node(u), in_node(v), 1)
        add(out_node(v), in_node(u), 1)
    src, dst = (x, 2), (y, 2)
    for _ in range(2):
        prev = {src: None}
        queue = deque([src])
        while queue and dst not in prev:
            a = queue.popleft()
            for b in sorted(cap.get(a, {})):
                if cap[a][b] > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if dst not in prev:
            return None
        b = dst
        while prev[b] is not None:
            a = prev[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
    # decompose the flow into two vertex paths
    flow_next: dict[int, list[int]] = {}
    for u, v in g.edges:
        if (u, v) == banned:
            continue
        for p, q in ((u, v), (v, u)):
            # flow on p_out -> q_in is 1 - residual capacity
            if cap[out_node(p)][in_node(q)] == 0 and cap[in_node(q)][out_node(p)] == 1:
                flow_next.setdefault(p, []).append(q)
    # cancel opposite flows
    for p in list(flow_next):
        for q in list(flow_next[p]):
            if p in flow_next.get(q, []):
                flow_next[p].remove(q)
                flow_next[q].remove(p)
    paths = []
    for first in list(flow_next.get(x, [])):
        path = [x, first]
        while path[-1] != y:
            path.append(flow_next[path[-1]][0])
        paths.append(path)
    return paths[0], paths[1]


def find_chord(g: Graph) -> ChordWitness | None:
    """A chorded cycle of g, or None when g is chordless.

    An edge xy is a chord of some cycle exactly when x and y still lie in a
    common biconnected component of g - xy. Only edges whose ends both have
    degree at least 3 can qualify.
    """
    for x, y in g.sorted_edges():
        if degree(g, x) < 3 or degree(g, y) < 3:
            continue
        h = Graph(g.vertices, [e for e in g.edges if e != (x, y)])
        blocks, _ = biconnected_components(h)
        if not any(x in vs and y in vs for vs in map(block_vertices, blocks)):
            continue
        p1, p2 = _disjoint_paths(g, x, y, (x, y))
        cycle = tuple(p1) + tuple(reversed(p2[1:-1]))
        return ChordWitness(cycle, (x, y))
    return None


def is_chordless(g: Graph) -> bool:
    return find_chord(g) is None


# --- proper 2-cutsets ------------------------------------------------------


def _is_path_graph(h: Graph) -> bool:
    if len(h) == 0:
        return False
    if any(degree(h, v) > 2 for v in h):
        return False
    return h.m == len(h) - 1 and len(connected_components(h)) == 1


def is_valid_split(g: Graph, s: Split) -> bool:
    """Direct check of the definition of a split of a proper 2-cutset."""
    a, b = s.a, s.b
    if not s.x or not s.y or s.x & s.y or a == b or a in s.x | s.y or b in s.x | s.y:
        return False
    if s.x | s.y | {a, b} != g.vertices or g.has_edge(a, b):
        return False
    if any((u in s.x and v in s.y) or (u in s.y and v in s.x) for u, v in g.edges):
        return False
    for side in (s.x, s.y):
        h = induced_subgraph(g, side | {a, b})
        comp = next(c for c in connected_components(h) if a in c)
        if b not in comp or _is_path_graph(h):
            return False
    return True


def _require_biconnected(g: Graph) -> None:
    if not is_biconnected(g):
        raise DecompositionError("graph is not 2-connected")


def _cut_pairs(g: Graph, eligible: set[int]) -> Iterator[tuple[int, int, list[tuple[int, int]]]]:
    """All 2-cuts {a, b} of a 2-connected g with a, b in ``eligible``.

    Yields (a, b, comps) with a < b, non-adjacent, and comps listing
    (size, number of vertices of degree other than 2) for each component of
    g - {a, b}. One DFS of g - a finds every b at once: b separates g - a
    exactly when it is a cut vertex there, and the pieces are DFS subtrees.
    """
    adj = {v: sorted(ns) for v, ns in g.adjacency().items()}
    odd = {v: int(len(ns) != 2) for v, ns in adj.items()}
    n = len(adj)
    total_odd = sum(odd.values())
    for a in sorted(eligible):
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        size: dict[int, int] = {}
        bad: dict[int, int] = {}
        sep: dict[int, list[int]] = {}
        root = min(v for v in adj if v != a)
        disc[root] = low[root] = 0
        size[root], bad[root] = 1, odd[root]
        t = 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == a or w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    size[w], bad[w] = 1, odd[w]
                    stack.append((w, v, iter(adj[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    size[parent] += size[v]
                    bad[parent] += bad[v]
                    if low[v] >= disc[parent]:
                        sep.setdefault(parent, []).append(v)
        rest_n = n - 1
        rest_odd = total_odd - odd[a]
        for b in sorted(sep):
            if b <= a or b not in eligible or b in adj[a]:
                continue
            comps = [(size[c], bad[c]) for c in sep[b]]
            if b != root:
                used = sum(s for s, _ in comps)
                used_bad = sum(x for _, x in comps)
                comps.append((rest_n - 1 - used, rest_odd - odd[b] - used_bad))
            if len(comps) >= 2:
                yield a, b, comps


def _min_x_size(comps: list[tuple[int, int]]) -> int | None:
    """Smallest |X| of a split for one 2-cut, from its component summary.

    In a 2-connected graph every component meets both cut vertices, so a side
    made of one component is a path exactly when all its vertices have degree
    2; a side made of two or more components always contains a cycle. A
    minimum X therefore consists of one or two components.
    """
    k = len(comps)
    best = None
    for i, (s, b) in enumerate(comps):
        if b == 0:
            continue
        if k == 2 and comps[1 - i][1] == 0:
            continue
        if best is None or s < best:
            best = s
    if k >= 3:
        for i, j in combinations(range(k), 2):
            if k == 3 and comps[3 - i - j][1] == 0:
                continue
            s = comps[i][0] + comps[j][0]
            if best is None or s < best:
                best = s
    return best


def _component_sets(g: Graph, a: int, b: int) -> list[frozenset[int]]:
    rest = induced_subgraph(g, g.vertices - {a, b})
    return [frozenset(c) for c in connected_components(rest)]


def _candidate_splits(g: Graph, a: int, b: int) -> list[Split]:
    comps = _component_sets(g, a, b)
    if len(comps) < 2:
        return []
    out = []
    everything = frozenset(g.vertices - {a, b})
    for r in (1, 2):
        for group in combinations(comps, r):
            x = frozenset().union(*group)
            s = Split(x, everything - x, a, b)
            if is_valid_split(g, s):
                out.append(s)
    return out


def _x_order(s: Split) -> tuple[int, tuple[int, ...]]:
    return (len(s.x), tuple(sorted(s.x)))


def find_proper_2cutset(g: Graph) -> Split | None:
    """Some split of a proper 2-cutset of the 2-connected graph g, or None.

    The pair with the lowest ids wins, then the smallest X.
    """
    _require_biconnected(g)
    for a, b, comps in _cut_pairs(g, set(g.vertices)):
        if _min_x_size(comps) is not None:
            return min(_candidate_splits(g, a, b), key=_x_order)
    return None


def find_extremal_split(g: Graph) -> Split | None:
    """A split minimising |X| over all proper 2-cutsets of g.

    For a 2-connected chordless graph that is not 2-sparse the block on the
    X side is then 2-sparse and both cut vertices have two or more neighbours
    in X. Those cut vertices have degree at least 3, which restricts the
    search to such pairs. Ties go to the lowest (a, b), then the
    lexicographically smallest X.
    """
    _require_biconnected(g)
    if is_2sparse(g):
        raise DecompositionError("graph is 2-sparse")
    high = {v for v in g if degree(g, v) >= 3}
    best: tuple[int, int, int] | None = None
    for a, b, comps in _cut_pairs(g, high):
        size = _min_x_size(comps)
        if size is not None and (best is None or size < best[0]):
            best = (size, a, b)
    if best is None:
        return None
    size, a, b = best
    return min((s for s in _candidate_splits(g, a, b) if len(s.x) == size), key=_x_order)


def build_blocks(g: Graph, s: Split, markers: tuple[int, int] | None = None) -> tuple[Block, Block]:
    """Blocks G_X and G_Y: each side plus a fresh marker adjacent to a and b."""
    if not is_valid_split(g, s):
        raise DecompositionError(f"invalid split {s}")
    if markers is None:
        top = g.max_id()
        markers = (top + 1, top + 2)
    out = []
    for side, marker in zip(("X", "Y"), markers):
        if marker in g:
            raise GraphError(f"marker id {marker} already in use")
        h = induced_subgraph(g, s.side(side) | {s.a, s.b})
        h = Graph(h.vertices | {marker}, list(h.edges) + [(marker, s.a), (marker, s.b)])
        out.append(Block(h, marker, side, (s.a, s.b)))
    return out[0], out[1]


def decomposition_tree(g: Graph) -> dict:
    """Nested record of the extremal decomposition of a chordless graph.

    Each biconnected component is a node; a 2-sparse one is a leaf, any other
    is split extremally and its Y block (with marker) decomposed further.
    """
    counter = [g.max_id() + 1]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def node(h: Graph) -> dict:
        rec = {"vertices": sorted(h), "n": len(h), "m": h.m, "two_sparse": is_2sparse(h)}
        if rec["two_sparse"]:
            return rec
        s = find_extremal_split(h)
        if s is None:
            rec["split"] = None
            return rec
        bx, by = build_blocks(h, s, (fresh(), fresh()))
        rec["split"] = {
            "a": s.a,
            "b": s.b,
            "X": sorted(s.x),
            "Y": sorted(s.y),
            "size_X": len(s.x),
            "size_Y": len(s.y),
            "x_block_two_sparse": is_2sparse(bx.graph),
            "x_marker": bx.marker,
            "y_marker": by.marker,
        }
        rec["x_block"] = {"vertices": sorted(bx.graph), "two_sparse": is_2sparse(bx.graph)}
        rec["y_block"] = node(by.graph)
        return rec

    blocks, cuts = biconnected_components(g)
    out = []
    for b in blocks:
        h = induced_subgraph(g, block_vertices(b))
        if h.m != len(b):
            h = Graph(block_vertices(b), b)
        out.append(node(h))
    return {"cut_vertices": sorted(cuts), "blocks": out}
