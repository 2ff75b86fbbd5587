"""Edge- and total-colouring of bipartite and 2-sparse graphs.

These are the building blocks of the chordless colouring: a König
edge-colouring, list edge-colourings where lists only vary around
high-degree vertices, and total-colouring extensions of partial colourings.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .colouring import Colouring, PreconditionError, complete_permutation, merge_block_colourings
from .graph import (
    Edge,
    Graph,
    biconnected_components,
    block_vertices,
    connected_components,
    degree,
    edge_key,
    is_biconnected,
    is_bipartite,
    max_degree,
)
from .recognition import find_dense_edge, one_end_bipartite, stable_high_degree_set

ColourLists = Mapping[Edge, frozenset[int]]


def konig_edge_colour(g: Graph) -> Colouring:
    """Proper edge-colouring of a bipartite graph with Δ colours.

    Each edge uv takes a colour α missing at u; if α is present at v, the
    α/β alternating path from v (β missing at v) is swapped first. In a
    bipartite graph that path cannot end at u. O(nm).
    """
    if is_bipartite(g) is None:
        raise PreconditionError("graph is not bipartite")
    k = max(max_degree(g), 1) if len(g) else 1
    at: dict[int, dict[int, int]] = {v: {} for v in g}
    for u, v in g.sorted_edges():
        alpha = next(c for c in range(1, k + 1) if c not in at[u])
        if alpha in at[v]:
            beta = next(c for c in range(1, k + 1) if c not in at[v])
            path = []
            x, c = v, alpha
            while c in at[x]:
                y = at[x][c]
                path.append((x, y, c))
                x, c = y, (beta if c == alpha else alpha)
            for x, y, c in path:
                del at[x][c]
                del at[y][c]
            for x, y, c in path:
                d = beta if c == alpha else alpha
                at[x][d] = y
                at[y][d] = x
        at[u][alpha] = v
        at[v][alpha] = u
    colours = {}
    for v, row in at.items():
        for c, w in row.items():
            colours[edge_key(v, w)] = c
    return Colouring(colours, None, max((c for c in colours.values()), default=0))


def _check_lists(g: Graph, lists: ColourLists, edges) -> None:
    for e in edges:
        if e not in lists:
            raise PreconditionError(f"edge {e} has no colour list")
        need = max(degree(g, e[0]), degree(g, e[1]))
        if len(lists[e]) < need:
            raise PreconditionError(f"list of edge {e} has {len(lists[e])} colours, needs {need}")


def _check_uniform(g: Graph, lists: ColourLists, s) -> None:
    for u in s:
        seen = {lists[e] for e in g.incident_edges(u)}
        if len(seen) > 1:
            raise PreconditionError(f"edges at {u} carry different lists")


def list_edge_colour_bipartite(g: Graph, bipartition: tuple[set[int], set[int]], lists: ColourLists) -> Colouring:
    """List edge-colouring of a bipartite graph whose high-degree side has uniform lists.

    Requires every vertex of degree at least 3 to lie in X, all edges at an
    X vertex to share one list, and |L_uv| >= max(deg u, deg v).

    While two edges xy, x'y with different lists meet at some y, colour a
    maximal path of degree-2 vertices starting y, x: the first edge gets the
    smallest colour of L_xy missing from L_x'y, later ones the smallest list
    colour differing from the previous edge. The path is deleted and its last
    colour removed from the lists at its far end. Components whose lists
    have become identical are finished by König.
    """
    xs, ys = set(bipartition[0]), set(bipartition[1])
    if xs & ys or xs | ys != set(g.vertices):
        raise PreconditionError("bipartition does not partition the vertices")
    for u, v in g.edges:
        if (u in xs) == (v in xs):
            raise PreconditionError(f"edge ({u}, {v}) lies inside one side")
    high = stable_high_degree_set(g)
    if not high <= xs:
        raise PreconditionError(f"vertices {sorted(high - xs)} of degree >= 3 are not in X")
    _check_lists(g, lists, g.edges)
    _check_uniform(g, lists, xs)

    adj = {v: set(ns) for v, ns in g.adjacency().items()}
    lst = {e: frozenset(lists[e]) for e in g.edges}
    colour: dict[Edge, int] = {}

    def differing_pair():
        for y in sorted(ys):
            if len(adj[y]) == 2:
                x1, x2 = sorted(adj[y])
                if lst[edge_key(x1, y)] != lst[edge_key(x2, y)]:
                    return y, x1, x2
        return None

    while (found := differing_pair()) is not None:
        y, x, x2 = found
        first, other = lst[edge_key(x, y)], lst[edge_key(x2, y)]
        if not first - other:
            x, x2 = x2, x
            first, other = other, first
        c = min(first - other)
        path = [edge_key(y, x)]
        colour[path[0]] = c
        prev_colour, prev, cur = c, y, x
        visited = {y}
        while len(adj[cur]) == 2 and cur not in visited:
            visited.add(cur)
            nxt = next(w for w in adj[cur] if w != prev)
            e = edge_key(cur, nxt)
            avail = lst[e] - {prev_colour}
            if nxt == y:
                avail -= {c}
            if not avail:
                raise PreconditionError(f"no colour left for edge {e}")
            prev_colour = min(avail)
            colour[e] = prev_colour
            path.append(e)
            prev, cur = cur, nxt
        end_degree = len(adj[cur])
        for u, v in path:
            adj[u].discard(v)
            adj[v].discard(u)
        if end_degree >= 3:
            for w in adj[cur]:
                e = edge_key(cur, w)
                lst[e] = lst[e] - {prev_colour}

    rest = Graph(g.vertices, [(u, v) for u in adj for v in adj[u] if u < v])
    for comp in connected_components(rest):
        sub_edges = [e for e in rest.edges if e[0] in comp]
        if not sub_edges:
            continue
        common = {lst[e] for e in sub_edges}
        if len(common) != 1:
            raise AssertionError("lists still differ inside a component")
        palette = sorted(common.pop())
        sub = Graph(comp, sub_edges)
        for e, c in konig_edge_colour(sub).edge_colours.items():
            colour[e] = palette[c - 1]
    return Colouring(colour, None, max(colour.values(), default=0))


def list_edge_colour_2sparse(g: Graph, s: set[int], lists: ColourLists) -> Colouring:
    """List edge-colouring of a 2-sparse graph around a stable set s ⊇ V≥3.

    Edges meeting s are coloured by list_edge_colour_bipartite on B(g, s); each
    remaining edge touches at most two others and has at least 3 colours,
    so greedy finishes.
    """
    s = set(s)
    if find_dense_edge(g) is not None:
        raise PreconditionError("graph is not 2-sparse")
    if not stable_high_degree_set(g) <= s:
        raise PreconditionError("s must contain every vertex of degree >= 3")
    b = one_end_bipartite(g, s)
    _check_lists(g, lists, g.edges)
    _check_uniform(g, lists, s)
    for e in g.edges:
        if e[0] not in s and e[1] not in s and len(lists[e]) < 3:
            raise PreconditionError(f"edge {e} away from s needs 3 colours")
    colour = dict(list_edge_colour_bipartite(b, (s & b.vertices, b.vertices - s), lists).edge_colours)
    _greedy_edges(g, [e for e in g.sorted_edges() if e not in colour], lists, colour)
    return Colouring(colour, None, max(colour.values(), default=0))


def _greedy_edges(g: Graph, todo, lists: ColourLists, colour: dict[Edge, int]) -> None:
    for u, v in todo:
        used = {colour.get(f) for f in g.incident_edges(u) + g.incident_edges(v)}
        colour[(u, v)] = min(c for c in lists[(u, v)] if c not in used)


def edge_colour_2sparse(g: Graph, palette: int | None = None) -> Colouring:
    """Δ-edge-colouring of a 2-sparse graph with Δ >= 3."""
    delta = max_degree(g)
    k = delta if palette is None else palette
    if delta < 3 and palette is None:
        raise PreconditionError(f"maximum degree {delta} < 3")
    if k < max(delta, 3):
        raise PreconditionError(f"palette {k} too small")
    if find_dense_edge(g) is not None:
        raise PreconditionError("graph is not 2-sparse")
    full = frozenset(range(1, k + 1))
    col = list_edge_colour_2sparse(g, stable_high_degree_set(g), {e: full for e in g.edges})
    col.palette = k
    return col


def total_colour_2sparse_delta4(
    g: Graph,
    s: set[int],
    vertex_precolours: Mapping[int, int],
    lists: ColourLists,
    palette: int | None = None,
) -> Colouring:
    """Extend a precolouring of s to a total colouring with palette Δ+1 >= 5.

    Edges meeting s come from list_edge_colour_bipartite on B(g, s); every other
    element meets at most four others, so greedy finishes with 5 colours.
    ``palette`` may exceed Δ+1 when g is a piece of a larger graph.
    """
    s = set(s)
    delta = max_degree(g) if len(g) else 0
    k = delta + 1 if palette is None else palette
    if k < 5 or k < delta + 1:
        raise PreconditionError(f"needs at least max(5, Δ+1) colours, got {k}")
    if find_dense_edge(g) is not None:
        raise PreconditionError("graph is not 2-sparse")
    if not stable_high_degree_set(g) <= s:
        raise PreconditionError("s must contain every vertex of degree >= 3")
    b = one_end_bipartite(g, s)
    for u in s:
        c = vertex_precolours.get(u)
        if c is None or not 1 <= c <= k:
            raise PreconditionError(f"vertex {u} of s needs a precolour in 1..{k}")
    s_edges = list(b.edges)
    _check_lists(g, lists, s_edges)
    _check_uniform(g, lists, s)
    for e in s_edges:
        u = e[0] if e[0] in s else e[1]
        if vertex_precolours[u] in lists[e]:
            raise PreconditionError(f"precolour of {u} lies in the list of {e}")
        if not lists[e] <= set(range(1, k + 1)):
            raise PreconditionError(f"list of {e} leaves the palette")

    edges = dict(list_edge_colour_bipartite(b, (s & b.vertices, b.vertices - s), lists).edge_colours)
    verts = {u: vertex_precolours[u] for u in s}
    for v in g:
        if v in verts:
            continue
        used = {verts.get(w) for w in g.neighbours(v)} | {edges.get(e) for e in g.incident_edges(v)}
        verts[v] = min(c for c in range(1, k + 1) if c not in used)
    for u, v in g.sorted_edges():
        if (u, v) in edges:
            continue
        used = {verts[u], verts[v]} | {edges.get(f) for f in g.incident_edges(u) + g.incident_edges(v)}
        edges[(u, v)] = min(c for c in range(1, k + 1) if c not in used)
    return Colouring(edges, verts, k)


def extend_path_total(path: Sequence[int], precolours: tuple[int, int, int, int]) -> Colouring:
    """4-total-colour the path p1..pk from colours of p1, p1p2, p(k-1)pk, pk.

    The end vertices must share a colour. After renaming colours so that the
    precolouring reads (1, 2, 2, 1) or (1, 2, 3, 1): for k = 3 give p2 colour 4;
    for k = 4 give p2, p2p3, p3 colours 3, 1, 4; for longer paths give p2,
    p2p3, p(k-2)p(k-1), p(k-1) colours 4, 3, 1, 4 and recurse on p2..p(k-1).
    ``path`` may start and end at the same vertex (a cycle).
    """
    k = len(path)
    if k < 3:
        raise PreconditionError("path needs at least 3 vertices")
    c1, e1, e2, ck = precolours
    if any(c not in (1, 2, 3, 4) for c in precolours):
        raise PreconditionError(f"precolours {precolours} leave 1..4")
    if c1 != ck:
        raise PreconditionError("end vertices must share a colour")
    if e1 == c1 or e2 == ck or (k == 3 and e1 == e2):
        raise PreconditionError(f"inconsistent precolouring {precolours}")

    vert = [0] * k
    edge = [0] * (k - 1)  # edge[i] joins path[i] and path[i+1]
    vert[0], edge[0], edge[-1], vert[-1] = c1, e1, e2, ck
    lo, hi = 0, k - 1
    while True:
        # canonical names: 1 = end vertices, 2 = first edge, 3 = last edge if distinct
        fwd = {vert[lo]: 1, edge[lo]: 2}
        if edge[hi - 1] not in fwd:
            fwd[edge[hi - 1]] = 3
        back = {v: c for c, v in complete_permutation(fwd, 4).items()}
        length = hi - lo + 1
        if length == 3:
            vert[lo + 1] = back[4]
            break
        if length == 4:
            vert[lo + 1], edge[lo + 1], vert[lo + 2] = back[3], back[1], back[4]
            break
        vert[lo + 1], edge[lo + 1], edge[hi - 2], vert[hi - 1] = back[4], back[3], back[1], back[4]
        lo, hi = lo + 1, hi - 1

    vc = {}
    for i, v in enumerate(path):
        vc.setdefault(v, vert[i])
    ec = {edge_key(path[i], path[i + 1]): edge[i] for i in range(k - 1)}
    return Colouring(ec, vc, 4)


def degree2_paths(g: Graph) -> list[list[int]]:
    """Maximal paths whose ends have degree >= 3 and interiors degree 2."""
    high = stable_high_degree_set(g)
    seen: set[Edge] = set()
    paths = []
    for u in sorted(high):
        for w in sorted(g.neighbours(u)):
            if edge_key(u, w) in seen:
                continue
            path = [u, w]
            while path[-1] not in high:
                cur = path[-1]
                if degree(g, cur) != 2:
                    raise PreconditionError(f"vertex {cur} has degree {degree(g, cur)}")
                path.append(next(x for x in g.neighbours(cur) if x != path[-2]))
            for i in range(len(path) - 1):
                seen.add(edge_key(path[i], path[i + 1]))
            paths.append(path)
    return paths


def total_colour_2sparse_cubic(g: Graph, anchor: tuple[int, int, int] | None = None) -> Colouring:
    """4-total-colouring of a 2-connected 2-sparse graph with Δ = 3.

    Vertices of degree 3 take colour 1 and B(g, V≥3) is König-coloured with
    2, 3, 4; each maximal degree-2 path between degree-3 vertices is then
    finished by the path extension. With ``anchor = (u, a, b)`` the colours
    of a, b, au, ub come out as 1, 1, 2, 3.
    """
    if not is_biconnected(g):
        raise PreconditionError("graph is not 2-connected")
    if find_dense_edge(g) is not None:
        raise PreconditionError("graph is not 2-sparse")
    if max_degree(g) != 3:
        raise PreconditionError("maximum degree must be 3")
    s = stable_high_degree_set(g)
    if anchor is not None:
        u, a, b = anchor
        if a == b:
            raise PreconditionError("anchor ends must differ")
        if u not in g or degree(g, u) != 2 or set(g.neighbours(u)) != {a, b}:
            raise PreconditionError(f"anchor {u} must have degree 2 with neighbours {a}, {b}")
        if degree(g, a) != 3 or degree(g, b) != 3:
            raise PreconditionError("anchor neighbours must have degree 3")

    paths = degree2_paths(g)
    covered = [edge_key(p[i], p[i + 1]) for p in paths for i in range(len(p) - 1)]
    assert len(covered) == len(set(covered)) == g.m, "degree-2 paths must partition the edges"
    assert {v for p in paths for v in p} == set(g.vertices)

    bip = one_end_bipartite(g, s)
    kc = konig_edge_colour(bip).edge_colours
    shift = {1: 2, 2: 3, 3: 4}
    if anchor is not None:
        u, a, b = anchor
        shift = complete_permutation({kc[edge_key(a, u)]: 1, kc[edge_key(u, b)]: 2}, 3)
        shift = {c: d + 1 for c, d in shift.items()}
    edges = {e: shift[c] for e, c in kc.items()}
    verts = {v: 1 for v in s}
    for p in paths:
        pre = (1, edges[edge_key(p[0], p[1])], edges[edge_key(p[-2], p[-1])], 1)
        ext = extend_path_total(p, pre)
        edges.update(ext.edge_colours)
        for v in p[1:-1]:
            verts[v] = ext.vertex_colours[v]
    return Colouring(edges, verts, 4)


def _total_colour_cycle(g: Graph) -> Colouring:
    start = min(g)
    walk = [start]
    while len(walk) < len(g):
        walk.append(min(w for w in g.neighbours(walk[-1]) if w not in walk[-2:]))
    walk.append(start)
    return extend_path_total(walk, (1, 2, 3, 1))


def _total_colour_sparse_block(h: Graph) -> Colouring:
    if len(h) == 2:
        u, v = sorted(h)
        return Colouring({(u, v): 3}, {u: 1, v: 2}, 4)
    if max_degree(h) == 2:
        return _total_colour_cycle(h)
    return total_colour_2sparse_cubic(h)


def total_colour_2sparse(g: Graph, palette: int | None = None) -> Colouring:
    """Total colouring of a 2-sparse graph.

    With Δ >= 4 (or a palette of at least 5) the high-degree vertices take
    colour 1 and the Δ >= 4 extension does the rest, using Δ+1 colours.
    Otherwise each biconnected block is 4-total-coloured (edge, cycle or
    total_colour_2sparse_cubic) and blocks are glued at cut vertices by relabelling.
    """
    if find_dense_edge(g) is not None:
        raise PreconditionError("graph is not 2-sparse")
    if len(g) == 0:
        return Colouring({}, {}, palette or 4)
    delta = max_degree(g)
    k = max(delta + 1, 4) if palette is None else palette
    if k < max(delta + 1, 4):
        raise PreconditionError(f"palette {k} too small")
    if k >= 5:
        s = stable_high_degree_set(g)
        lst = frozenset(range(2, k + 1))
        lists = {e: lst for e in g.edges if e[0] in s or e[1] in s}
        return total_colour_2sparse_delta4(g, s, {v: 1 for v in s}, lists, k)
    blocks, _ = biconnected_components(g)
    cols = [_total_colour_sparse_block(Graph(block_vertices(b), b)) for b in blocks]
    return merge_block_colourings(g, blocks, cols, k, total=True)
