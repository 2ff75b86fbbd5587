"""Independent checks: verifiers, exhaustive oracles, enumerators and generators.

Nothing here calls the decomposition or the colouring routines; the brute
force searches and cycle enumeration are deliberately naive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal, Union

import networkx as nx

from .colouring import Colouring
from .graph import Edge, Graph, connected_components, degree, edge_key, max_degree
from .recognition import is_chordless, is_2sparse

Element = Union[tuple[Literal["v"], int], tuple[Literal["e"], Edge]]


class OracleError(ValueError):
    """Input outside what an oracle or generator can handle."""


@dataclass
class VerificationReport:
    valid: bool
    violations: list[tuple[tuple[Element, Element], int]] = field(default_factory=list)
    colours_used: int = 0


def _edge_conflicts(g: Graph, colours: dict[Edge, int]):
    for v in g:
        inc = g.incident_edges(v)
        for e, f in combinations(inc, 2):
            if colours[e] == colours[f]:
                yield (("e", e), ("e", f)), colours[e]


def verify_edge_colouring(g: Graph, c: Colouring) -> VerificationReport:
    missing = [e for e in g.edges if e not in c.edge_colours]
    if missing:
        raise OracleError(f"uncoloured edges {sorted(missing)[:5]}")
    colours = {e: c.edge_colours[e] for e in g.edges}
    violations = list(_edge_conflicts(g, colours))
    return VerificationReport(not violations, violations, len(set(colours.values())))


def verify_total_colouring(g: Graph, c: Colouring) -> VerificationReport:
    missing_e = [e for e in g.edges if e not in c.edge_colours]
    vc = c.vertex_colours or {}
    missing_v = [v for v in g if v not in vc]
    if missing_e or missing_v:
        raise OracleError(f"uncoloured elements: edges {sorted(missing_e)[:5]}, vertices {missing_v[:5]}")
    colours = {e: c.edge_colours[e] for e in g.edges}
    violations = list(_edge_conflicts(g, colours))
    for u, v in g.sorted_edges():
        if vc[u] == vc[v]:
            violations.append(((("v", u), ("v", v)), vc[u]))
        for x in (u, v):
            if vc[x] == colours[(u, v)]:
                violations.append(((("v", x), ("e", (u, v))), vc[x]))
    used = set(colours.values()) | {vc[v] for v in g}
    return VerificationReport(not violations, violations, len(used))


# --- exhaustive colouring oracles -------------------------------------------


def _bfs_order(g: Graph, root: int) -> list[int]:
    order = [root]
    seen = {root}
    i = 0
    while len(order) < len(g):
        if i == len(order):
            nxt = min(v for v in g if v not in seen)
            order.append(nxt)
            seen.add(nxt)
        for w in sorted(g.neighbours(order[i])):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    return order


def _colourable(n_items: int, conflicts: list[list[int]], k: int, fixed: int) -> bool:
    """Backtracking k-colouring of items 0..n-1 against earlier conflicts.

    Items 0..fixed-1 are pairwise conflicting and pre-assigned colours
    1..fixed. A fresh colour is only ever tried once (colour symmetry).
    """
    colour = [0] * n_items
    for i in range(fixed):
        colour[i] = i + 1

    def go(i: int, top: int) -> bool:
        if i == n_items:
            return True
        used = {colour[j] for j in conflicts[i]}
        for c in range(1, min(top + 1, k) + 1):
            if c not in used:
                colour[i] = c
                if go(i + 1, max(top, c)):
                    return True
        colour[i] = 0
        return False

    if fixed > k:
        return False
    return go(fixed, fixed)


def _edge_problem(g: Graph):
    root = max(sorted(g), key=lambda v: degree(g, v))
    order = _bfs_order(g, root)
    rank = {v: i for i, v in enumerate(order)}
    first = g.incident_edges(root)
    rest = sorted((e for e in g.edges if e not in first), key=lambda e: sorted((rank[e[0]], rank[e[1]]))[::-1])
    items = first + rest
    index = {e: i for i, e in enumerate(items)}
    conflicts = [[index[f] for f in g.incident_edges(e[0]) + g.incident_edges(e[1]) if index[f] < index[e]] for e in items]
    return items, conflicts, len(first)


def _total_problem(g: Graph):
    root = max(sorted(g), key=lambda v: degree(g, v))
    items: list[Element] = [("v", root)] + [("e", e) for e in g.incident_edges(root)]
    fixed = len(items)
    done = {root}
    for v in _bfs_order(g, root):
        if v != root:
            items.append(("v", v))
            done.add(v)
        for w in sorted(g.neighbours(v)):
            if w in done and v != root and ("e", edge_key(v, w)) not in items:
                items.append(("e", edge_key(v, w)))
    index = {it: i for i, it in enumerate(items)}

    def neighbours(it):
        if it[0] == "v":
            v = it[1]
            return [("v", w) for w in g.neighbours(v)] + [("e", e) for e in g.incident_edges(v)]
        u, v = it[1]
        return [("v", u), ("v", v)] + [("e", f) for f in g.incident_edges(u) + g.incident_edges(v) if f != it[1]]

    conflicts = [[index[x] for x in neighbours(it) if index[x] < index[it]] for it in items]
    return items, conflicts, fixed


def brute_force_chromatic_index(g: Graph, limit: int = 12) -> int:
    """Least k with a proper k-edge-colouring, by exhaustive backtracking."""
    if g.m == 0:
        return 0
    items, conflicts, fixed = _edge_problem(g)
    for k in range(max_degree(g), limit + 1):
        if _colourable(len(items), conflicts, k, fixed):
            return k
    raise OracleError(f"chromatic index exceeds limit {limit}")


def brute_force_total_chromatic(g: Graph, limit: int = 12) -> int:
    """Least k with a proper total colouring, by exhaustive backtracking."""
    if len(g) == 0:
        return 0
    items, conflicts, fixed = _total_problem(g)
    for k in range(max_degree(g) + 1, limit + 1):
        if _colourable(len(items), conflicts, k, fixed):
            return k
    raise OracleError(f"total chromatic number exceeds limit {limit}")


# --- brute-force structure oracles ------------------------------------------


def simple_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple starting at its smallest vertex."""
    for start in sorted(g):
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            for w in g.neighbours(v):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > start and w not in path:
                    stack.append((w, path + [w]))


def brute_force_chord(g: Graph) -> tuple[tuple[int, ...], Edge] | None:
    for cyc in simple_cycles(g):
        pos = {v: i for i, v in enumerate(cyc)}
        for u, v in g.edges:
            if u in pos and v in pos and (pos[u] - pos[v]) % len(cyc) not in (1, len(cyc) - 1):
                return cyc, (u, v)
    return None


# --- exhaustive small chordless graphs --------------------------------------


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


@lru_cache(maxsize=None)
def _connected_chordless(n: int) -> tuple[Graph, ...]:
    """Connected chordless graphs on vertices 0..n-1, one per isomorphism class.

    The class is closed under deleting a vertex, and every connected graph
    has a vertex whose deletion keeps it connected, so each graph arises from
    one on n-1 vertices plus a new vertex n-1 with a nonempty neighbourhood.
    """
    if n == 1:
        return (Graph([0]),)
    buckets: dict[str, list[nx.Graph]] = {}
    out = []
    for base in _connected_chordless(n - 1):
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                g = Graph(range(n), list(base.edges) + [(x, n - 1) for x in nbrs])
                if not is_chordless(g):
                    continue
                h = _nx(g)
                key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(g)
    return tuple(out)


def enumerate_small_chordless(n: int) -> Iterator[Graph]:
    """Every connected chordless graph on n vertices with Δ >= 3, up to isomorphism."""
    if n > 9:
        raise OracleError("exhaustive enumeration is limited to n <= 9")
    if n < 1:
        return
    for g in _connected_chordless(n):
        if len(g) and max_degree(g) >= 3:
            yield g


# --- random chordless graphs ------------------------------------------------


def _random_connected(rng: random.Random, t: int, m: int) -> list[Edge]:
    edges = {edge_key(v, rng.randrange(v)) for v in range(1, t)}
    cap = t * (t - 1) // 2
    m = min(m, cap)
    while len(edges) < m:
        u, v = rng.sample(range(t), 2)
        edges.add(edge_key(u, v))
    return sorted(edges)


def _subdivide(t: int, base: list[Edge], start: int) -> tuple[int, list[Edge]]:
    """Subdivide every base edge once; new vertices are numbered from start."""
    edges = []
    nxt = start
    for u, v in base:
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return nxt, edges


def _sparse_graph(n: int, rng: random.Random) -> Graph:
    pendants = rng.randrange(0, max(1, n // 20) + 1)
    t = max(1, min(n - pendants, round(n * rng.uniform(0.35, 0.45))))
    m = n - t - pendants
    while t > 1 and m < t - 1:
        t -= 1
        m = n - t - pendants
    m = min(m, t * (t - 1) // 2)
    base = _random_connected(rng, t, m) if t > 1 else []
    nxt, edges = _subdivide(t, base, t)
    while nxt < n:
        edges.append((rng.randrange(t), nxt))
        nxt += 1
    return Graph(range(n), edges)


def _ear_piece(size: int, rng: random.Random) -> tuple[int, list[Edge]]:
    """2-connected 2-sparse graph with Δ >= 3 on exactly ``size`` >= 5 vertices.

    The base is a cycle on a few branch vertices plus random extra edges
    (parallel edges allowed); every base edge becomes a path with at least
    one interior vertex, and the padding is spread over those paths.
    """
    if size < 5:
        raise OracleError("pieces need at least 5 vertices")
    branch = max(2, min(size // 5, 12))
    base = [(i, (i + 1) % branch) for i in range(branch)]
    for _ in range(rng.randint(1, max(1, branch // 2))):
        base.append(tuple(rng.sample(range(branch), 2)))
    interior = [1] * len(base)
    for _ in range(size - branch - len(base)):
        interior[rng.randrange(len(interior))] += 1
    edges = []
    nxt = branch
    for (u, v), k in zip(base, interior):
        chain = [u, *range(nxt, nxt + k), v]
        nxt += k
        edges += [edge_key(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return nxt, edges


def _glue_candidates(g: Graph) -> list[tuple[int, int, int]]:
    """Degree-2 vertices w of g with non-adjacent neighbours a, b."""
    out = []
    for w in g:
        if degree(g, w) == 2:
            a, b = sorted(g.neighbours(w))
            if not g.has_edge(a, b):
                out.append((w, a, b))
    return out


def _two_sum(g: Graph, piece_n: int, piece_edges: list[Edge], rng: random.Random) -> Graph | None:
    """Replace a degree-2 vertex of g by a piece glued along its two neighbours.

    Host vertices next to a degree-2 vertex that itself touches a branch
    vertex, and guest vertices between two branch vertices, are preferred:
    gluing those creates an edge between two vertices of degree >= 3.
    """
    piece = Graph(range(piece_n), piece_edges)
    host = _glue_candidates(g)
    guest = _glue_candidates(piece)
    if not host or not guest:
        return None

    def near_branch(c):
        return any(
            degree(g, x) == 2 and any(degree(g, y) >= 3 for y in g.neighbours(x) if y != c[0]) for x in c[1:]
        )

    w, a, b = rng.choice([c for c in host if near_branch(c)] or host)
    pw, pa, pb = rng.choice([c for c in guest if min(degree(piece, c[1]), degree(piece, c[2])) >= 3] or guest)
    base = g.max_id() + 1
    relabel = {pa: a, pb: b}
    for v in range(piece_n):
        if v not in relabel and v != pw:
            relabel[v] = base + v
    edges = [e for e in g.edges if w not in e]
    edges += [(relabel[u], relabel[v]) for u, v in piece_edges if pw not in (u, v)]
    return _compact(Graph((g.vertices - {w}) | set(relabel.values()), edges))


def _one_sum(g: Graph, piece_n: int, piece_edges: list[Edge], rng: random.Random) -> Graph:
    v = rng.choice(sorted(g))
    pv = rng.randrange(piece_n)
    base = g.max_id() + 1
    relabel = {x: (v if x == pv else base + x) for x in range(piece_n)}
    edges = list(g.edges) + [(relabel[x], relabel[y]) for x, y in piece_edges]
    return _compact(Graph(g.vertices | set(relabel.values()), edges))


def _compact(g: Graph) -> Graph:
    ids = {v: i for i, v in enumerate(sorted(g))}
    return Graph(range(len(g)), [(ids[u], ids[v]) for u, v in g.edges])


def _composed_graph(n: int, rng: random.Random, require_dense: bool) -> Graph:
    if n < 5:
        raise OracleError("composed profile needs n >= 5")
    first = n if n < 8 else rng.randint(5, min(14, n - 3))
    g = Graph(*_piece_graph(first, rng))
    while len(g) < n:
        remaining = n - len(g)
        # a 1-sum adds piece - 1 vertices, a 2-sum piece - 4
        if remaining >= 4 and rng.random() < 0.15:
            g = _one_sum(g, *_ear_piece(min(rng.randint(5, 25), remaining + 1), rng), rng)
            continue
        piece = remaining + 4 if remaining <= 10 else rng.randint(5, 14)
        # gluing two chordless graphs along a degree-2 vertex with
        # non-adjacent neighbours cannot create a chord; the final
        # recognition filter in generate_chordless re-checks anyway
        for _ in range(100):
            glued = _two_sum(g, *_ear_piece(piece, rng), rng)
            if glued is not None:
                g = glued
                break
        else:
            raise OracleError("composition failed within the retry budget")
    if require_dense and is_2sparse(g):
        raise OracleError("composition produced a 2-sparse graph")
    return g


def _piece_graph(size: int, rng: random.Random) -> tuple[range, list[Edge]]:
    n, edges = _ear_piece(size, rng)
    return range(n), edges


def generate_chordless(
    n: int,
    seed: int,
    profile: Literal["sparse", "composed"] = "sparse",
    require_dense: bool = False,
) -> Graph:
    """Random connected chordless graph on n vertices with Δ >= 3.

    ``sparse`` subdivides every edge of a random connected graph once (plus a
    few pendant vertices), which always yields a 2-sparse graph. ``composed``
    glues 2-connected 2-sparse pieces along non-adjacent pairs (occasionally
    at a single vertex); the finished graph is re-checked for chords. The same
    (n, seed, profile) always gives the same graph.
    """
    if n < 4:
        raise OracleError("n must be at least 4")
    for attempt in range(100):
        rng = random.Random(f"{profile}:{n}:{seed}:{attempt}")
        try:
            if profile == "sparse":
                g = _sparse_graph(n, rng)
            elif profile == "composed":
                g = _composed_graph(n, rng, require_dense)
            else:
                raise OracleError(f"unknown profile {profile!r}")
        except OracleError:
            if profile not in ("sparse", "composed"):
                raise
            continue
        if len(g) == n and max_degree(g) >= 3 and len(connected_components(g)) == 1 and is_chordless(g):
            return g
    raise OracleError(f"could not generate a {profile} chordless graph on {n} vertices")
