"""Named test graphs.

Expected values are not stored here; the tests derive them with the
brute-force oracles.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

# theta-pair vertex names
U, V, W, P, Q, R, S = range(7)


def claw() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (0, 3)])


def path(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n)


def cycle(n: int) -> Graph:
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n)


def complete(n: int) -> Graph:
    return Graph.from_edges(combinations(range(n), 2), n)


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with parts 0..p-1 and p..p+q-1."""
    return Graph.from_edges([(i, p + j) for i in range(p) for j in range(q)], p + q)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner)


def theta_pair() -> Graph:
    """u, v of degree 3 joined by an edge; w of degree 4; p, q, r, s of degree 2."""
    return Graph.from_edges([(U, V), (U, P), (P, W), (U, Q), (Q, W), (V, R), (R, W), (V, S), (S, W)])


def theta(lengths: tuple[int, int, int] = (2, 2, 3)) -> Graph:
    """Two degree-3 vertices 0 and 1 joined by three paths of the given lengths."""
    edges = []
    nxt = 2
    for length in lengths:
        chain = [0, *range(nxt, nxt + length - 1), 1]
        nxt += length - 1
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    return Graph.from_edges(edges)


def subdivided_complete(n: int) -> Graph:
    """K_n with every edge subdivided once."""
    edges = []
    nxt = n
    for u, v in combinations(range(n), 2):
        edges += [(u, nxt), (nxt, v)]
        nxt += 1
    return Graph.from_edges(edges)


def two_claws_sharing_leaf() -> Graph:
    return Graph.from_edges([(0, 1), (0, 2), (0, 3), (4, 3), (4, 5), (4, 6)])


def two_k23_sharing_vertex() -> Graph:
    """Two copies of K_{2,3} glued at a degree-2 vertex (vertex 2)."""
    first = [(a, x) for a in (0, 1) for x in (2, 3, 4)]
    second = [(a, x) for a in (5, 6) for x in (2, 7, 8)]
    return Graph.from_edges(first + second)


def two_k23_glued() -> Graph:
    """Two K_{2,3} glued through a proper 2-cutset (Δ = 3, not 2-sparse).

    Each copy drops one middle vertex; its hubs (0, 2) and (1, 3) are then
    joined by the edges 0-1 and 2-3.
    """
    return Graph.from_edges(
        [(0, 1), (0, 4), (4, 2), (0, 5), (5, 2), (2, 3), (1, 6), (6, 3), (1, 7), (7, 3)]
    )


def theta_pair_chain() -> Graph:
    """Two theta pairs chained through a 2-cutset (Δ = 4).

    The first copy loses s (between v and w), the second loses p (between
    u and w); v is joined to the second u and w to the second w.
    """
    first = [e for e in theta_pair().edges if S not in e]
    off = 7
    second = [(a + off, b + off) for a, b in theta_pair().edges if P not in (a, b)]
    links = [(V, U + off), (W, W + off)]
    return _compact(Graph.from_edges(first + second + links))


def _compact(g: Graph) -> Graph:
    ids = {v: i for i, v in enumerate(sorted(g))}
    return Graph.from_edges([(ids[a], ids[b]) for a, b in g.edges], len(g))


CATALOGUE = {
    "claw": claw,
    "c4": lambda: cycle(4),
    "c5": lambda: cycle(5),
    "c6": lambda: cycle(6),
    "k4": lambda: complete(4),
    "k23": lambda: complete_bipartite(2, 3),
    "k24": lambda: complete_bipartite(2, 4),
    "k33": lambda: complete_bipartite(3, 3),
    "petersen": petersen,
    "theta_pair": theta_pair,
    "theta": theta,
    "subdivided_k4": lambda: subdivided_complete(4),
    "two_claws_sharing_leaf": two_claws_sharing_leaf,
    "two_k23_sharing_vertex": two_k23_sharing_vertex,
    "two_k23_glued": two_k23_glued,
    "theta_pair_chain": theta_pair_chain,
}
