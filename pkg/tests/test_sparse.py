import itertools

import pytest
from hypothesis import given, strategies as st

from chordless import fixtures as fx
from chordless.colouring import Colouring, PreconditionError
from chordless.graph import Graph, edge_key, max_degree
from chordless.oracle import brute_force_total_chromatic, verify_edge_colouring, verify_total_colouring
from chordless.recognition import stable_high_degree_set
from chordless.sparse import (
    degree2_paths,
    edge_colour_2sparse,
    extend_path_total,
    konig_edge_colour,
    list_edge_colour_2sparse,
    list_edge_colour_bipartite,
    total_colour_2sparse,
    total_colour_2sparse_cubic,
    total_colour_2sparse_delta4,
)

from conftest import bipartite_graphs


def _lists(g, lst):
    return {e: frozenset(lst) for e in g.edges}


def _respects(c: Colouring, lists) -> bool:
    return all(c.edge_colours[e] in lists[e] for e in lists)


def _list_feasible(g: Graph, lists) -> bool:
    edges = g.sorted_edges()
    for choice in itertools.product(*(sorted(lists[e]) for e in edges)):
        col = dict(zip(edges, choice))
        if verify_edge_colouring(g, Colouring(col, None, 0)).valid:
            return True
    return False


# --- König ------------------------------------------------------------------


def test_konig_examples():
    c = konig_edge_colour(fx.cycle(4))
    assert verify_edge_colouring(fx.cycle(4), c).valid and c.colours_used() == 2
    c = konig_edge_colour(fx.claw())
    assert sorted(c.edge_colours.values()) == [1, 2, 3]
    k33 = fx.complete_bipartite(3, 3)
    c = konig_edge_colour(k33)
    assert verify_edge_colouring(k33, c).valid and c.colours_used() == 3


def test_konig_rejects_odd_cycle():
    with pytest.raises(PreconditionError):
        konig_edge_colour(fx.cycle(5))


@given(bipartite_graphs())
def test_konig_uses_exactly_delta(arg):
    g, _, _ = arg
    c = konig_edge_colour(g)
    assert verify_edge_colouring(g, c).valid
    if g.m:
        assert c.colours_used() == max_degree(g)


# --- list colouring ---------------------------------------------------------


def test_list_bipartite_examples():
    g = Graph.from_edges([(0, 1)])
    assert list_edge_colour_bipartite(g, ({0}, {1}), {(0, 1): frozenset({5})}).edge_colours == {(0, 1): 5}
    claw = fx.claw()
    c = list_edge_colour_bipartite(claw, ({0}, {1, 2, 3}), _lists(claw, {1, 2, 3}))
    assert sorted(c.edge_colours.values()) == [1, 2, 3]


def test_list_bipartite_c6():
    c6 = fx.cycle(6)
    per_x = {0: {1, 2}, 2: {2, 3}, 4: {1, 3}}
    lists = {e: frozenset(per_x[e[0] if e[0] % 2 == 0 else e[1]]) for e in c6.edges}
    assert _list_feasible(c6, lists)
    c = list_edge_colour_bipartite(c6, ({0, 2, 4}, {1, 3, 5}), lists)
    assert verify_edge_colouring(c6, c).valid and _respects(c, lists)


def test_list_bipartite_preconditions():
    claw = fx.claw()
    with pytest.raises(PreconditionError):  # degree-3 vertex on the Y side
        list_edge_colour_bipartite(claw, ({1, 2, 3}, {0}), _lists(claw, {1, 2, 3}))
    with pytest.raises(PreconditionError):  # list too short
        list_edge_colour_bipartite(claw, ({0}, {1, 2, 3}), _lists(claw, {1, 2}))
    uneven = _lists(claw, {1, 2, 3})
    uneven[(0, 1)] = frozenset({1, 2, 4})
    with pytest.raises(PreconditionError):  # lists differ at an X vertex
        list_edge_colour_bipartite(claw, ({0}, {1, 2, 3}), uneven)


@st.composite
def listed_bipartite(draw):
    """Bipartite graph with degree-3+ vertices in X, uniform lists at X vertices."""
    p = draw(st.integers(1, 4))
    q = draw(st.integers(1, 6))
    pairs = [(i, p + j) for i in range(p) for j in range(q)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, k in zip(pairs, keep) if k]
    # Y vertices keep at most two edges
    count: dict = {}
    trimmed = []
    for u, v in edges:
        if count.get(v, 0) < 2:
            count[v] = count.get(v, 0) + 1
            trimmed.append((u, v))
    g = Graph(range(p + q), trimmed)
    lists = {}
    for x in range(p):
        need = max([len(g.neighbours(x))] + [len(g.neighbours(y)) for y in g.neighbours(x)] + [0])
        size = draw(st.integers(need, need + 1))
        lst = frozenset(draw(st.lists(st.integers(1, 9), min_size=size, max_size=size, unique=True)))
        for y in g.neighbours(x):
            lists[edge_key(x, y)] = lst
    return g, set(range(p)), set(range(p, p + q)), lists


@given(listed_bipartite())
def test_list_bipartite_respects_lists(arg):
    g, xs, ys, lists = arg
    c = list_edge_colour_bipartite(g, (xs, ys), lists)
    assert verify_edge_colouring(g, c).valid
    assert _respects(c, lists)


def test_list_2sparse_examples():
    th = fx.theta()
    lists = _lists(th, {1, 2, 3})
    assert _list_feasible(th, lists)
    c = list_edge_colour_2sparse(th, {0, 1}, lists)
    assert verify_edge_colouring(th, c).valid and _respects(c, lists)
    k23 = fx.complete_bipartite(2, 3)
    c = list_edge_colour_2sparse(k23, {0, 1}, _lists(k23, {1, 2, 3}))
    assert verify_edge_colouring(k23, c).valid and c.colours_used() == 3
    c5 = fx.cycle(5)
    c = list_edge_colour_2sparse(c5, set(), _lists(c5, {1, 2, 3}))
    assert verify_edge_colouring(c5, c).valid


def test_list_2sparse_rejects_dense():
    g = fx.theta_pair()
    with pytest.raises(PreconditionError):
        list_edge_colour_2sparse(g, {fx.U, fx.W}, _lists(g, range(1, 5)))


def test_edge_colour_2sparse_examples():
    for g in (fx.claw(), fx.complete_bipartite(2, 3), fx.subdivided_complete(4)):
        c = edge_colour_2sparse(g)
        assert verify_edge_colouring(g, c).valid and c.colours_used() == 3


# --- total colouring --------------------------------------------------------


def test_total_delta4_examples():
    star = Graph.from_edges([(0, i) for i in range(1, 5)])
    lists = _lists(star, {2, 3, 4, 5})
    c = total_colour_2sparse_delta4(star, {0}, {0: 1}, lists)
    assert verify_total_colouring(star, c).valid and c.vertex_colours[0] == 1
    assert all(c.vertex_colours[i] not in (1, c.edge(0, i)) for i in range(1, 5))

    k24 = fx.complete_bipartite(2, 4)
    lists = _lists(k24, {2, 3, 4, 5})
    c = total_colour_2sparse_delta4(k24, {0, 1}, {0: 1, 1: 1}, lists)
    assert verify_total_colouring(k24, c).valid and c.colours_used() <= 5
    assert _respects(c, lists)


def test_total_delta4_rejects_unstable_set():
    double_star = Graph.from_edges([(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    with pytest.raises(ValueError):
        total_colour_2sparse_delta4(double_star, {0, 1}, {0: 1, 1: 1}, _lists(double_star, {2, 3, 4, 5}))


def test_path_extension_canonical_colours():
    c = extend_path_total([0, 1, 2], (1, 2, 3, 1))
    assert c.vertex_colours[1] == 4
    c = extend_path_total([0, 1, 2, 3], (1, 2, 3, 1))
    assert (c.vertex_colours[1], c.edge(1, 2), c.vertex_colours[2]) == (3, 1, 4)
    c = extend_path_total([0, 1, 2, 3, 4], (1, 2, 2, 1))
    assert (c.vertex_colours[1], c.edge(1, 2), c.edge(2, 3), c.vertex_colours[3]) == (4, 3, 1, 4)


def test_path_extension_rejects_inconsistent():
    with pytest.raises(PreconditionError):
        extend_path_total([0, 1, 2], (1, 2, 2, 1))
    with pytest.raises(PreconditionError):
        extend_path_total([0, 1, 2, 3], (1, 2, 3, 2))
    with pytest.raises(PreconditionError):
        extend_path_total([0, 1, 2, 3], (1, 1, 3, 1))


@given(st.integers(3, 14), st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
def test_path_extension_keeps_precolours(k, c1, e1, e2):
    if e1 == c1 or e2 == c1 or (k == 3 and e1 == e2):
        return
    p = list(range(k))
    c = extend_path_total(p, (c1, e1, e2, c1))
    g = fx.path(k)
    assert verify_total_colouring(g, c).valid
    assert (c.vertex_colours[0], c.edge(0, 1), c.edge(k - 2, k - 1), c.vertex_colours[k - 1]) == (c1, e1, e2, c1)
    assert c.colours_used() <= 4


def test_degree2_paths_partition():
    g = fx.subdivided_complete(4)
    paths = degree2_paths(g)
    assert len(paths) == 6 and all(len(p) == 3 for p in paths)


def test_cubic_anchor_k23():
    k23 = fx.complete_bipartite(2, 3)
    c = total_colour_2sparse_cubic(k23, anchor=(2, 0, 1))
    assert verify_total_colouring(k23, c).valid
    assert (c.vertex_colours[0], c.vertex_colours[1], c.edge(0, 2), c.edge(2, 1)) == (1, 1, 2, 3)


def test_cubic_theta_and_anchor_errors():
    th = fx.theta()
    assert verify_total_colouring(th, total_colour_2sparse_cubic(th)).valid
    # vertex 2 sits on a path of length 2 between 0 and 1; vertex 4 has degree-2 neighbours
    with pytest.raises(PreconditionError):
        total_colour_2sparse_cubic(th, anchor=(5, 4, 1))


@pytest.mark.parametrize(
    "g,colours",
    [(fx.claw(), 4), (fx.cycle(6), 4), (fx.complete_bipartite(2, 4), 5), (fx.subdivided_complete(4), 4)],
    ids=["claw", "c6", "k24", "sub_k4"],
)
def test_total_colour_2sparse_examples(g, colours):
    c = total_colour_2sparse(g)
    assert verify_total_colouring(g, c).valid
    assert c.colours_used() <= colours
    assert brute_force_total_chromatic(g) <= colours


def test_total_colour_2sparse_pendant_heavy():
    g = fx.two_claws_sharing_leaf()
    c = total_colour_2sparse(g)
    assert verify_total_colouring(g, c).valid and c.colours_used() <= 4
    assert stable_high_degree_set(g) == {0, 4}
