import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from chordless import fixtures as fx
from chordless.chordless import edge_colour_chordless
from chordless.colouring import Colouring
from chordless.graph import Graph, connected_components, max_degree
from chordless.oracle import (
    OracleError,
    _connected_chordless,
    brute_force_chord,
    brute_force_chromatic_index,
    brute_force_total_chromatic,
    enumerate_small_chordless,
    generate_chordless,
    verify_edge_colouring,
    verify_total_colouring,
)
from chordless.recognition import is_2sparse, is_chordless

from conftest import graphs


def test_verify_edge_examples():
    c4 = fx.cycle(4)
    col = Colouring({e: 1 + (min(e) % 2) if e != (0, 3) else 2 for e in c4.edges}, None, 2)
    rep = verify_edge_colouring(c4, col)
    assert rep.valid and rep.colours_used == 2
    tri = fx.cycle(3)
    rep = verify_edge_colouring(tri, Colouring({(0, 1): 1, (1, 2): 1, (0, 2): 2}, None, 2))
    assert not rep.valid and len(rep.violations) == 1


def test_verify_total_examples():
    g = Graph.from_edges([(0, 1)])
    rep = verify_total_colouring(g, Colouring({(0, 1): 3}, {0: 1, 1: 2}, 3))
    assert rep.valid and rep.colours_used == 3
    assert not verify_total_colouring(g, Colouring({(0, 1): 1}, {0: 1, 1: 2}, 3)).valid


def test_verify_missing_element():
    with pytest.raises(OracleError):
        verify_edge_colouring(fx.claw(), Colouring({(0, 1): 1}, None, 3))
    with pytest.raises(OracleError):
        verify_total_colouring(fx.claw(), Colouring({(0, 1): 1, (0, 2): 2, (0, 3): 3}, {0: 4}, 4))


def test_chromatic_examples():
    assert brute_force_chromatic_index(fx.cycle(5)) == 3
    assert brute_force_chromatic_index(fx.complete(4)) == 3
    assert brute_force_chromatic_index(fx.complete_bipartite(2, 3)) == 3
    assert brute_force_chromatic_index(fx.petersen()) == 4


def test_total_chromatic_examples():
    assert brute_force_total_chromatic(Graph.from_edges([(0, 1)])) == 3
    assert brute_force_total_chromatic(fx.cycle(5)) == 4
    assert brute_force_total_chromatic(fx.claw()) == 4
    assert brute_force_total_chromatic(fx.cycle(6)) == 3
    assert brute_force_total_chromatic(fx.complete(4)) == 5


def _nx_chromatic_index(g: Graph) -> int:
    """Vertex-chromatic number of the networkx line graph, by plain backtracking."""
    lg = nx.line_graph(nx.Graph(list(g.edges)))
    best = None
    for k in range(1, g.m + 1):
        order = list(lg.nodes)
        col: dict = {}

        def go(i):
            if i == len(order):
                return True
            used = {col.get(w) for w in lg.neighbors(order[i])}
            for c in range(k):
                if c not in used:
                    col[order[i]] = c
                    if go(i + 1):
                        return True
            col.pop(order[i], None)
            return False

        if go(0):
            best = k
            break
    return best


@given(graphs(max_n=6))
def test_chromatic_index_against_line_graph(g):
    if g.m:
        assert brute_force_chromatic_index(g) == _nx_chromatic_index(g)


@given(graphs(max_n=6), st.data())
def test_oracles_monotone(g, data):
    missing = [(u, v) for u in g for v in g if u < v and not g.has_edge(u, v)]
    if not missing or not g.m:
        return
    e = data.draw(st.sampled_from(missing))
    h = Graph(g.vertices, list(g.edges) + [e])
    assert brute_force_chromatic_index(h) >= brute_force_chromatic_index(g)
    assert brute_force_total_chromatic(h) >= brute_force_total_chromatic(g)


@given(graphs(max_n=7, min_n=1))
def test_oracles_within_vizing_bounds(g):
    d = max_degree(g)
    if g.m:
        assert d <= brute_force_chromatic_index(g) <= d + 1
    assert d + 1 <= brute_force_total_chromatic(g) <= d + 2


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 4), (5, 10), (6, 27), (7, 82)])
def test_enumeration_counts_match_atlas(n, expected):
    atlas = [
        h for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n and (n == 1 or nx.is_connected(h))
    ]
    brute = [h for h in atlas if brute_force_chord(Graph(h.nodes, h.edges)) is None]
    assert len(brute) == expected
    assert len(_connected_chordless(n)) == expected


def test_enumeration_examples():
    four = list(enumerate_small_chordless(4))
    assert any(nx.is_isomorphic(nx.Graph(list(g.edges)), nx.star_graph(3)) for g in four)
    assert all(g.m < 6 for g in four)
    five = list(enumerate_small_chordless(5))
    k23 = nx.complete_bipartite_graph(2, 3)
    assert any(nx.is_isomorphic(nx.Graph(list(g.edges)), k23) for g in five)
    for n in range(1, 8):
        for g in enumerate_small_chordless(n):
            assert is_chordless(g) and max_degree(g) >= 3 and len(connected_components(g)) == 1
    with pytest.raises(OracleError):
        list(enumerate_small_chordless(10))


def test_generator_examples():
    g = fx.subdivided_complete(4)
    assert is_chordless(g) and is_2sparse(g) and max_degree(g) == 3 and len(g) == 10
    for profile in ("sparse", "composed"):
        for n in (10, 37, 120):
            a = generate_chordless(n, 7, profile)
            assert a == generate_chordless(n, 7, profile)
            assert len(a) == n and is_chordless(a) and max_degree(a) >= 3
            assert len(connected_components(a)) == 1
    assert is_2sparse(generate_chordless(50, 1, "sparse"))
    dense = generate_chordless(60, 3, "composed", require_dense=True)
    assert not is_2sparse(dense)


def test_generator_rejects_bad_arguments():
    with pytest.raises(OracleError):
        generate_chordless(3, 0)
    with pytest.raises(OracleError):
        generate_chordless(10, 0, "dense")


def test_mutation_detected():
    rng = random.Random(5)
    g = fx.subdivided_complete(4)
    c = edge_colour_chordless(g)
    for _ in range(50):
        e = rng.choice(sorted(g.edges))
        mutated = dict(c.edge_colours)
        mutated[e] = rng.choice([x for x in range(1, 4) if x != mutated[e]])
        conflicting = any(mutated[f] == mutated[e] for f in g.incident_edges(e[0]) + g.incident_edges(e[1]) if f != e)
        assert verify_edge_colouring(g, Colouring(mutated, None, 3)).valid != conflicting
