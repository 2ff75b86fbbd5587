import pytest

from chordless import fixtures as fx
from chordless.chordless import (
    DeltaTooSmallError,
    NotChordlessError,
    Trace,
    colour_recursive_edge,
    colour_recursive_total_delta3,
    colour_recursive_total_delta4,
    colour_small_degree,
    edge_colour_chordless,
    merge_articulation_blocks,
    total_colour_chordless,
)
from chordless.graph import induced_subgraph, max_degree
from chordless.oracle import (
    brute_force_chromatic_index,
    brute_force_total_chromatic,
    generate_chordless,
    verify_edge_colouring,
    verify_total_colouring,
)
from chordless.recognition import build_blocks, is_2sparse

CHORDLESS = {
    name: f()
    for name, f in fx.CATALOGUE.items()
    if name not in ("k4", "k33", "petersen", "c4", "c5", "c6")
}


def _check_edge(g, c):
    assert verify_edge_colouring(g, c).valid
    assert max(c.edge_colours.values()) <= max_degree(g)


def _check_total(g, c):
    assert verify_total_colouring(g, c).valid
    assert max([*c.edge_colours.values(), *c.vertex_colours.values()]) <= max_degree(g) + 1


@pytest.mark.parametrize("name", sorted(CHORDLESS))
def test_fixtures_edge_and_total(name):
    g = CHORDLESS[name]
    _check_edge(g, edge_colour_chordless(g))
    _check_total(g, total_colour_chordless(g))


def test_spec_examples():
    assert edge_colour_chordless(fx.claw()).colours_used() == 3
    assert edge_colour_chordless(fx.theta_pair()).colours_used() == 4
    assert brute_force_chromatic_index(fx.theta_pair()) == 4
    assert edge_colour_chordless(fx.subdivided_complete(4)).colours_used() == 3
    assert total_colour_chordless(fx.claw()).colours_used() == 4
    assert total_colour_chordless(fx.theta_pair()).colours_used() == 5
    assert brute_force_total_chromatic(fx.theta_pair()) == 5
    assert total_colour_chordless(fx.complete_bipartite(2, 3)).colours_used() == 4


def test_rejections():
    with pytest.raises(NotChordlessError) as info:
        edge_colour_chordless(fx.complete(4))
    assert info.value.witness.check(fx.complete(4))
    with pytest.raises(DeltaTooSmallError):
        total_colour_chordless(fx.cycle(5))


def test_small_degree_fallback():
    assert colour_small_degree(fx.cycle(5), "edge").colours_used() == 3
    assert colour_small_degree(fx.cycle(6), "edge").colours_used() == 2
    c = colour_small_degree(fx.path(5), "total")
    assert verify_total_colouring(fx.path(5), c).valid and c.colours_used() <= 4


def test_recursive_edge_theta_pair():
    g = fx.theta_pair()
    trace = Trace(next_id=10)
    c = colour_recursive_edge(g, 4, trace)
    _check_edge(g, c)
    step = trace.steps[0]
    s = step.split
    hy = induced_subgraph(g, s.y | {s.a, s.b})
    # the Y side is G[Y ∪ {a, b}] with no marker
    assert hy.vertices == s.y | {s.a, s.b}
    # lists at a have Δ - |C_a| >= X-degree of a colours
    used_at_a = {c.edge_colours[e] for e in hy.incident_edges(s.a)}
    assert 4 - len(used_at_a) >= len(g.neighbours(s.a) & s.x)


def test_recursive_total_delta4_composed():
    g = fx.theta_pair_chain()
    trace = Trace(next_id=100)
    c = colour_recursive_total_delta4(g, 5, trace)
    _check_total(g, c)
    assert trace.steps and all(st.kind == "total>=4" for st in trace.steps)


def test_recursive_total_delta3_composed():
    g = fx.two_k23_glued()
    assert max_degree(g) == 3 and not is_2sparse(g)
    trace = Trace(next_id=100)
    c = colour_recursive_total_delta3(g, trace)
    _check_total(g, c)
    assert brute_force_total_chromatic(g) == 4


def test_delta3_contracted_shape():
    """a' and b' exist, differ and the contracted Y side keeps Δ = 3."""
    for seed in range(30):
        g = generate_chordless(40, seed, "composed")
        if max_degree(g) != 3 or is_2sparse(g):
            continue
        trace = Trace()
        c = total_colour_chordless(g, trace)
        _check_total(g, c)
        for st in trace.steps:
            s = st.split
            (a1,) = st.graph.neighbours(s.a) & s.y
            (b1,) = st.graph.neighbours(s.b) & s.y
            assert a1 != b1


def test_merge_articulation_blocks():
    g = fx.two_claws_sharing_leaf()
    c = merge_articulation_blocks(g, "edge")
    _check_edge(g, c)
    g = fx.two_k23_sharing_vertex()
    c = merge_articulation_blocks(g, "total", palette=5)
    assert verify_total_colouring(g, c).valid
    single = fx.complete_bipartite(2, 3)
    assert verify_edge_colouring(single, merge_articulation_blocks(single, "edge")).valid


def _corpus():
    for profile in ("sparse", "composed"):
        for n in (12, 25, 60):
            for seed in range(3):
                yield generate_chordless(n, seed, profile)


@pytest.mark.parametrize("g", list(_corpus()), ids=lambda g: f"n{len(g)}m{g.m}")
def test_corpus_traces(g):
    for mode, fn, check in (("edge", edge_colour_chordless, _check_edge), ("total", total_colour_chordless, _check_total)):
        trace = Trace()
        check(g, fn(g, trace))
        assert len(trace.steps) <= len(g)
        for st in trace.steps:
            s = st.split
            bx, _ = build_blocks(st.graph, s)
            assert is_2sparse(bx.graph)
            assert len(st.graph.neighbours(s.a) & s.x) >= 2
            assert len(st.graph.neighbours(s.b) & s.x) >= 2
            assert len(st.graph) <= len(g) + len(trace.steps)
