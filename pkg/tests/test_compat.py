import random

import pytest
from hypothesis import assume, given, strategies as st

from constructions.sampler import sample_frame
from core.errors import MatchingFailed, PreconditionViolated
from core.graphs import SimpleGraph
from constructive.compat import (
    CompatGraph,
    build_compat_graph,
    check_compat_graph,
    lift_graph_cycle,
    modified_compat_graphs,
    triangle_free,
)
from oracle.berge import validate_berge_cycle
from oracle.graph_cycles import graph_cycle_of_length
from tests.builders import identity_frame
from tests.settings import ACCEPTANCE_SETTINGS, ADVERSARIAL_SETTINGS, SEARCH_SETTINGS

# three extra edges through 0 and 5 make 05 a free edge
FAN = [[0, 1, 5], [0, 2, 5], [0, 3, 5]]


def test_no_extras_gives_the_hamiltonian_cycle():
    frame = identity_frame(8, 3, [])
    G = build_compat_graph(frame)
    assert G.free_edges == ()
    graph = G.graph()
    assert all(graph.degree(v) == 2 for v in range(8))
    assert check_compat_graph(frame, G) == []
    assert lift_graph_cycle(frame, G, list(range(8))) == frame.cycle()


def test_high_codegree_pair_becomes_free():
    frame = identity_frame(10, 3, FAN)
    G = build_compat_graph(frame)
    assert G.free_edges == ((0, 5),)
    assert (0, 9, 9) in G.fixed_edges
    assert check_compat_graph(frame, G) == []


def test_lift_through_a_free_edge():
    frame = identity_frame(10, 3, FAN)
    G = build_compat_graph(frame)
    cycle = lift_graph_cycle(frame, G, [0, 1, 2, 3, 4, 5])
    assert cycle.edge_ids[:5] == (0, 1, 2, 3, 4)
    assert cycle.edge_ids[5] in (10, 11, 12)
    assert validate_berge_cycle(frame.base, cycle).ok


def test_lift_rejects_non_cycles():
    frame = identity_frame(10, 3, FAN)
    G = build_compat_graph(frame)
    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [0, 1])
    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [0, 2, 4])
    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [0, 1, 2, 1])


def test_free_edge_without_room_fails_to_lift():
    frame = identity_frame(10, 3, [])
    G = build_compat_graph(frame)
    forced = CompatGraph(n=10, fixed_edges=G.fixed_edges, free_edges=((0, 5),))
    assert check_compat_graph(frame, forced) == ["free edge (0, 5) has co-degree 0 < r outside phi*"]
    with pytest.raises(MatchingFailed):
        lift_graph_cycle(frame, forced, [0, 1, 2, 3, 4, 5])


def test_check_reports_bad_fixed_edges():
    frame = identity_frame(10, 3, FAN)
    G = build_compat_graph(frame)
    moved = [(x, y, 0 if (x, y) == (1, 2) else f) for x, y, f in G.fixed_edges]
    broken = CompatGraph(n=10, fixed_edges=tuple(moved), free_edges=G.free_edges)
    problems = check_compat_graph(frame, broken)
    assert "phi* is not injective" in problems
    assert "fixed edge (1, 2) is not inside edge 0" not in problems

    far = [(x, y, 5 if (x, y) == (1, 2) else f) for x, y, f in G.fixed_edges if (x, y) != (5, 6)]
    problems = check_compat_graph(frame, CompatGraph(n=10, fixed_edges=tuple(far), free_edges=()))
    assert "fixed edge (1, 2) is not inside edge 5" in problems


def test_triangle_free():
    assert triangle_free(SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)]))
    assert not triangle_free(SimpleGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))


def test_modified_graphs_keep_phi_inside_its_edges():
    frame = identity_frame(10, 3, [[0, 1, 4], [0, 1, 5], [0, 1, 7], [0, 4, 7]])
    G = build_compat_graph(frame)
    variants = list(modified_compat_graphs(frame, G))
    assert variants
    for G2 in variants:
        assert (0, 1) in G2.free_edges
        images = [f for _, _, f in G2.fixed_edges]
        assert len(set(images)) == len(images) == 10
        for x, y, f in G2.fixed_edges:
            assert frame.edge_mask(f) >> x & 1 and frame.edge_mask(f) >> y & 1


def _check_compat_cycles_lift(seed):
    rng = random.Random(seed)
    n = rng.randint(7, 11)
    frame = sample_frame(n, 3, rng.randint(8, 20), rng)
    G = build_compat_graph(frame)
    assert check_compat_graph(frame, G) == []
    graph = G.graph()
    for length in range(3, n + 1):
        D = graph_cycle_of_length(graph, length)
        if D is None:
            continue
        cycle = lift_graph_cycle(frame, G, D)
        assert cycle.length == length
        assert validate_berge_cycle(frame.base, cycle).ok


@given(st.integers(0, 10**6))
@SEARCH_SETTINGS
def test_every_compat_cycle_lifts(seed):
    _check_compat_cycles_lift(seed)


@pytest.mark.slow
@given(st.integers(0, 10**6))
@ACCEPTANCE_SETTINGS
def test_every_compat_cycle_lifts_on_a_thousand_frames(seed):
    _check_compat_cycles_lift(seed)


@pytest.mark.slow
@given(st.integers(0, 10**6))
@ADVERSARIAL_SETTINGS
def test_lift_refuses_broken_cycles(seed):
    rng = random.Random(seed)
    n = rng.randint(9, 14)
    frame = sample_frame(n, 3, rng.randint(1, 6), rng)
    G = build_compat_graph(frame)
    graph = G.graph()
    uncovered = [
        (x, y) for x in range(n) for y in range(x + 2, n) if not frame.base.covering_edges(x, y)
    ]
    assume(uncovered)
    x, y = rng.choice(uncovered)
    z = rng.choice([v for v in range(n) if v not in (x, y)])

    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [x, y])
    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [x, z, x, z])
    assert not graph.has_edge(x, y)
    with pytest.raises(PreconditionViolated):
        lift_graph_cycle(frame, G, [x, y, z])

    # declaring xy free does not conjure an edge for it
    forced = CompatGraph(n=n, fixed_edges=G.fixed_edges, free_edges=((x, y),))
    with pytest.raises(MatchingFailed):
        lift_graph_cycle(frame, forced, list(range(x, y + 1)))
