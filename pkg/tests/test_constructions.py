import random

import pytest
from hypothesis import given, strategies as st

from constructions.generators import (
    ConstructionKind,
    ConstructionSpec,
    construction1,
    construction2,
    construction3,
    construction4,
    tight_cycle,
)
from constructions import sampler
from constructions.sampler import sample_frame, sample_hypergraph, sample_hypothesis_frame, sample_star_frame
from core.errors import BadParameters
from core.hypergraph import degree, min_degree
from core.thresholds import degree_threshold
from constructive.cases import check_hypotheses
from oracle.berge import validate_berge_cycle
from oracle.frame import find_hamiltonian_frame
from tests.settings import QUICK_SETTINGS, STANDARD_SETTINGS


@pytest.mark.parametrize(
    "build",
    [
        lambda: construction1(7, 3),
        lambda: construction1(8, 3),
        lambda: construction1(8, 3, bridge=True),
        lambda: construction2(7, 3),
        lambda: construction2(8, 3),
        lambda: construction2(8, 3, extra=True),
        lambda: construction3(6, 3),
        lambda: construction3(7, 4),
    ],
)
def test_one_below_the_threshold_and_not_hamiltonian(build):
    H = build()
    assert min_degree(H) == degree_threshold(H.n, H.r) - 1
    assert find_hamiltonian_frame(H) is None


def test_two_cliques_share_one_vertex_when_n_is_odd():
    H = construction1(7, 3)
    assert H.m == 8
    assert degree(H, 3) == 6
    assert all(degree(H, v) == 3 for v in range(7) if v != 3)


def test_bridge_joins_the_halves():
    H = construction1(8, 3, bridge=True)
    assert H.m == 9
    assert H.edge_set(8) == [0, 1, 4]


def test_split_construction_edges():
    H = construction2(8, 3)
    assert H.m == 1 + 5 * 3
    assert all(degree(H, v) == 3 for v in range(3, 8))
    extra = construction2(8, 3, extra=True)
    assert extra.edge_set(extra.m - 1) == [0, 3, 4]


def test_tight_cycle_minus_first_window():
    H = construction3(6, 3)
    assert H.m == 5
    assert [degree(H, v) for v in range(6)] == [2, 2, 2, 3, 3, 3]


def test_clique_necklace_shape():
    H = construction4(4, 3)
    assert (H.n, H.m, H.r) == (12, 16, 3)
    assert [degree(H, v) for v in range(4)] == [6, 3, 3, 6]
    assert find_hamiltonian_frame(H) is not None


@pytest.mark.parametrize(
    "build",
    [
        lambda: construction1(7, 4),
        lambda: construction1(7, 3, bridge=True),
        lambda: construction2(7, 3, extra=True),
        lambda: construction3(8, 3),
        lambda: construction4(2, 3),
        lambda: construction4(3, 2),
        lambda: tight_cycle(5, 5),
        lambda: tight_cycle(70, 3),
        lambda: construction1(40, 10),
    ],
)
def test_bad_parameters(build):
    with pytest.raises(BadParameters):
        build()


def test_construction_spec_dispatch():
    assert ConstructionSpec(kind=ConstructionKind.CLIQUE_NECKLACE, r=3, k=4).build().n == 12
    assert ConstructionSpec(kind="tight-cycle", n=6, r=3).build().edges == tight_cycle(6, 3).edges
    with pytest.raises(BadParameters):
        ConstructionSpec(kind="c1", r=3).build()
    with pytest.raises(BadParameters):
        ConstructionSpec(kind="c4", r=3).build()


@given(st.integers(0, 10**6), st.sampled_from([(7, 3), (8, 3), (9, 4), (10, 5), (10, 4), (12, 8)]))
@QUICK_SETTINGS
def test_sampled_frames_meet_the_hypotheses(seed, shape):
    n, r = shape
    frame = sample_hypothesis_frame(n, r, random.Random(seed))
    assert (frame.n, frame.r) == shape
    check_hypotheses(frame)
    assert validate_berge_cycle(frame.base, frame.cycle()).ok


@pytest.mark.slow
def test_small_regime_sample_meets_the_hypotheses():
    frame = sample_hypothesis_frame(19, 8, random.Random(7))
    hyp = check_hypotheses(frame)
    assert hyp.hubs == tuple(range(19))


def test_no_hypotheses_no_sample():
    with pytest.raises(BadParameters):
        sample_hypothesis_frame(30, 3, random.Random(0))
    with pytest.raises(BadParameters):
        sample_hypothesis_frame(11, 2, random.Random(0))
    with pytest.raises(BadParameters):
        sample_hypothesis_frame(13, 5, random.Random(0))


@given(st.integers(0, 10**6), st.integers(7, 12), st.integers(0, 6))
@STANDARD_SETTINGS
def test_star_frames(seed, n, c):
    frame = sample_star_frame(n, c, random.Random(seed))
    assert frame.r == (n - 1) // 2
    assert len(frame.extra_edge_ids) == c
    if c:
        assert max(len(frame.extra_at(i)) for i in range(n)) == c


@given(st.integers(0, 10**6), st.integers(7, 12))
@STANDARD_SETTINGS
def test_sampled_degree(seed, n):
    H = sample_hypergraph(n, 3, 5, random.Random(seed))
    assert min_degree(H) >= 5
    frame = sample_frame(n, 3, 4, random.Random(seed))
    assert len(frame.extra_edge_ids) == 4


def test_full_degree_sample_is_the_complete_hypergraph(monkeypatch):
    def through(self, v):
        raise AssertionError("degree samples draw from every r-set, not through one vertex")

    monkeypatch.setattr(sampler._Builder, "add_through", through)
    H = sample_hypergraph(7, 3, 15, random.Random(5))
    assert H.m == 35
    assert min_degree(H) == 15


def test_samples_repeat_under_one_seed():
    first = sample_hypergraph(9, 4, 8, random.Random(3))
    assert first.edges == sample_hypergraph(9, 4, 8, random.Random(3)).edges
