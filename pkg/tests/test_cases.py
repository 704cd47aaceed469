import pytest

from core.errors import HypothesesNotMet
from core.thresholds import Regime
from constructive.cases import case2_extract, case3_extract, check_hypotheses, mainsmall_extract, two_cycle
from constructive.endgame import arc, case4_endgame
from constructive.half import alternating_edge, case2_cycle
from constructive.reduce import case4_reduce
from constructive.trace import Branch
from oracle.berge import validate_berge_cycle
from tests.builders import identity_frame, windows

EVENS = [0, 2, 4, 6, 8]


@pytest.fixture
def ten_frame():
    return identity_frame(10, 5, [EVENS])


@pytest.fixture
def odd_j_frame():
    # e_0 reaches position 3, so the first usable j is odd
    return identity_frame(10, 5, [EVENS], cycle_edges=[[0, 1, 3, 5, 7]] + windows(10, 5)[1:])


@pytest.fixture
def half_ssc_frame():
    return identity_frame(10, 4, [[0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4]])


def test_hubs_in_the_half_regime():
    hyp = check_hypotheses(identity_frame(6, 3, [[0, 2, 4]]))
    assert hyp.regime is Regime.HALF
    assert hyp.hubs == (0, 2, 4)


def test_odd_regime_needs_six_extra_edges():
    fan = [[0, 1, 3], [0, 1, 4], [0, 1, 5], [0, 2, 3], [0, 2, 4], [0, 2, 5]]
    hyp = check_hypotheses(identity_frame(7, 3, fan))
    assert hyp.regime is Regime.ODD
    assert hyp.hubs == (0,)
    with pytest.raises(HypothesesNotMet) as info:
        check_hypotheses(identity_frame(7, 3, fan[:5]))
    assert (info.value.vertex, info.value.count, info.value.required) == (0, 5, 6)


def test_unmet_hypotheses_name_the_vertex():
    with pytest.raises(HypothesesNotMet) as info:
        check_hypotheses(identity_frame(10, 5, []))
    assert info.value.vertex == 0
    assert info.value.count == 0
    assert info.value.required == 1
    assert "HALF" in info.value.clause


@pytest.mark.parametrize(
    "n, r, needle",
    [(6, 2, "below 3"), (12, 3, "no pancyclicity theorem"), (9, 3, "n >= 19")],
)
def test_uncovered_shapes(n, r, needle):
    with pytest.raises(HypothesesNotMet) as info:
        check_hypotheses(identity_frame(n, r, []))
    assert needle in str(info.value)
    assert info.value.vertex is None


def test_two_cycle_from_consecutive_windows():
    frame = identity_frame(6, 3, [])
    found = two_cycle(frame)
    assert found.branch is Branch.TWO_CYCLE
    assert found.witness.vertices == (0, 1)
    assert validate_berge_cycle(frame.base, found.witness).ok


def test_alternating_edge(ten_frame):
    assert alternating_edge(ten_frame, 10) == 0
    assert alternating_edge(ten_frame, 0) is None
    shifted = identity_frame(10, 5, [[1, 3, 5, 7, 9]])
    assert alternating_edge(shifted, 10) == 1


@pytest.mark.parametrize("length", [4, 6, 8])
def test_case2_even_j(ten_frame, length):
    found = case2_cycle(ten_frame, 10, length)
    assert found.branch is Branch.CASE2_EVEN
    assert found.witness.length == length
    assert validate_berge_cycle(ten_frame.base, found.witness).ok


def test_case2_even_j_shape(ten_frame):
    found = case2_cycle(ten_frame, 10, 4)
    assert found.witness.vertices == (0, 2, 8, 9)
    assert found.witness.edge_ids == (0, 10, 8, 9)


def test_case2_odd_j(odd_j_frame):
    found = case2_cycle(odd_j_frame, 10, 4)
    assert found.branch is Branch.CASE2_ODD
    assert found.witness.vertices == (1, 2, 4, 3)
    assert found.witness.edge_ids == (1, 10, 3, 0)
    assert validate_berge_cycle(odd_j_frame.base, found.witness).ok


@pytest.mark.parametrize("length", [3, 5, 10, 2])
def test_case2_only_even_lengths_below_n_minus_one(ten_frame, length):
    assert case2_cycle(ten_frame, 10, length) is None


def test_case2_driver_order(ten_frame):
    tried = []
    found = case2_extract(ten_frame, 5, (0, 2, 4, 6, 8), tried)
    assert found.branch is Branch.CHORD
    assert tried == ["chord"]

    tried = []
    found = case2_extract(ten_frame, 6, (0, 2, 4, 6, 8), tried)
    assert found.branch is Branch.SHIFT
    assert tried == ["chord", "shift"]
    assert validate_berge_cycle(ten_frame.base, found.witness).ok


def test_arc_wraps():
    assert arc(8, 1, 10) == [8, 9, 0, 1]
    assert arc(3, 3, 10) == [3]


def test_reduce_keeps_a_tight_union(half_ssc_frame):
    red = case4_reduce(half_ssc_frame, 5)
    assert red.subcase == "|U*|=r+1"
    assert red.edge_ids == (10, 11, 12)
    assert red.union == 0b11111
    assert red.cycle is None


def test_reduce_short_circuits_on_a_chord(half_ssc_frame):
    red = case4_reduce(half_ssc_frame, 4)
    assert red.subcase == "chord"
    assert red.cycle.length == 5
    assert validate_berge_cycle(half_ssc_frame.base, red.cycle).ok


def test_endgame_when_k_is_half_of_n(half_ssc_frame):
    red = case4_reduce(half_ssc_frame, 5)
    found = case4_endgame(half_ssc_frame, 5, red)
    assert found.branch is Branch.SSC_HALF
    assert found.witness.vertices == (0, 1, 3, 4, 5, 2)
    assert found.witness.edge_ids[:4] == (0, 11, 3, 4)
    assert validate_berge_cycle(half_ssc_frame.base, found.witness).ok


def test_reduce_skips_removals_that_keep_too_few_edges():
    # eight extra edges on 0..5: dropping 1 or 2 keeps three, under ceil(7/2)
    extra = [[0, 2, 4, 5], [0, 2, 3, 5], [0, 2, 3, 4], [0, 1, 4, 5],
             [0, 1, 3, 5], [0, 1, 3, 4], [0, 1, 2, 5], [0, 1, 2, 4]]
    frame = identity_frame(14, 4, extra)
    red = case4_reduce(frame, 7)
    assert red.subcase == "|T|=0"
    assert red.removed == 3
    assert red.edge_ids == (14, 17, 20, 21)
    assert red.union == 0b110111


def test_swap_puts_a_consecutive_pair_on_the_cycle():
    # {0, 1, 5} has no 2-chord and no shift at hub 0, but swapping it in for e_0 frees {0, 1, 2}
    frame = identity_frame(8, 3, [[0, 1, 5]])
    tried = []
    found = case3_extract(frame, 3, (0,), tried)
    assert found.branch is Branch.SWAP
    assert tried == ["chord", "shift", "swap"]
    assert found.witness.vertices == (0, 1, 2)
    assert found.witness.edge_ids == (8, 1, 0)
    assert validate_berge_cycle(frame.base, found.witness).ok


def test_small_driver_falls_through_to_a_modified_graph():
    # G is the bare 10-cycle; moving e_0 onto 02 closes the triangle 0 1 2
    frame = identity_frame(10, 3, [[0, 1, 4], [0, 1, 5], [0, 1, 7], [0, 4, 7]])
    tried = []
    found = mainsmall_extract(frame, 3, (), tried)
    assert found.branch is Branch.COMPAT_LIFT
    assert tried == ["chord", "shift", "compat", "compat-modified"]
    assert found.witness.vertices == (0, 1, 2)
    assert found.witness.edge_ids[1:] == (1, 0)
    assert found.witness.edge_ids[0] in (9, 10, 11, 12)
    assert validate_berge_cycle(frame.base, found.witness).ok
