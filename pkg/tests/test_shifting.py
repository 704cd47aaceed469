import random

import pytest
from hypothesis import given, strategies as st

from constructions.sampler import sample_frame
from core.errors import OutOfRange, PreconditionViolated
from constructive.shifting import shift_image, shift_lemma_extract, shift_map, shift_set, try_shift_lemma
from oracle.berge import validate_berge_cycle
from tests.builders import identity_frame
from tests.settings import ACCEPTANCE_SETTINGS, SEARCH_SETTINGS, STANDARD_SETTINGS


def test_shift_map_examples():
    assert shift_map(2, 3, 10) == 5
    assert shift_map(8, 3, 10) == 2
    assert shift_map(0, 3, 10) == shift_map(9, 3, 10) == 3


def test_shift_map_range():
    with pytest.raises(OutOfRange):
        shift_map(10, 3, 10)
    with pytest.raises(OutOfRange):
        shift_map(2, 10, 10)


def test_shift_set_examples():
    assert shift_set({0, 2}, 0, 10) == {0, 2}
    assert shift_set({0}, 3, 10) == {3}
    A = {0, 4, 8, 12, 16, 1, 5, 9, 13, 17}
    assert not shift_set(A, 6, 20) & A


@given(st.integers(2, 30), st.data())
@STANDARD_SETTINGS
def test_shift_image_loses_at_most_the_wrap_collision(n, data):
    A = data.draw(st.sets(st.integers(0, n - 1)))
    s = data.draw(st.integers(1, n - 1))
    image = shift_image(A, s, n)
    assert len(image) >= len(A) - 1
    assert (len(image) == len(A) - 1) == ({0, n - 1} <= A)


@pytest.mark.slow
def test_shift_image_ten_thousand_triples():
    rng = random.Random(22)
    for _ in range(10_000):
        n = rng.randint(2, 30)
        A = {i for i in range(n) if rng.random() < 0.5}
        s = rng.randint(1, n - 1)
        size = len(shift_image(A, s, n))
        assert size >= len(A) - 1
        assert (size == len(A) - 1) == ({0, n - 1} <= A)


def ten_frame():
    # tight windows of size 5 and one extra edge on the even positions
    return identity_frame(10, 5, [[0, 2, 4, 6, 8]])


def test_shift_lemma_case_one_collapse():
    frame = ten_frame()
    cycle = shift_lemma_extract(frame, 3, 10, 0)
    assert cycle.vertices == (0, 3, 4, 5, 6, 7, 8, 9)
    assert cycle.edge_ids == (0, 3, 4, 5, 6, 7, 8, 9)
    assert validate_berge_cycle(frame.base, cycle).ok


def test_shift_lemma_case_one_walks_back():
    frame = ten_frame()
    # S_2(2) = 4 lies in e_0 = {0, ..., 4}
    cycle = shift_lemma_extract(frame, 2, 10, 2)
    assert cycle.vertices == (0, 2, 1, 4, 5, 6, 7, 8, 9)
    assert cycle.edge_ids == (10, 1, 0, 4, 5, 6, 7, 8, 9)
    assert validate_berge_cycle(frame.base, cycle).ok


def test_shift_lemma_case_two():
    frame = ten_frame()
    # S_7(4) = 2 lies in e_0
    cycle = shift_lemma_extract(frame, 7, 10, 4)
    assert cycle.vertices == (0, 2, 3, 4)
    assert cycle.edge_ids == (0, 2, 3, 10)
    assert validate_berge_cycle(frame.base, cycle).ok


def test_shift_lemma_preconditions():
    frame = ten_frame()
    with pytest.raises(PreconditionViolated):
        shift_lemma_extract(frame, 0, 10, 0)
    with pytest.raises(PreconditionViolated):
        shift_lemma_extract(frame, 9, 10, 0)
    with pytest.raises(PreconditionViolated):
        shift_lemma_extract(frame, 3, 0, 0)
    with pytest.raises(PreconditionViolated):
        shift_lemma_extract(frame, 3, 10, 1)
    # S_5(2) = 7 is not in e_0
    with pytest.raises(PreconditionViolated):
        shift_lemma_extract(frame, 5, 10, 2)


def test_try_shift_lemma_respects_scope():
    frame = ten_frame()
    assert try_shift_lemma(frame, 7).length == 8
    assert try_shift_lemma(frame, 7, scope=[]) is None
    assert try_shift_lemma(frame, 1) is None


def _check_shift_lemma_cycles(seed):
    rng = random.Random(seed)
    n = rng.randint(6, 24)
    frame = sample_frame(n, rng.randint(3, n - 2), rng.randint(1, 6), rng)
    checked = 0
    for t in range(n):
        view = frame.rotated(t)
        e0 = view.edge_mask(view.e(0))
        for f in view.extra_at(0):
            for j in range(n):
                if not view.edge_mask(f) >> j & 1:
                    continue
                for s in range(1, n - 1):
                    if e0 >> shift_map(j, s, n) & 1:
                        cycle = shift_lemma_extract(view, s, f, j)
                        assert cycle.length == n - s + 1
                        assert validate_berge_cycle(view.base, cycle).ok
                        checked += 1
    assert checked > 0


@given(st.integers(0, 10**6))
@SEARCH_SETTINGS
def test_shift_lemma_cycles_validate(seed):
    _check_shift_lemma_cycles(seed)


@pytest.mark.slow
@given(st.integers(0, 10**6))
@ACCEPTANCE_SETTINGS
def test_shift_lemma_cycles_validate_on_a_thousand_frames(seed):
    _check_shift_lemma_cycles(seed)
