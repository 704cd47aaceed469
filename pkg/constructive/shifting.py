"""The shifting function S_s and the cycles it produces."""

import logging
from collections.abc import Iterable

from core.bits import iter_bits
from core.errors import OutOfRange, PreconditionViolated
from oracle.berge import BergeCycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def shift_map(i: int, s: int, n: int) -> int:
    if not (0 <= i < n and 0 <= s < n):
        raise OutOfRange(f"shift_map needs 0 <= i, s <= {n - 1}, got i={i}, s={s}")
    if i + s <= n - 1:
        return i + s
    return (i + s + 1) % n


def shift_set(A: Iterable[int], s: int, n: int) -> set[int]:
    return {(a + s) % n for a in A}


def shift_image(A: Iterable[int], s: int, n: int) -> set[int]:
    return {shift_map(a, s, n) for a in A}


def shift_lemma_extract(frame: HamiltonianFrame, s: int, f: int, j: int) -> BergeCycle:
    '''
        Cycle of length n-s+1 from an extra edge f through 0 and j whose
        shifted vertex S_s(j) lies in e_0.
    '''
    n = frame.n
    if not 1 <= s <= n - 2:
        raise PreconditionViolated(f"shift {s} outside 1..{n - 2}")
    if f not in frame.extra_at(0):
        raise PreconditionViolated(f"edge {f} is not an extra edge through position 0")
    if not 0 <= j < n or not frame.edge_mask(f) >> j & 1:
        raise PreconditionViolated(f"position {j} is not in edge {f}")
    target = shift_map(j, s, n)
    if not frame.edge_mask(frame.e(0)) >> target & 1:
        raise PreconditionViolated(f"S_{s}({j}) = {target} is not in e_0")

    e = frame.e
    if j + s <= n - 1:
        if j == 0:
            vertices = [0] + list(range(s, n))
            edges = [e(0)] + [e(t) for t in range(s, n)]
        else:
            vertices = [0] + list(range(j, 0, -1)) + list(range(j + s, n))
            edges = [f] + [e(t) for t in range(j - 1, -1, -1)] + [e(t) for t in range(j + s, n)]
    else:
        q = j + s + 1 - n
        # q == 1 is the j = n-s collapse, covered by the same walk
        vertices = [0] + list(range(q, j + 1))
        edges = [e(0)] + [e(t) for t in range(q, j)] + [f]

    return BergeCycle(vertices=tuple(vertices), edge_ids=tuple(edges))


def try_shift_lemma(frame: HamiltonianFrame, k: int, scope: Iterable[int] | None = None) -> BergeCycle | None:
    '''Look for a (k+1)-cycle through an extra edge at position 0, with s = n - k'''
    n = frame.n
    s = n - k
    if not 1 <= s <= n - 2:
        return None
    allowed = set(frame.extra_at(0) if scope is None else scope) & set(frame.extra_at(0))
    e0 = frame.edge_mask(frame.e(0))
    for f in sorted(allowed):
        for j in iter_bits(frame.edge_mask(f)):
            if e0 >> shift_map(j, s, n) & 1:
                logger.debug("shift lemma: s=%d f=%d j=%d", s, f, j)
                return shift_lemma_extract(frame, s, f, j)
    return None
