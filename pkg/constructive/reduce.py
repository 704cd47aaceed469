"""Shrinking the extra edges at position 0 until they cover exactly r+1 vertices."""

import logging
from math import ceil

from pydantic import BaseModel, ConfigDict

from core.bits import bits
from constructive.chords import chord_to_cycle, find_k_chord
from oracle.berge import BergeCycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


class Case4Reduction(BaseModel):
    '''Either a sub-family E'_0 of the extra edges at 0 with union of size r+1, or a chord cycle found on the way'''
    model_config = ConfigDict(frozen=True)

    edge_ids: tuple[int, ...] = ()
    union: int = 0
    subcase: str = ""
    removed: int | None = None
    cycle: BergeCycle | None = None


def _union(frame: HamiltonianFrame, ids) -> int:
    mask = 0
    for f in ids:
        mask |= frame.edge_mask(f)
    return mask


def _removal_order(frame: HamiltonianFrame, k: int, ids: list[int], union: int) -> tuple[str, list[int]]:
    n = frame.n
    members = bits(union)
    starts = [i for i in members if union >> ((i + k) % n) & 1]
    T = sorted({v for i in starts for v in (i, (i + k) % n)})

    preferred = []
    if len(T) == 3:
        # a chain i, i+k, i+2k: drop the middle vertex
        middle = [v for v in T if (v - k) % n in T and (v + k) % n in T]
        preferred = middle[:1]
        subcase = "|T|=3"
    elif len(T) == 2:
        holders = {v: sum(1 for f in ids if frame.edge_mask(f) >> v & 1) for v in T}
        preferred = [min(T, key=lambda v: (holders[v], v))]
        subcase = "|T|=2"
    else:
        subcase = f"|T|={len(T)}"

    rest = [v for v in members if v != 0 and v not in preferred]
    return subcase, preferred + rest


def case4_reduce(frame: HamiltonianFrame, k: int) -> Case4Reduction | None:
    '''
        Sub-family of the extra edges at position 0 covering exactly r+1
        vertices. A k-chord inside them short-circuits into a cycle. None
        means the frame gives no reduction here; the shift lemma in this frame,
        its reflection or after a swap must then already give the cycle.
    '''
    n, r = frame.n, frame.r
    E0 = list(frame.extra_at(0))
    hit = find_k_chord(frame, k, E0)
    if hit is not None:
        i, f = hit
        return Case4Reduction(subcase="chord", cycle=chord_to_cycle(frame, i, k, f))

    union = frame.union_at(0)
    star = E0
    if union.bit_count() > r + 2:
        if not union >> 1 & 1:
            logger.debug("case 4: |U_0|=%d without position 1", union.bit_count())
            return None
        e = min(f for f in E0 if frame.edge_mask(f) >> 1 & 1)
        star = [f for f in E0 if f != e]
        union = _union(frame, star)
        if union.bit_count() > r + 2:
            logger.debug("case 4: |U*_0| stays at %d after dropping edge %d", union.bit_count(), e)
            return None

    floor = max(3, ceil((len(E0) - 1) / 2))
    if union.bit_count() == r + 1:
        if len(star) < 3:
            return None
        return Case4Reduction(edge_ids=tuple(star), union=union, subcase="|U*|=r+1")
    if union.bit_count() != r + 2:
        return None

    subcase, order = _removal_order(frame, k, star, union)
    for x in order:
        kept = [f for f in star if not frame.edge_mask(f) >> x & 1]
        covered = _union(frame, kept)
        if covered.bit_count() == r + 1 and len(kept) >= 3:
            if len(kept) < floor:
                logger.debug("case 4: dropping vertex %d keeps %d edges, below %d", x, len(kept), floor)
                continue
            logger.debug("case 4: %s, dropped vertex %d, kept %d edges", subcase, x, len(kept))
            return Case4Reduction(edge_ids=tuple(kept), union=covered, subcase=subcase, removed=x)
    return None
