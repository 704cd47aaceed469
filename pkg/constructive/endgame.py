"""Cycles of length k+1 built from a k-SSC union of r+1 = n/2 positions."""

import logging
from math import gcd

from core.bits import bits
from core.errors import MatchingFailed, PreconditionViolated
from constructive.matching import match_pairs_to_edges
from constructive.reduce import Case4Reduction
from constructive.ssc import is_k_ssc
from constructive.trace import Branch, Found
from oracle.berge import BergeCycle, validate_berge_cycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def arc(a: int, b: int, n: int) -> list[int]:
    '''Positions a, a+1, ..., b walking forward mod n'''
    a, b = a % n, b % n
    return [(a + t) % n for t in range((b - a) % n + 1)]


def _pairs_to_edges(frame, pairs, red) -> list[int] | None:
    try:
        return match_pairs_to_edges(frame, pairs, red.edge_ids)
    except (MatchingFailed, PreconditionViolated) as exc:
        logger.debug("endgame pairs %s: %s", pairs, exc)
        return None


def _accept(frame: HamiltonianFrame, vertices, edges, length: int) -> BergeCycle | None:
    cycle = BergeCycle(vertices=tuple(vertices), edge_ids=tuple(edges))
    if cycle.length != length or not validate_berge_cycle(frame.base, cycle).ok:
        return None
    return cycle


def _mpd_cycle(frame, k, A, red) -> BergeCycle | None:
    n = frame.n
    m = next(t for t in range(1, n + 1) if (k - t) % n in A)
    p = next(t for t in range(1, n + 1) if (k + t) % n in A)
    start, left, right = (-(m - 1)) % n, (k - m) % n, (k + p) % n
    if len({start, left, right}) != 3:
        return None
    path = arc(start, left, n)
    if right in path:
        return None
    chosen = _pairs_to_edges(frame, [(left, right), (right, start)], red)
    if chosen is None:
        return None
    edges = [frame.e(t) for t in path[:-1]] + chosen
    return _accept(frame, path + [right], edges, k + 1)


def _intervals_cycle(frame, k, A, red) -> BergeCycle | None:
    n = frame.n
    d = gcd(n, k)
    if d < 3:
        return None
    for i in range(n):
        if not all((i + t) % n in A for t in range(d)):
            continue
        jump_from, jump_to = (i + 2 * d) % n, (i + 2 * d + 2) % n
        if jump_from not in A or jump_to not in A:
            continue
        chosen = _pairs_to_edges(frame, [(i, (i + d - 1) % n), (jump_from, jump_to)], red)
        if chosen is None:
            continue
        first = arc(i + d - 1, i + 2 * d, n)
        second = arc(i + 2 * d + 2, i - 1, n)
        vertices = [i] + first + second
        edges = [chosen[0]] + [frame.e(t) for t in first[:-1]] + [chosen[1]] + [frame.e(t) for t in second]
        cycle = _accept(frame, vertices, edges, k + 1)
        if cycle is not None:
            return cycle
    return None


def _half_cycle_in(frame: HamiltonianFrame, k: int, red: Case4Reduction) -> BergeCycle | None:
    '''The union sits on positions 0..k-1 of this frame and k = n/2'''
    for j in range(1, k - 1):
        outside = [x for x in bits(frame.edge_mask(frame.e(j))) if x >= k]
        for x in outside:
            s = x - k
            for t in range(max(0, j - s - 1), min(j - 1, k - 3 - s) + 1):
                chosen = _pairs_to_edges(frame, [(t, t + s + 2), (j, 0)], red)
                if chosen is None:
                    continue
                walk = arc(t + s + 2, k + s, frame.n)
                vertices = list(range(t + 1)) + walk + [j]
                edges = (
                    [frame.e(q) for q in range(t)]
                    + [chosen[0]]
                    + [frame.e(q) for q in walk[:-1]]
                    + [frame.e(j), chosen[1]]
                )
                cycle = _accept(frame, vertices, edges, k + 1)
                if cycle is not None:
                    return cycle
    return None


def _half_cycle(frame, k, A, red) -> BergeCycle | None:
    n = frame.n
    start = next((a for a in range(n) if all((a + t) % n in A for t in range(k))), None)
    if start is None:
        return None
    front = frame.rotated(start)
    back = front.reflected_about(0, k - 1)
    for view in (front, back):
        cycle = _half_cycle_in(view, k, red)
        if cycle is not None:
            return view.translate(cycle, frame)
    return None


def case4_endgame(frame: HamiltonianFrame, k: int, red: Case4Reduction) -> Found | None:
    n = frame.n
    A = set(bits(red.union))
    if not is_k_ssc(A, k, n):
        return None

    cycle = _mpd_cycle(frame, k, A, red)
    if cycle is not None:
        return Found(branch=Branch.SSC_MPD, witness=cycle)
    if 2 * k != n:
        cycle = _intervals_cycle(frame, k, A, red)
        if cycle is not None:
            return Found(branch=Branch.SSC_INTERVALS, witness=cycle)
        return None
    cycle = _half_cycle(frame, k, A, red)
    if cycle is not None:
        return Found(branch=Branch.SSC_HALF, witness=cycle)
    return None
