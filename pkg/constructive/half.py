"""Even-length cycles when r = n/2 and an extra edge holds every other position."""

import logging

from core.bits import iter_bits
from constructive.trace import Branch, Found
from oracle.berge import BergeCycle, validate_berge_cycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def alternating_edge(frame: HamiltonianFrame, f: int) -> int | None:
    '''0 if f is exactly the even positions, 1 if exactly the odd ones, else None'''
    n = frame.n
    if n % 2:
        return None
    evens = sum(1 << i for i in range(0, n, 2))
    edge = frame.edge_mask(f)
    if edge == evens:
        return 0
    if edge == evens << 1:
        return 1
    return None


def _even_j(frame: HamiltonianFrame, f: int, j: int, length: int) -> BergeCycle:
    n, e = frame.n, frame.e
    a = min(j - 2, length - 2)
    b = length - 2 - a
    down = list(range(j, j - a - 1, -1))
    tail = list(range(n - b, n))
    vertices = [0] + down + tail
    edges = [e(0)] + [e(t) for t in range(j - 1, j - a - 1, -1)] + [f] + [e(t) for t in tail]
    return BergeCycle(vertices=tuple(vertices), edge_ids=tuple(edges))


def _odd_j(frame: HamiltonianFrame, f: int, j: int, length: int) -> BergeCycle:
    n, e = frame.n, frame.e
    a = min(j - 1, length - 2)
    b = length - 1 - a
    front = list(range(1, a + 1))
    down = [t % n for t in range(j + b, j - 1, -1)]
    vertices = front + down
    edges = [e(t) for t in range(1, a)] + [f] + [e(t) for t in range(j + b - 1, j - 1, -1)] + [e(0)]
    return BergeCycle(vertices=tuple(vertices), edge_ids=tuple(edges))


def case2_cycle(frame: HamiltonianFrame, f: int, length: int) -> Found | None:
    '''
        Even length 4..n-2 from an extra edge f that holds exactly every other
        position. f is rotated onto the even positions, then e_0 is moved
        along the even rotations until it holds some j in 2..n-2.
    '''
    n = frame.n
    parity = alternating_edge(frame, f)
    if parity is None or length % 2 or not 4 <= length <= n - 2:
        return None

    base = frame.rotated(parity)
    for t in range(0, n, 2):
        view = base.rotated(t)
        e0 = view.edge_mask(view.e(0))
        j = next((x for x in iter_bits(e0) if 2 <= x <= n - 2), None)
        if j is None:
            continue
        if j % 2 == 0:
            cycle, branch = _even_j(view, f, j, length), Branch.CASE2_EVEN
        else:
            cycle, branch = _odd_j(view, f, j, length), Branch.CASE2_ODD
        if validate_berge_cycle(view.base, cycle).ok and cycle.length == length:
            logger.debug("case 2: j=%d in rotation %d", j, t + parity)
            return Found(branch=branch, witness=view.translate(cycle, frame))
    return None
