'''
    Constructive attempts for one target length, grouped by the (n, r) regime.
    Every attempt returns a witness in the positions of the frame it was
    given, or None when its branch does not apply.
'''

import logging
from collections.abc import Callable, Iterator

from pydantic import BaseModel, ConfigDict

from config.config import settings
from core.errors import HypothesesNotMet, MatchingFailed, SearchBudgetExceeded
from core.thresholds import C_R, SMALL_MIN_N, Regime, classify_regime, small_extra_bar
from constructive.chords import chord_to_cycle, find_k_chord
from constructive.compat import (
    CompatGraph,
    build_compat_graph,
    lift_graph_cycle,
    modified_compat_graphs,
    triangle_free,
)
from constructive.endgame import case4_endgame
from constructive.half import case2_cycle
from constructive.reduce import case4_reduce
from constructive.shifting import try_shift_lemma
from constructive.trace import Branch, Found
from oracle.berge import BergeCycle, validate_berge_cycle
from oracle.frame import HamiltonianFrame
from oracle.graph_cycles import graph_cycle_of_length

logger = logging.getLogger(__name__)

Attempt = tuple[str, Callable[[], Found | None]]


class Hypotheses(BaseModel):
    '''Which theorem applies to the frame, and the positions its argument may start from'''
    model_config = ConfigDict(frozen=True)

    regime: Regime
    hubs: tuple[int, ...]


def check_hypotheses(frame: HamiltonianFrame) -> Hypotheses:
    n, r = frame.n, frame.r
    regime = classify_regime(n, r)
    if r < 3:
        raise HypothesesNotMet(f"uniformity r={r} is below 3")
    counts = [len(frame.extra_at(i)) for i in range(n)]

    if regime in C_R:
        bar = C_R[regime]
        hubs = sorted((i for i in range(n) if counts[i] >= bar), key=lambda i: (-counts[i], i))
        if not hubs:
            best = min(range(n), key=lambda i: (-counts[i], frame.labels[i]))
            raise HypothesesNotMet(
                f"{regime} regime (n={n}, r={r}) needs some vertex in c_r={bar} extra edges",
                frame.labels[best], counts[best], bar,
            )
        return Hypotheses(regime=regime, hubs=tuple(hubs))

    if regime is Regime.SMALL:
        if n < SMALL_MIN_N:
            raise HypothesesNotMet(f"SMALL regime needs n >= {SMALL_MIN_N}, got n={n}")
        bar = small_extra_bar(r)
        short = [i for i in range(n) if counts[i] < bar]
        if short:
            worst = min(short, key=lambda i: frame.labels[i])
            raise HypothesesNotMet(
                f"SMALL regime (n={n}, r={r}) needs every vertex in 5(r-1)+2={bar} extra edges",
                frame.labels[worst], counts[worst], bar,
            )
        return Hypotheses(regime=regime, hubs=tuple(range(n)))

    raise HypothesesNotMet(f"no pancyclicity theorem covers n={n}, r={r}")


def _in(frame: HamiltonianFrame, view: HamiltonianFrame, found: Found | None) -> Found | None:
    if found is None or view is frame:
        return found
    return Found(branch=found.branch, witness=view.translate(found.witness, frame))


def two_cycle(frame: HamiltonianFrame) -> Found | None:
    H = frame.base
    for u in range(frame.n):
        for v in range(u + 1, frame.n):
            cover = H.covering_edges(u, v)
            if len(cover) >= 2:
                cycle = BergeCycle(vertices=(u, v), edge_ids=(cover[0], cover[1]))
                return Found(branch=Branch.TWO_CYCLE, witness=cycle)
    return None


def chord_attempt(frame: HamiltonianFrame, length: int) -> Found | None:
    k = length - 1
    hit = find_k_chord(frame, k)
    if hit is None:
        return None
    i, f = hit
    return Found(branch=Branch.CHORD, witness=chord_to_cycle(frame, i, k, f))


def _views(frame: HamiltonianFrame, hubs) -> Iterator[HamiltonianFrame]:
    for h in hubs:
        view = frame.rotated(h)
        yield view
        yield view.reflected()


def shift_attempt(frame: HamiltonianFrame, length: int, hubs) -> Found | None:
    for view in _views(frame, hubs):
        cycle = try_shift_lemma(view, length - 1)
        if cycle is not None:
            return _in(frame, view, Found(branch=Branch.SHIFT, witness=cycle))
    return None


def swap_attempt(frame: HamiltonianFrame, length: int, hubs) -> Found | None:
    '''Put an extra edge holding a consecutive pair on the cycle, then look again'''
    n, k = frame.n, length - 1
    for h in hubs:
        for f in frame.extra_at(h):
            edge = frame.edge_mask(f)
            for i in (h, (h - 1) % n):
                if not edge >> ((i + 1) % n) & 1 or not edge >> i & 1:
                    continue
                swapped = frame.rotated(i).with_cycle_edge(0, f)
                hit = find_k_chord(swapped, k, [frame.e(i)])
                if hit is not None:
                    cycle = chord_to_cycle(swapped, hit[0], k, hit[1])
                    return _in(frame, swapped, Found(branch=Branch.SWAP, witness=cycle))
                # the hub sits at 0 or 1 of the swapped frame; both views keep f as e_0
                for view in (swapped, swapped.rotated(1).reflected()):
                    cycle = try_shift_lemma(view, k)
                    if cycle is not None:
                        return _in(frame, view, Found(branch=Branch.SWAP, witness=cycle))
    return None


def run_attempts(attempts: list[Attempt], tried: list[str]) -> Found | None:
    for name, attempt in attempts:
        tried.append(name)
        found = attempt()
        if found is not None:
            logger.info("branch %s via %s", found.branch, name)
            return found
    return None


def big_r_attempts(frame: HamiltonianFrame, length: int, hubs) -> list[Attempt]:
    return [
        ("chord", lambda: chord_attempt(frame, length)),
        ("shift", lambda: shift_attempt(frame, length, hubs)),
        ("swap", lambda: swap_attempt(frame, length, hubs)),
    ]


def case1_extract(frame: HamiltonianFrame, length: int, hubs, tried: list[str]) -> Found | None:
    return run_attempts(big_r_attempts(frame, length, hubs), tried)


def case2_extract(frame: HamiltonianFrame, length: int, hubs, tried: list[str]) -> Found | None:
    def even_odd():
        for f in frame.extra_edge_ids:
            found = case2_cycle(frame, f, length)
            if found is not None:
                return found
        return None

    return run_attempts(big_r_attempts(frame, length, hubs) + [("case2", even_odd)], tried)


def case3_extract(frame: HamiltonianFrame, length: int, hubs, tried: list[str]) -> Found | None:
    return run_attempts(big_r_attempts(frame, length, hubs), tried)


def _case4_endgame_attempt(frame: HamiltonianFrame, length: int, hubs) -> Found | None:
    k = length - 1
    for view in _views(frame, hubs):
        red = case4_reduce(view, k)
        if red is None:
            continue
        if red.cycle is not None:
            return _in(frame, view, Found(branch=Branch.CHORD, witness=red.cycle))
        found = case4_endgame(view, k, red)
        if found is not None:
            return _in(frame, view, found)
    return None


def case4_extract(frame: HamiltonianFrame, length: int, hubs, tried: list[str]) -> Found | None:
    attempts = big_r_attempts(frame, length, hubs)
    attempts.append(("reduce+endgame", lambda: _case4_endgame_attempt(frame, length, hubs)))
    return run_attempts(attempts, tried)


def _lift_from(frame: HamiltonianFrame, G: CompatGraph, length: int) -> Found | None:
    try:
        D = graph_cycle_of_length(G.graph(), length, settings.graph_cycle_cap)
    except SearchBudgetExceeded:
        logger.warning("compat graph cycle search for length %d hit its cap", length)
        return None
    if D is None:
        return None
    try:
        cycle = lift_graph_cycle(frame, G, D)
    except MatchingFailed as exc:
        logger.debug("lift of %s failed: %s", D, exc)
        return None
    if not validate_berge_cycle(frame.base, cycle).ok:
        return None
    return Found(branch=Branch.COMPAT_LIFT, witness=cycle)


def mainsmall_extract(frame: HamiltonianFrame, length: int, hubs, tried: list[str]) -> Found | None:
    G = build_compat_graph(frame)

    def lift():
        return _lift_from(frame, G, length)

    def modified():
        if not triangle_free(G.graph()):
            return None
        for G2 in modified_compat_graphs(frame, G):
            found = _lift_from(frame, G2, length)
            if found is not None:
                return found
        return None

    attempts = [
        ("chord", lambda: chord_attempt(frame, length)),
        ("shift", lambda: shift_attempt(frame, length, hubs)),
        ("compat", lift),
        ("compat-modified", modified),
    ]
    return run_attempts(attempts, tried)

