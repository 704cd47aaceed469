"""Entry points of the constructive engine: one length, or many."""

import logging
from collections.abc import Iterable

from core.errors import ExtractionFailed, LengthOutOfRange, SearchBudgetExceeded
from graph import app
from constructive.trace import ExtractionTrace, TraceRecord
from oracle.berge import SearchStatus
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def extract_length(
    frame: HamiltonianFrame,
    length: int,
    allow_fallback: bool = False,
    cap: int | None = None,
) -> TraceRecord:
    '''
        Berge cycle of the given length in the positions of the frame, with the
        branch that produced it. Raises HypothesesNotMet below the theorem's bar
        unless allow_fallback is set, and ExtractionFailed when nothing fired.
        cap bounds the fallback search; None uses the configured node cap.
    '''
    if not 2 <= length <= frame.n:
        raise LengthOutOfRange(f"length {length} outside 2..{frame.n}")

    initial_state = {
        "frame": frame,
        "length": length,
        "allow_fallback": allow_fallback,
        "cap": cap,
        "regime": "",
        "hubs": (),
        "attempts": [],
        "found": None,
        "note": "",
    }
    result = app.invoke(initial_state)

    found = result["found"]
    logger.info("length %d: %s after %d attempts", length, found.branch, len(result["attempts"]))
    return TraceRecord(
        length=length,
        branch=found.branch,
        witness=found.witness,
        attempts=tuple(result["attempts"]),
        note=result["note"],
    )


def extract_all(
    frame: HamiltonianFrame,
    lengths: Iterable[int] | None = None,
    allow_fallback: bool = False,
    cap: int | None = None,
) -> ExtractionTrace:
    '''
        One record per length. With allow_fallback a length the fallback search
        finds ABSENT, or gives up on under the cap, is kept in missing instead
        of stopping the run.
    '''
    if lengths is None:
        lengths = range(2, frame.n + 1)
    records, missing = [], []
    for length in lengths:
        try:
            records.append(extract_length(frame, length, allow_fallback, cap))
        except ExtractionFailed:
            if not allow_fallback:
                raise
            logger.warning("length %d: no Berge cycle of this length", length)
            missing.append((length, SearchStatus.ABSENT))
        except SearchBudgetExceeded as exc:
            if not allow_fallback:
                raise
            logger.warning("length %d: fallback search gave up after %d nodes", length, exc.nodes)
            missing.append((length, SearchStatus.UNKNOWN))
    trace = ExtractionTrace(records=tuple(records), missing=tuple(missing))
    if allow_fallback:
        logger.info("fallback used on %.0f%% of lengths", 100 * trace.fallback_fraction())
    return trace
