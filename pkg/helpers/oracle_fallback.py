import logging

from state import ExtractionState
from constructive.trace import Branch, Found
from core.errors import ExtractionFailed, SearchBudgetExceeded
from oracle.berge import SearchStatus, search_berge_cycle

logger = logging.getLogger(__name__)


def oracle_fallback(state: ExtractionState):
    """Exact search on the frame's hypergraph when no constructive branch applies"""

    frame, length = state["frame"], state["length"]
    logger.warning("length %d: falling back to the exact search", length)

    result = search_berge_cycle(frame.base, length, cap=state["cap"])
    if result.status is SearchStatus.UNKNOWN:
        raise SearchBudgetExceeded(result.nodes)
    if result.status is SearchStatus.ABSENT:
        raise ExtractionFailed(f"the hypergraph has no Berge cycle of length {length}")

    note = state["note"] or f"fallback after {', '.join(state['attempts']) or 'no attempts'}"
    return {
        "found": Found(branch=Branch.ORACLE_FALLBACK, witness=result.witness),
        "attempts": ["oracle"],
        "note": note,
    }
