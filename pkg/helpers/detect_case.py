import logging

from state import ExtractionState
from constructive.cases import check_hypotheses
from core.errors import HypothesesNotMet

logger = logging.getLogger(__name__)


def detect_case(state: ExtractionState):
    """Decide which theorem covers the frame; unmet hypotheses either raise or hand over to the oracle"""

    try:
        hyp = check_hypotheses(state["frame"])
    except HypothesesNotMet as exc:
        if not state["allow_fallback"]:
            raise
        logger.info("hypotheses not met (%s), oracle fallback allowed", exc)
        return {"regime": "UNMET", "hubs": (), "note": str(exc)}

    logger.debug("length %d: regime %s, %d hubs", state["length"], hyp.regime, len(hyp.hubs))
    return {"regime": str(hyp.regime), "hubs": hyp.hubs}
