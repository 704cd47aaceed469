from state import ExtractionState
from constructive.cases import two_cycle
from constructive.trace import Branch, Found


def trivial_n(state: ExtractionState):
    """Length n is the frame's own cycle"""

    frame = state["frame"]
    return {"found": Found(branch=Branch.TRIVIAL_N, witness=frame.cycle()), "attempts": ["frame"]}


def two_cycle_node(state: ExtractionState):
    """Two edges sharing a pair of vertices"""

    return {"found": two_cycle(state["frame"]), "attempts": ["two-cycle"]}
