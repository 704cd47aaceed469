from state import ExtractionState

CASE_NODES = {
    "LARGE": "chord_case",
    "HALF": "half_case",
    "ODD": "odd_case",
    "EVEN": "even_case",
    "SMALL": "compat_case",
}


def routeCase(state: ExtractionState):
    """Gate function sending the length to the trivial nodes, to the node of its regime, or to the oracle"""

    length = state["length"]
    if length == state["frame"].n:
        return "trivial_n"
    if length == 2:
        return "two_cycle"
    if state["regime"] == "UNMET":
        return "oracle_fallback"

    return CASE_NODES[state["regime"]]


def routeAfterCase(state: ExtractionState):
    """Gate function after a constructive node: done when it found a witness, else the oracle if allowed"""

    if state["found"] is not None:
        return "end_node"
    if state["allow_fallback"]:
        return "oracle_fallback"

    return "end_node"
