'''
    One node per regime. Each runs the constructive attempts of its case and
    records every attempt it made, successful or not.
'''

from state import ExtractionState
from constructive.cases import (
    case1_extract,
    case2_extract,
    case3_extract,
    case4_extract,
    mainsmall_extract,
)


def _run(extract, state: ExtractionState):
    tried: list[str] = []
    found = extract(state["frame"], state["length"], state["hubs"], tried)
    return {"found": found, "attempts": tried}


def chord_case(state: ExtractionState):
    """r > n/2"""
    return _run(case1_extract, state)


def half_case(state: ExtractionState):
    """r = n/2"""
    return _run(case2_extract, state)


def odd_case(state: ExtractionState):
    """n = 2r+1"""
    return _run(case3_extract, state)


def even_case(state: ExtractionState):
    """n = 2r+2"""
    return _run(case4_extract, state)


def compat_case(state: ExtractionState):
    """n in {2r+3, 2r+4}, through the compatible graph"""
    return _run(mainsmall_extract, state)
