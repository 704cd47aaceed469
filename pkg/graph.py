from langgraph.graph import StateGraph, START, END

from state import ExtractionState
from helpers.detect_case import detect_case
from helpers.route_case import routeCase, routeAfterCase
from helpers.trivial_nodes import trivial_n, two_cycle_node
from helpers.regime_cases import chord_case, half_case, odd_case, even_case, compat_case
from helpers.oracle_fallback import oracle_fallback
from helpers.end_node import end_node

# Build the workflow
extract_builder = StateGraph(ExtractionState)

# Add nodes
extract_builder.add_node("detect_case", detect_case)
extract_builder.add_node("two_cycle", two_cycle_node)
extract_builder.add_node("trivial_n", trivial_n)
extract_builder.add_node("chord_case", chord_case)
extract_builder.add_node("half_case", half_case)
extract_builder.add_node("odd_case", odd_case)
extract_builder.add_node("even_case", even_case)
extract_builder.add_node("compat_case", compat_case)
extract_builder.add_node("oracle_fallback", oracle_fallback)
extract_builder.add_node("end_node", end_node)

CASES = ["two_cycle", "chord_case", "half_case", "odd_case", "even_case", "compat_case"]

# Add edges to connect nodes
extract_builder.add_edge(START, "detect_case")
extract_builder.add_conditional_edges(
    "detect_case",
    routeCase,
    {name: name for name in CASES + ["trivial_n", "oracle_fallback"]},
)
for name in CASES:
    extract_builder.add_conditional_edges(
        name,
        routeAfterCase,
        {
            "end_node": "end_node",
            "oracle_fallback": "oracle_fallback",
        },
    )
extract_builder.add_edge("trivial_n", "end_node")
extract_builder.add_edge("oracle_fallback", "end_node")
extract_builder.add_edge("end_node", END)

# Every run is a single pass over one length, nothing to resume
app = extract_builder.compile()
