from state import ExtractionState
from core.errors import ExtractionFailed, InvariantViolated
from oracle.berge import validate_berge_cycle


def end_node(state: ExtractionState):
    """Final node: the witness is checked once more before it leaves the workflow"""

    found, length = state["found"], state["length"]
    if found is None:
        tried = ", ".join(state["attempts"]) or "nothing"
        raise ExtractionFailed(f"no constructive branch gave a cycle of length {length} (tried {tried})")

    check = validate_berge_cycle(state["frame"].base, found.witness)
    if not check.ok or found.witness.length != length:
        raise InvariantViolated(f"{found.branch} produced an invalid witness: {'; '.join(check.violations)}")

    return {"note": state["note"]}
