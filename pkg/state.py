from typing_extensions import TypedDict, Annotated
import operator

from constructive.trace import Found
from oracle.frame import HamiltonianFrame

class ExtractionState(TypedDict):
    frame: HamiltonianFrame
    length: int
    allow_fallback: bool
    # node cap of the fallback search, None for the configured one
    cap: int | None
    # theorem regime, or UNMET when the hypotheses fail and fallback is allowed
    regime: str
    hubs: tuple[int, ...]
    attempts: Annotated[list[str], operator.add]
    found: Found | None
    note: str
