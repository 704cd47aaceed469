import logging

from pydantic import BaseModel, ConfigDict, Field

from core.errors import InvariantViolated, LengthOutOfRange
from core.hypergraph import Hypergraph
from oracle.berge import BergeCycle, SearchStatus, search_berge_cycle, validate_berge_cycle

logger = logging.getLogger(__name__)


class SpectrumReport(BaseModel):
    '''Which cycle lengths in lo..hi a hypergraph has, with a witness per present length'''
    model_config = ConfigDict(frozen=True)

    n: int
    lo: int
    hi: int
    present: dict[int, BergeCycle] = Field(default_factory=dict)
    absent: tuple[int, ...] = ()
    unknown: tuple[int, ...] = ()
    nodes: int = 0

    def status(self, length: int) -> SearchStatus:
        if length in self.present:
            return SearchStatus.PRESENT
        if length in self.absent:
            return SearchStatus.ABSENT
        return SearchStatus.UNKNOWN

    @property
    def is_pancyclic(self) -> bool:
        return self.lo == 2 and self.hi == self.n and not self.absent and not self.unknown

    def lines(self) -> list[str]:
        out = []
        for length in range(self.lo, self.hi + 1):
            status = self.status(length)
            if status is SearchStatus.PRESENT:
                out.append(f"{length} PRESENT {self.present[length].format()}")
            else:
                out.append(f"{length} {status}")
        return out

    def format(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def spectrum(H: Hypergraph, lo: int, hi: int, cap: int | None = None) -> SpectrumReport:
    if not 2 <= lo <= hi <= H.n:
        raise LengthOutOfRange(f"range {lo}..{hi} is not inside 2..{H.n}")

    present, absent, unknown = {}, [], []
    nodes = 0
    for length in range(lo, hi + 1):
        result = search_berge_cycle(H, length, cap)
        nodes += result.nodes
        if result.status is SearchStatus.PRESENT:
            check = validate_berge_cycle(H, result.witness)
            if not check.ok:
                raise InvariantViolated(f"length {length} witness fails: {check.violations}")
            present[length] = result.witness
        elif result.status is SearchStatus.ABSENT:
            absent.append(length)
        else:
            unknown.append(length)

    logger.info(
        "spectrum %d..%d: %d present, %d absent, %d unknown",
        lo, hi, len(present), len(absent), len(unknown),
    )
    return SpectrumReport(
        n=H.n, lo=lo, hi=hi,
        present=present, absent=tuple(absent), unknown=tuple(unknown), nodes=nodes,
    )
