from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from oracle.berge import BergeCycle, SearchStatus


class Branch(StrEnum):
    CHORD = "CHORD"
    SHIFT = "SHIFT"
    SWAP = "SWAP"
    SSC_MPD = "SSC_MPD"
    SSC_INTERVALS = "SSC_INTERVALS"
    SSC_HALF = "SSC_HALF"
    CASE2_EVEN = "CASE2_EVEN"
    CASE2_ODD = "CASE2_ODD"
    COMPAT_LIFT = "COMPAT_LIFT"
    ORACLE_FALLBACK = "ORACLE_FALLBACK"
    TRIVIAL_N = "TRIVIAL_N"
    TWO_CYCLE = "TWO_CYCLE"


class Found(BaseModel):
    '''A witness in the positions of the frame it was asked for, and the branch that built it'''
    model_config = ConfigDict(frozen=True)

    branch: Branch
    witness: BergeCycle


class TraceRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    length: int
    branch: Branch
    witness: BergeCycle
    attempts: tuple[str, ...] = ()
    note: str = ""

    def format(self) -> str:
        return f"{self.length} BRANCH {self.branch} WITNESS {self.witness.format()}"


class ExtractionTrace(BaseModel):
    model_config = ConfigDict(frozen=True)

    records: tuple[TraceRecord, ...] = ()
    # lengths the fallback search settled as ABSENT or left UNKNOWN
    missing: tuple[tuple[int, SearchStatus], ...] = ()

    def fallback_fraction(self) -> float:
        total = len(self.records) + len(self.missing)
        if not total:
            return 0.0
        used = sum(1 for rec in self.records if rec.branch is Branch.ORACLE_FALLBACK)
        return (used + len(self.missing)) / total

    def branch_counts(self) -> dict[Branch, int]:
        counts = {}
        for rec in self.records:
            counts[rec.branch] = counts.get(rec.branch, 0) + 1
        return counts

    def relabeled(self, labels: tuple[int, ...]) -> "ExtractionTrace":
        return ExtractionTrace(
            records=tuple(
                rec.model_copy(update={"witness": rec.witness.relabeled(labels)}) for rec in self.records
            ),
            missing=self.missing,
        )

    def format(self) -> str:
        lines = [(rec.length, rec.format()) for rec in self.records]
        lines += [(length, f"{length} {status}") for length, status in self.missing]
        return "".join(line + "\n" for _, line in sorted(lines))
