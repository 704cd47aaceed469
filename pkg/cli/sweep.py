'''
    Threshold sweeps: for each (n, r, offset) cell, sample hamiltonian
    hypergraphs and record how many are pancyclic. Cells are independent and
    seeded from their own key, so the table does not depend on the order they
    run in.
'''

import logging
import random
from enum import StrEnum
from math import comb

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.config import settings
from constructions.generators import construction1, construction2, construction3
from constructions.sampler import sample_hypergraph, sample_star_frame
from core.errors import BadParameters, BergeError
from core.hypergraph import Hypergraph
from core.thresholds import degree_threshold
from oracle.berge import SearchStatus
from oracle.spectrum import spectrum

logger = logging.getLogger(__name__)

HEADER = ("n", "r", "delta_offset", "delta_target", "samples", "pancyclic", "hamiltonian", "unknown", "mean_nodes")


class SweepMode(StrEnum):
    DEGREE = "degree"
    EXTRA = "extra"


class SweepConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_lo: int = Field(..., ge=3)
    n_hi: int = Field(..., ge=3)
    r_offset: int = Field(0, description="r = floor((n-1)/2) + r_offset")
    offsets: tuple[int, ...] = Field((0,), description="Degree offset from the threshold, or extra edge count in extra mode")
    samples: int = Field(10, ge=0)
    mode: SweepMode = SweepMode.DEGREE
    seed: int = Field(default_factory=lambda: settings.seed)
    cap: int | None = Field(default_factory=lambda: settings.node_cap)

    @model_validator(mode="after")
    def _ranges(self):
        if self.n_lo > self.n_hi:
            raise ValueError(f"empty n range {self.n_lo}..{self.n_hi}")
        if not self.offsets:
            raise ValueError("no offsets given")
        return self


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    r: int
    delta_offset: int
    delta_target: int
    samples: int
    pancyclic: float
    hamiltonian: float
    unknown: float
    mean_nodes: float

    def format(self) -> str:
        return "\t".join([
            str(self.n), str(self.r), str(self.delta_offset), str(self.delta_target), str(self.samples),
            f"{self.pancyclic:.3f}", f"{self.hamiltonian:.3f}", f"{self.unknown:.3f}", f"{self.mean_nodes:.1f}",
        ])


def _sharp_examples(n: int, r: int) -> list[Hypergraph]:
    '''The extremal constructions valid at (n, r), all one below the threshold'''
    found = []
    for build in (construction1, construction2, construction3):
        try:
            found.append(build(n, r))
        except BadParameters:
            continue
    return found


def _degree_cell(config: SweepConfig, n: int, r: int, offset: int, rng: random.Random):
    target = degree_threshold(n, r) + offset
    if target < 1 or target > comb(n - 1, r - 1):
        return None, []
    seeded = _sharp_examples(n, r) if offset == -1 else []
    graphs = seeded[: config.samples]
    while len(graphs) < config.samples:
        graphs.append(sample_hypergraph(n, r, target, rng))
    return target, graphs


def _extra_cell(config: SweepConfig, n: int, offset: int, rng: random.Random):
    return offset, [sample_star_frame(n, offset, rng).base for _ in range(config.samples)]


def sweep_cell(config: SweepConfig, n: int, offset: int) -> SweepRow | None:
    rng = random.Random(f"{config.seed}:{n}:{config.r_offset}:{offset}")
    if config.mode is SweepMode.EXTRA:
        r = (n - 1) // 2
        target, graphs = _extra_cell(config, n, offset, rng)
    else:
        r = (n - 1) // 2 + config.r_offset
        if not 3 <= r < n:
            logger.debug("cell n=%d r=%d skipped: no threshold", n, r)
            return None
        target, graphs = _degree_cell(config, n, r, offset, rng)
    if target is None or not graphs:
        return None

    pancyclic = hamiltonian = unknown = nodes = 0
    for H in graphs:
        report = spectrum(H, 2, n, config.cap)
        pancyclic += report.is_pancyclic
        hamiltonian += report.status(n) is SearchStatus.PRESENT
        unknown += bool(report.unknown)
        nodes += report.nodes

    count = len(graphs)
    logger.info("cell n=%d r=%d offset=%d: %d/%d pancyclic", n, r, offset, pancyclic, count)
    return SweepRow(
        n=n, r=r, delta_offset=offset, delta_target=target, samples=count,
        pancyclic=pancyclic / count, hamiltonian=hamiltonian / count,
        unknown=unknown / count, mean_nodes=nodes / count,
    )


def run_sweep(config: SweepConfig) -> list[SweepRow]:
    rows = []
    if config.samples == 0:
        return rows
    for n in range(config.n_lo, config.n_hi + 1):
        for offset in config.offsets:
            try:
                row = sweep_cell(config, n, offset)
            except BergeError as exc:
                logger.warning("cell n=%d offset=%d skipped: %s", n, offset, exc)
                continue
            if row is not None:
                rows.append(row)
    return rows


def format_sweep(rows: list[SweepRow]) -> str:
    return "\t".join(HEADER) + "\n" + "".join(row.format() + "\n" for row in rows)
