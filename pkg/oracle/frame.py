import logging

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from core.bits import iter_bits
from core.errors import InvariantViolated, PreconditionViolated, SearchBudgetExceeded
from core.hypergraph import Hypergraph
from oracle.berge import BergeCycle, SearchStatus, search_berge_cycle, validate_berge_cycle

logger = logging.getLogger(__name__)


class HamiltonianFrame(BaseModel):
    '''
        A hypergraph relabeled along a hamiltonian Berge cycle C, so that C
        visits 0, 1, ..., n-1 in order and e_i = cycle_edge_ids[i] joins i and i+1.
        labels[i] is the input vertex sitting at position i. Edge ids are the
        input's edge ids.
    '''
    model_config = ConfigDict(frozen=True)

    base: Hypergraph = Field(..., description="Hypergraph in cycle order")
    cycle_edge_ids: tuple[int, ...] = Field(..., description="e_0 .. e_{n-1}")
    extra_edge_ids: tuple[int, ...] = Field(..., description="Edges off the cycle, ascending")
    labels: tuple[int, ...] = Field(..., description="Input vertex at each position")

    _extra_at: tuple[tuple[int, ...], ...] = PrivateAttr(default=())
    _union_at: tuple[int, ...] = PrivateAttr(default=())

    def model_post_init(self, __context) -> None:
        n = self.base.n
        at = [[] for _ in range(n)]
        union = [0] * n
        for f in self.extra_edge_ids:
            edge = self.base.edges[f]
            for v in iter_bits(edge):
                at[v].append(f)
                union[v] |= edge
        self._extra_at = tuple(tuple(ids) for ids in at)
        self._union_at = tuple(union)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def r(self) -> int:
        return self.base.r

    def e(self, i: int) -> int:
        return self.cycle_edge_ids[i % self.n]

    def edge_mask(self, f: int) -> int:
        return self.base.edges[f]

    def extra_at(self, i: int) -> tuple[int, ...]:
        '''Extra edges containing position i'''
        return self._extra_at[i % self.n]

    def union_at(self, i: int) -> int:
        '''Mask of the union of the extra edges containing position i'''
        return self._union_at[i % self.n]

    def extra_codegree(self, u: int, v: int) -> int:
        need = (1 << u) | (1 << v)
        return sum(1 for f in self._extra_at[u] if self.base.edges[f] & need == need)

    def cycle(self) -> BergeCycle:
        return BergeCycle(vertices=tuple(range(self.n)), edge_ids=self.cycle_edge_ids)

    def to_input(self, cycle: BergeCycle) -> BergeCycle:
        return cycle.relabeled(self.labels)

    def _moved(self, new_position: list[int], cycle_edge_ids: list[int]) -> "HamiltonianFrame":
        labels = [0] * self.n
        for old, new in enumerate(new_position):
            labels[new] = self.labels[old]
        return HamiltonianFrame(
            base=self.base.relabeled(new_position),
            cycle_edge_ids=tuple(cycle_edge_ids),
            extra_edge_ids=self.extra_edge_ids,
            labels=tuple(labels),
        )

    def rotated(self, t: int) -> "HamiltonianFrame":
        """Position t becomes position 0."""
        n = self.n
        t %= n
        if t == 0:
            return self
        return self._moved(
            [(i - t) % n for i in range(n)],
            [self.cycle_edge_ids[(i + t) % n] for i in range(n)],
        )

    def reflected(self) -> "HamiltonianFrame":
        """Position i becomes position -i; C is walked the other way round."""
        n = self.n
        return self._moved(
            [(-i) % n for i in range(n)],
            [self.cycle_edge_ids[(-i - 1) % n] for i in range(n)],
        )

    def reflected_about(self, a: int, b: int) -> "HamiltonianFrame":
        """Walk C backwards from b, so the arc a..b becomes the arc 0..b-a."""
        return self.reflected().rotated((-b) % self.n)

    def with_cycle_edge(self, i: int, f: int) -> "HamiltonianFrame":
        '''Swap the extra edge f onto the cycle at position i; e_i becomes extra'''
        i %= self.n
        need = (1 << i) | (1 << ((i + 1) % self.n))
        if f not in self.extra_edge_ids:
            raise PreconditionViolated(f"edge {f} is not an extra edge")
        if self.base.edges[f] & need != need:
            raise PreconditionViolated(f"edge {f} does not contain positions {i} and {(i + 1) % self.n}")
        cycle_edge_ids = list(self.cycle_edge_ids)
        old = cycle_edge_ids[i]
        cycle_edge_ids[i] = f
        extra = sorted(set(self.extra_edge_ids) - {f} | {old})
        return HamiltonianFrame(
            base=self.base,
            cycle_edge_ids=tuple(cycle_edge_ids),
            extra_edge_ids=tuple(extra),
            labels=self.labels,
        )

    def translate(self, cycle: BergeCycle, target: "HamiltonianFrame") -> BergeCycle:
        '''Rewrite a cycle found in this frame into the positions of another frame of the same input'''
        position = {v: i for i, v in enumerate(target.labels)}
        return BergeCycle(
            vertices=tuple(position[self.labels[v]] for v in cycle.vertices),
            edge_ids=cycle.edge_ids,
        )

    @classmethod
    def from_cycle(cls, H: Hypergraph, cycle: BergeCycle) -> "HamiltonianFrame":
        if cycle.length != H.n:
            raise PreconditionViolated(f"cycle of length {cycle.length} is not hamiltonian on {H.n} vertices")
        result = validate_berge_cycle(H, cycle)
        if not result.ok:
            raise PreconditionViolated("not a Berge cycle: " + "; ".join(result.violations))
        position = [0] * H.n
        for i, v in enumerate(cycle.vertices):
            position[v] = i
        used = set(cycle.edge_ids)
        return cls(
            base=H.relabeled(position),
            cycle_edge_ids=cycle.edge_ids,
            extra_edge_ids=tuple(j for j in range(H.m) if j not in used),
            labels=cycle.vertices,
        )


def search_hamiltonian_frame(H: Hypergraph, cap: int | None = None) -> tuple[SearchStatus, HamiltonianFrame | None, int]:
    if H.n < 2:
        return SearchStatus.ABSENT, None, 0
    result = search_berge_cycle(H, H.n, cap)
    if result.witness is None:
        return result.status, None, result.nodes
    frame = HamiltonianFrame.from_cycle(H, result.witness)
    if len(frame.extra_edge_ids) != H.m - H.n:
        raise InvariantViolated("extra edge count does not match m - n")
    return result.status, frame, result.nodes


def find_hamiltonian_frame(H: Hypergraph, cap: int | None = None) -> HamiltonianFrame | None:
    status, frame, nodes = search_hamiltonian_frame(H, cap)
    if status is SearchStatus.UNKNOWN:
        raise SearchBudgetExceeded(nodes)
    logger.info("hamiltonian frame %s after %d nodes", "found" if frame else "absent", nodes)
    return frame
