import logging
from collections import deque
from collections.abc import Sequence
from enum import StrEnum
from itertools import combinations, permutations, product

from pydantic import BaseModel, ConfigDict, Field

from config.config import settings
from core.errors import LengthOutOfRange, SearchBudgetExceeded
from core.hypergraph import Hypergraph
from oracle.matcher import PairMatcher

logger = logging.getLogger(__name__)


class BergeCycle(BaseModel):
    '''A closed alternating sequence v_0 e_0 v_1 e_1 ... v_{l-1} e_{l-1} v_0'''
    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., description="Distinct vertices in cycle order")
    edge_ids: tuple[int, ...] = Field(..., description="Edge i joins vertices i and i+1")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def relabeled(self, labels: Sequence[int]) -> "BergeCycle":
        return BergeCycle(vertices=tuple(labels[v] for v in self.vertices), edge_ids=self.edge_ids)

    def format(self) -> str:
        return " ".join(f"{v} {e}" for v, e in zip(self.vertices, self.edge_ids))


class ValidationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    ok: bool
    violations: tuple[str, ...] = ()


class SearchStatus(StrEnum):
    PRESENT = "PRESENT"
    ABSENT = "ABSENT"
    UNKNOWN = "UNKNOWN"


class SearchResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: SearchStatus
    witness: BergeCycle | None = None
    nodes: int = 0


def validate_berge_cycle(H: Hypergraph, cand: BergeCycle) -> ValidationResult:
    violations = []
    vs, es = cand.vertices, cand.edge_ids
    length = len(vs)

    if length < 2:
        violations.append(f"length {length} is below 2")
    if len(es) != length:
        violations.append(f"{length} vertices but {len(es)} edges")
    if len(set(vs)) != length:
        violations.append("duplicate vertices")
    if len(set(es)) != len(es):
        violations.append("duplicate edges")

    bad_vertex = [v for v in vs if not 0 <= v < H.n]
    bad_edge = [e for e in es if not 0 <= e < H.m]
    violations.extend(f"vertex {v} out of range" for v in bad_vertex)
    violations.extend(f"edge {e} out of range" for e in bad_edge)

    if not bad_vertex and not bad_edge:
        for i, e in enumerate(es[:length]):
            a, b = vs[i], vs[(i + 1) % length]
            need = (1 << a) | (1 << b)
            if H.edges[e] & need != need:
                violations.append(f"{{v_{i}, v_{(i + 1) % length}}} = {{{a}, {b}}} not in edge {e}")

    return ValidationResult(ok=not violations, violations=tuple(violations))


def _distances_to(H: Hypergraph, root: int) -> list[int]:
    '''BFS distance to root in the 2-shadow restricted to vertices >= root'''
    unreachable = H.n + 1
    dist = [unreachable] * H.n
    dist[root] = 0
    queue = deque([root])
    vertex_masks = H.vertex_masks
    while queue:
        u = queue.popleft()
        for v in range(root, H.n):
            if dist[v] == unreachable and vertex_masks[u] & vertex_masks[v]:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


class _CycleSearch:
    def __init__(self, H: Hypergraph, length: int, cap: int | None, prune_every: int):
        self.H = H
        self.length = length
        self.cap = cap
        self.prune_every = prune_every
        self.nodes = 0
        self.matcher = PairMatcher(H)
        self.matched_upto = 0
        # neighbours in the 2-shadow, ascending
        self.adjacent = [
            [v for v in range(H.n) if v != u and H.vertex_masks[u] & H.vertex_masks[v]]
            for u in range(H.n)
        ]

    def run(self) -> BergeCycle | None:
        if self.length == 2:
            return self._two_cycle()
        for v0 in range(self.H.n - self.length + 1):
            self.dist = _distances_to(self.H, v0)
            self.path = [v0]
            self.used = 1 << v0
            found = self._extend()
            if found is not None:
                return found
        return None

    def _two_cycle(self) -> BergeCycle | None:
        for u in range(self.H.n):
            for v in self.adjacent[u]:
                if v > u:
                    cover = self.matcher.covering(u, v)
                    if len(cover) >= 2:
                        return BergeCycle(vertices=(u, v), edge_ids=(cover[0], cover[1]))
        return None

    def _tick(self) -> None:
        self.nodes += 1
        if self.cap is not None and self.nodes > self.cap:
            raise SearchBudgetExceeded(self.nodes)

    def _checkpoint(self, final: bool) -> int | None:
        '''Match pending pairs; returns the old watermark, or None when Hall's condition fails'''
        pairs = len(self.matcher.pairs)
        if not final and pairs % self.prune_every:
            return self.matched_upto
        start = self.matched_upto
        for p in range(start, pairs):
            if not self.matcher.match(p):
                for q in range(start, p):
                    self.matcher.unassign(q)
                return None
        self.matched_upto = pairs
        return start

    def _rollback(self, start: int) -> None:
        for q in range(start, self.matched_upto):
            self.matcher.unassign(q)
        self.matched_upto = start

    def _extend(self) -> BergeCycle | None:
        path = self.path
        v0 = path[0]
        last = path[-1]
        remaining = self.length - len(path)

        if remaining == 0:
            if self.length >= 3 and last < path[1]:
                return None
            if not self.H.vertex_masks[last] & self.H.vertex_masks[v0]:
                return None
            self.matcher.push(last, v0)
            start = self._checkpoint(final=True)
            if start is None:
                self.matcher.pop()
                return None
            witness = BergeCycle(vertices=tuple(path), edge_ids=tuple(self.matcher.pair_edge))
            self._rollback(start)
            self.matcher.pop()
            return witness

        for v in self.adjacent[last]:
            if v <= v0 or self.used >> v & 1 or self.dist[v] > remaining:
                continue
            self._tick()
            self.matcher.push(last, v)
            start = self._checkpoint(final=False)
            if start is not None:
                path.append(v)
                self.used |= 1 << v
                found = self._extend()
                self.used &= ~(1 << v)
                path.pop()
                self._rollback(start)
                if found is not None:
                    self.matcher.pop()
                    return found
            self.matcher.pop()
        return None


def _check_length(H: Hypergraph, length: int) -> None:
    if not 2 <= length <= H.n:
        raise LengthOutOfRange(f"length {length} outside 2..{H.n}")


def search_berge_cycle(
    H: Hypergraph,
    length: int,
    cap: int | None = None,
    prune_every: int | None = None,
) -> SearchResult:
    '''Exact search; a cap overrun is reported as UNKNOWN, never as ABSENT'''
    _check_length(H, length)
    if cap is None:
        cap = settings.node_cap
    search = _CycleSearch(H, length, cap, prune_every or settings.prune_every)
    try:
        witness = search.run()
    except SearchBudgetExceeded:
        logger.warning("length %d: cap of %s nodes exceeded", length, cap)
        return SearchResult(status=SearchStatus.UNKNOWN, nodes=search.nodes)

    logger.debug("length %d: %d nodes", length, search.nodes)
    if witness is None:
        return SearchResult(status=SearchStatus.ABSENT, nodes=search.nodes)
    return SearchResult(status=SearchStatus.PRESENT, witness=witness, nodes=search.nodes)


def find_berge_cycle(H: Hypergraph, length: int, cap: int | None = None) -> BergeCycle | None:
    result = search_berge_cycle(H, length, cap)
    if result.status is SearchStatus.UNKNOWN:
        raise SearchBudgetExceeded(result.nodes)
    return result.witness


def naive_berge_cycle(H: Hypergraph, length: int) -> BergeCycle | None:
    '''Reference enumerator: every vertex sequence, every choice of covering edges'''
    _check_length(H, length)
    for chosen in combinations(range(H.n), length):
        first = chosen[0]
        for rest in permutations(chosen[1:]):
            seq = (first,) + rest
            covers = [
                H.covering_edges(seq[i], seq[(i + 1) % length])
                for i in range(length)
            ]
            if not all(covers):
                continue
            for choice in product(*covers):
                if len(set(choice)) == length:
                    return BergeCycle(vertices=seq, edge_ids=choice)
    return None
