"""Auxiliary graphs whose cycles lift to Berge cycles of the same length."""

import logging
from collections.abc import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field

from core.bits import iter_bits
from core.errors import MatchingFailed, PreconditionViolated
from core.graphs import SimpleGraph
from constructive.matching import saturating_matching
from oracle.berge import BergeCycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def _key(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


class CompatGraph(BaseModel):
    '''
        Graph G on the frame's positions. Fixed edges carry their own hypergraph
        edge (the map phi*); free edges are pairs of high extra co-degree.
    '''
    model_config = ConfigDict(frozen=True)

    n: int
    fixed_edges: tuple[tuple[int, int, int], ...] = Field(..., description="(x, y, phi*(xy)) with x < y")
    free_edges: tuple[tuple[int, int], ...] = Field(..., description="(x, y) with x < y")

    def phi(self) -> dict[tuple[int, int], int]:
        return {(x, y): f for x, y, f in self.fixed_edges}

    def graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, [(x, y) for x, y, _ in self.fixed_edges] + list(self.free_edges))


def build_compat_graph(frame: HamiltonianFrame) -> CompatGraph:
    n, r = frame.n, frame.r
    fixed = sorted((*_key(i, (i + 1) % n), frame.e(i)) for i in range(n))
    consecutive = {(x, y) for x, y, _ in fixed}
    free = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if (x, y) not in consecutive and frame.extra_codegree(x, y) >= r
    ]
    return CompatGraph(n=n, fixed_edges=tuple(fixed), free_edges=tuple(free))


def check_compat_graph(frame: HamiltonianFrame, G: CompatGraph) -> list[str]:
    '''Violated cycle-compatibility conditions, empty when G is compatible'''
    problems = []
    images = [f for _, _, f in G.fixed_edges]
    if len(set(images)) != len(images):
        problems.append("phi* is not injective")
    fixed_pairs = {(x, y) for x, y, _ in G.fixed_edges}
    if fixed_pairs & set(G.free_edges):
        problems.append("fixed and free edges overlap")
    for x, y, f in G.fixed_edges:
        if not (frame.edge_mask(f) >> x & 1 and frame.edge_mask(f) >> y & 1):
            problems.append(f"fixed edge ({x}, {y}) is not inside edge {f}")
    rest = [f for f in range(frame.base.m) if f not in set(images)]
    for x, y in G.free_edges:
        need = (1 << x) | (1 << y)
        codegree = sum(1 for f in rest if frame.edge_mask(f) & need == need)
        if codegree < frame.r:
            problems.append(f"free edge ({x}, {y}) has co-degree {codegree} < r outside phi*")
    return problems


def lift_graph_cycle(frame: HamiltonianFrame, G: CompatGraph, D: Sequence[int]) -> BergeCycle:
    length = len(D)
    graph = G.graph()
    if length < 3 or len(set(D)) != length:
        raise PreconditionViolated("D must be a simple cycle on at least 3 vertices")
    steps = [_key(D[i], D[(i + 1) % length]) for i in range(length)]
    if not all(graph.has_edge(x, y) for x, y in steps):
        raise PreconditionViolated("D uses a pair that is not an edge of G")

    phi = G.phi()
    fixed_used = {phi[step] for step in steps if step in phi}
    free_steps = [i for i, step in enumerate(steps) if step not in phi]
    candidates = []
    for i in free_steps:
        x, y = steps[i]
        need = (1 << x) | (1 << y)
        candidates.append([f for f in range(frame.base.m) if f not in fixed_used and frame.edge_mask(f) & need == need])

    try:
        chosen = saturating_matching(candidates)
    except MatchingFailed as exc:
        raise MatchingFailed(f"free edges of D cannot be matched: {exc}") from None

    edge_ids = [phi.get(step, -1) for step in steps]
    for i, f in zip(free_steps, chosen):
        edge_ids[i] = f
    return BergeCycle(vertices=tuple(D), edge_ids=tuple(edge_ids))


def triangle_free(graph: SimpleGraph) -> bool:
    for u, v in graph.edge_list():
        if graph.adjacency[u] & graph.adjacency[v]:
            return False
    return True


def modified_compat_graphs(frame: HamiltonianFrame, G: CompatGraph) -> Iterator[CompatGraph]:
    '''
        For a consecutive pair t, t+1 of extra co-degree at least r, move it to
        the free edges and re-fix e_t on a new pair that closes a triangle:
        either t h with h in e_t and h+-1 adjacent to t, or h h+2 with both in e_t.
    '''
    n, r = frame.n, frame.r
    graph = G.graph()
    phi = G.phi()
    for t in range(n):
        step = _key(t, (t + 1) % n)
        if phi.get(step) != frame.e(t) or frame.extra_codegree(t, (t + 1) % n) < r:
            continue
        inside = [h for h in iter_bits(frame.edge_mask(frame.e(t))) if h not in (t, (t + 1) % n)]
        new_pairs = []
        for h in inside:
            if not graph.has_edge(t, h) and (graph.has_edge(t, (h + 1) % n) or graph.has_edge(t, (h - 1) % n)):
                new_pairs.append(_key(t, h))
        for h in inside:
            h2 = (h + 2) % n
            if h2 in inside and not graph.has_edge(h, h2):
                new_pairs.append(_key(h, h2))
        for pair in dict.fromkeys(new_pairs):
            fixed = tuple(sorted(
                [(x, y, f) for x, y, f in G.fixed_edges if (x, y) != step] + [(*pair, frame.e(t))]
            ))
            free = tuple(sorted(set(G.free_edges) | {step}))
            logger.debug("compat graph: fix %s on e_%d, free %s", pair, t, step)
            yield CompatGraph(n=n, fixed_edges=fixed, free_edges=free)
