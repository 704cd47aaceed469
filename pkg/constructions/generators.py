'''
    Extremal and separating hypergraphs. Constructions 1 to 3 sit one below
    the degree threshold without a hamiltonian Berge cycle; the clique
    necklace is hamiltonian yet misses every length strictly between r+1 and k.
'''

import logging
from enum import StrEnum
from itertools import combinations
from math import comb

from pydantic import BaseModel, ConfigDict, Field

from core.bits import MAX_VERTICES
from core.errors import BadParameters
from core.hypergraph import Hypergraph, make_hypergraph

logger = logging.getLogger(__name__)

MAX_EDGES = 200_000


class ConstructionKind(StrEnum):
    TWO_CLIQUES = "c1"
    SPLIT_DOMINATING = "c2"
    REGULAR_MINUS_EDGE = "c3"
    CLIQUE_NECKLACE = "c4"
    TIGHT_CYCLE = "tight-cycle"


class ConstructionSpec(BaseModel):
    '''Parameters of one generator call'''
    model_config = ConfigDict(frozen=True)

    kind: ConstructionKind
    n: int | None = Field(default=None, description="Vertex count; derived as k*r for the necklace")
    r: int
    k: int | None = Field(default=None, description="Number of cliques in the necklace")
    bridge: bool = Field(default=False, description="Construction 1, n even: one edge joining the halves")
    extra: bool = Field(default=False, description="Construction 2, n even: one edge with two vertices in V_2")

    def build(self) -> Hypergraph:
        if self.kind is ConstructionKind.CLIQUE_NECKLACE:
            if self.k is None:
                raise BadParameters("the clique necklace needs k")
            return construction4(self.k, self.r)
        if self.n is None:
            raise BadParameters(f"{self.kind} needs n")
        match self.kind:
            case ConstructionKind.TWO_CLIQUES:
                return construction1(self.n, self.r, self.bridge)
            case ConstructionKind.SPLIT_DOMINATING:
                return construction2(self.n, self.r, self.extra)
            case ConstructionKind.REGULAR_MINUS_EDGE:
                return construction3(self.n, self.r)
            case ConstructionKind.TIGHT_CYCLE:
                return tight_cycle(self.n, self.r)


def _check_size(n: int, r: int, edges: int) -> None:
    if n > MAX_VERTICES:
        raise BadParameters(f"n={n} exceeds the supported maximum of {MAX_VERTICES}")
    if r < 2:
        raise BadParameters(f"uniformity r={r} must be at least 2")
    if edges > MAX_EDGES:
        raise BadParameters(f"n={n}, r={r} would need {edges} edges, more than {MAX_EDGES}")


def _below_half(n: int, r: int) -> None:
    if r > (n - 1) // 2:
        raise BadParameters(f"r={r} must be at most floor((n-1)/2)={(n - 1) // 2}")


def construction1(n: int, r: int, bridge: bool = False) -> Hypergraph:
    '''Two r-uniform cliques sharing one vertex (n odd) or disjoint (n even)'''
    _below_half(n, r)
    if bridge and n % 2:
        raise BadParameters("the bridging edge exists only for n even")

    if n % 2:
        h = (n + 1) // 2
        V1, V2 = range(h), range(h - 1, n)
    else:
        h = n // 2
        V1, V2 = range(h), range(h, n)
    _check_size(n, r, 2 * comb(h, r) + 1)

    edges = list(combinations(V1, r)) + list(combinations(V2, r))
    if bridge:
        # lexicographically first r-set meeting both halves
        edges.append(tuple(range(r - 1)) + (h,))
    logger.debug("construction 1: n=%d r=%d, %d edges", n, r, len(edges))
    return make_hypergraph(n, r, edges)


def construction2(n: int, r: int, extra: bool = False) -> Hypergraph:
    '''Every r-set with at most one vertex in V_2 = {floor((n-1)/2), ..., n-1}'''
    _below_half(n, r)
    if extra and n % 2:
        raise BadParameters("the extra edge exists only for n even")

    a = (n - 1) // 2
    V1, V2 = range(a), range(a, n)
    _check_size(n, r, comb(a, r) + len(V2) * comb(a, r - 1) + 1)

    edges = list(combinations(V1, r))
    edges += [inside + (v,) for v in V2 for inside in combinations(V1, r - 1)]
    if extra:
        edges.append(tuple(range(r - 2)) + (a, a + 1))
    logger.debug("construction 2: n=%d r=%d, %d edges", n, r, len(edges))
    return make_hypergraph(n, r, edges)


def _windows(n: int, r: int) -> list[tuple[int, ...]]:
    return [tuple(sorted((i + t) % n for t in range(r))) for i in range(n)]


def tight_cycle(n: int, r: int) -> Hypergraph:
    if not 2 <= r < n:
        raise BadParameters(f"the tight cycle needs 2 <= r < n, got n={n}, r={r}")
    _check_size(n, r, n)
    return make_hypergraph(n, r, _windows(n, r))


def construction3(n: int, r: int) -> Hypergraph:
    '''The tight n-cycle without its window starting at 0'''
    if 2 * r < n:
        raise BadParameters(f"construction 3 needs r >= n/2, got n={n}, r={r}")
    if not 2 <= r < n:
        raise BadParameters(f"construction 3 needs 2 <= r < n, got n={n}, r={r}")
    _check_size(n, r, n)
    return make_hypergraph(n, r, _windows(n, r)[1:])


def construction4(k: int, r: int) -> Hypergraph:
    '''
        k complete r-graphs on r+1 vertices strung in a cycle. Hub i sits at
        i*r and clique i spans i*r, ..., i*r + r (the last vertex is hub i+1).
    '''
    if k < 3 or r < 3:
        raise BadParameters(f"the clique necklace needs k >= 3 and r >= 3, got k={k}, r={r}")
    n = k * r
    _check_size(n, r, k * (r + 1))

    edges = []
    for i in range(k):
        clique = [(i * r + t) % n for t in range(r + 1)]
        edges += [tuple(sorted(sub)) for sub in combinations(clique, r)]
    return make_hypergraph(n, r, edges)
