'''
    Random hamiltonian hypergraphs for sweeps and property suites. Every
    sample starts from a tight-cycle skeleton along a random vertex order, so
    the hamiltonian frame is known without searching for it.
'''

import logging
import random
from math import comb

from core.bits import mask_of
from core.errors import BadParameters
from core.hypergraph import Hypergraph
from core.thresholds import C_R, SMALL_MIN_N, Regime, classify_regime, small_extra_bar
from oracle.berge import BergeCycle
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)

MAX_TRIES = 10_000


class _Builder:
    def __init__(self, n: int, r: int, rng: random.Random):
        if not 2 <= r < n:
            raise BadParameters(f"sampling needs 2 <= r < n, got n={n}, r={r}")
        self.n, self.r, self.rng = n, r, rng
        self.order = list(range(n))
        rng.shuffle(self.order)
        self.edges = [mask_of(self.order[(i + t) % n] for t in range(r)) for i in range(n)]
        self.seen = set(self.edges)
        self.extra = [0] * n

    def _keep(self, edge: int) -> None:
        self.seen.add(edge)
        self.edges.append(edge)
        for u in range(self.n):
            if edge >> u & 1:
                self.extra[u] += 1

    def add_through(self, v: int) -> bool:
        '''One fresh random edge containing v; False when the draws keep colliding'''
        others = [u for u in range(self.n) if u != v]
        for _ in range(MAX_TRIES):
            edge = mask_of([v] + self.rng.sample(others, self.r - 1))
            if edge not in self.seen:
                self._keep(edge)
                return True
        return False

    def add_random(self) -> bool:
        '''One fresh r-set drawn uniformly from all of them'''
        for _ in range(MAX_TRIES):
            edge = mask_of(self.rng.sample(range(self.n), self.r))
            if edge not in self.seen:
                self._keep(edge)
                return True
        return False

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(n=self.n, r=self.r, edges=tuple(self.edges))

    def frame(self) -> HamiltonianFrame:
        cycle = BergeCycle(vertices=tuple(self.order), edge_ids=tuple(range(self.n)))
        return HamiltonianFrame.from_cycle(self.hypergraph(), cycle)


def sample_hypergraph(n: int, r: int, min_degree: int, rng: random.Random) -> Hypergraph:
    '''Skeleton plus uniform random distinct r-sets until every vertex reaches min_degree'''
    if min_degree > comb(n - 1, r - 1):
        raise BadParameters(f"no {r}-graph on {n} vertices has minimum degree {min_degree}")
    b = _Builder(n, r, rng)
    degrees = [0] * n
    for edge in b.edges:
        for v in range(n):
            degrees[v] += edge >> v & 1

    while min(degrees) < min_degree:
        before = len(b.edges)
        if not b.add_random():
            raise BadParameters(f"could not place another {r}-set on {n} vertices")
        for u in range(n):
            degrees[u] += b.edges[before] >> u & 1
    return b.hypergraph()


def _fill(b: _Builder, targets: list[int]) -> None:
    while True:
        short = [v for v in range(b.n) if b.extra[v] < targets[v]]
        if not short:
            return
        v = min(short, key=lambda u: (b.extra[u], u))
        if not b.add_through(v):
            raise BadParameters(f"could not place another extra edge through vertex {v}")


def sample_hypothesis_frame(n: int, r: int, rng: random.Random) -> HamiltonianFrame:
    '''
        A frame meeting the extraction hypotheses for (n, r) exactly as they
        are stated, with a little random slack on top of the bar.
    '''
    regime = classify_regime(n, r)
    if r < 3 or regime is Regime.OUTSIDE:
        raise BadParameters(f"no extraction hypotheses cover n={n}, r={r}")
    b = _Builder(n, r, rng)

    if regime is Regime.SMALL:
        if n < SMALL_MIN_N:
            raise BadParameters(f"the small regime needs n >= {SMALL_MIN_N}, got n={n}")
        bar = small_extra_bar(r)
        if bar > comb(n - 1, r - 1) - 2:
            raise BadParameters(f"n={n}, r={r} cannot hold {bar} extra edges at every vertex")
        _fill(b, [bar] * n)
    else:
        hub = rng.randrange(n)
        targets = [0] * n
        targets[hub] = C_R[regime] + rng.randrange(3)
        _fill(b, targets)

    logger.debug("sampled %s frame n=%d r=%d with %d extra edges", regime, n, r, len(b.edges) - n)
    return b.frame()


def sample_star_frame(n: int, c: int, rng: random.Random) -> HamiltonianFrame:
    '''r = floor((n-1)/2) and exactly c extra edges, all through one vertex'''
    r = (n - 1) // 2
    b = _Builder(n, r, rng)
    hub = rng.randrange(n)
    for _ in range(c):
        if not b.add_through(hub):
            raise BadParameters(f"could not place {c} extra edges through one vertex")
    return b.frame()


def sample_frame(n: int, r: int, extra: int, rng: random.Random) -> HamiltonianFrame:
    '''Skeleton plus `extra` random extra edges, each through a uniformly random vertex'''
    b = _Builder(n, r, rng)
    for _ in range(extra):
        v = rng.randrange(n)
        if not b.add_through(v):
            raise BadParameters(f"could not place {extra} extra edges")
    return b.frame()
