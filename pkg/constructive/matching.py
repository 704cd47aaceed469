import logging
from collections import Counter
from collections.abc import Sequence

import networkx as nx

from core.bits import mask_of
from core.errors import MatchingFailed, PreconditionViolated
from oracle.frame import HamiltonianFrame

logger = logging.getLogger(__name__)


def saturating_matching(candidates: Sequence[Sequence[int]]) -> list[int]:
    '''
        Assign each left item i one distinct id out of candidates[i].
        Raises MatchingFailed when no assignment covers every item.
    '''
    B = nx.Graph()
    top = [("p", i) for i in range(len(candidates))]
    B.add_nodes_from(top)
    for i, ids in enumerate(candidates):
        B.add_edges_from((("p", i), ("f", f)) for f in sorted(ids))
    matching = nx.bipartite.hopcroft_karp_matching(B, top_nodes=top)
    missing = [i for i in range(len(candidates)) if ("p", i) not in matching]
    if missing:
        raise MatchingFailed(f"{len(missing)} of {len(candidates)} items left unmatched")
    return [matching[("p", i)][1] for i in range(len(candidates))]


def match_pairs_to_edges(
    frame: HamiltonianFrame,
    pairs: Sequence[tuple[int, int]],
    edge_ids: Sequence[int],
) -> list[int]:
    '''
        Distinct edges e(a_i, b_i) out of edge_ids, the i-th containing the i-th pair.
        edge_ids must be extra edges whose union has exactly r+1 vertices.
    '''
    edge_ids = sorted(set(edge_ids))
    extras = set(frame.extra_edge_ids)
    if not set(edge_ids) <= extras:
        raise PreconditionViolated("every edge must be an extra edge")
    union = 0
    for f in edge_ids:
        union |= frame.edge_mask(f)
    if union.bit_count() != frame.r + 1:
        raise PreconditionViolated(f"the edges cover {union.bit_count()} vertices, not r+1 = {frame.r + 1}")

    normalized = [tuple(sorted(p)) for p in pairs]
    if len(set(normalized)) != len(normalized):
        raise PreconditionViolated("pairs must be distinct")
    if len(normalized) > len(edge_ids):
        raise PreconditionViolated(f"{len(normalized)} pairs but only {len(edge_ids)} edges")
    for a, b in normalized:
        if a == b or mask_of((a, b)) & ~union:
            raise PreconditionViolated(f"pair ({a}, {b}) is not two vertices of the union")
    load = Counter(v for p in normalized for v in p)
    crowded = [v for v, c in load.items() if c > len(edge_ids) - 1]
    if crowded:
        raise PreconditionViolated(f"vertex {min(crowded)} lies in more than {len(edge_ids) - 1} pairs")

    candidates = [
        [f for f in edge_ids if frame.edge_mask(f) & mask_of(p) == mask_of(p)]
        for p in normalized
    ]
    chosen = saturating_matching(candidates)
    logger.debug("matched pairs %s to edges %s", normalized, chosen)
    return chosen
