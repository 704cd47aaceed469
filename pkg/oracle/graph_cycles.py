import logging
from collections import deque

import networkx as nx

from core.bits import iter_bits
from core.errors import LengthOutOfRange, SearchBudgetExceeded
from core.graphs import SimpleGraph

logger = logging.getLogger(__name__)


def _distances_to(G: SimpleGraph, root: int) -> list[int]:
    unreachable = G.n + 1
    dist = [unreachable] * G.n
    dist[root] = 0
    allowed = ~((1 << root) - 1)
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in iter_bits(G.adjacency[u] & allowed):
            if dist[v] == unreachable:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def graph_cycle_of_length(G: SimpleGraph, length: int, cap: int | None = None) -> list[int] | None:
    '''
        Exact search for a simple cycle on `length` vertices.
        The cycle starts at its smallest vertex and leaves it towards the
        smaller of its two neighbours.
    '''
    if not 3 <= length <= G.n:
        raise LengthOutOfRange(f"graph cycle length {length} outside 3..{G.n}")
    if length % 2 and nx.is_bipartite(G.to_networkx()):
        return None

    nodes = 0

    def extend(path: list[int], used: int, dist: list[int]) -> list[int] | None:
        nonlocal nodes
        v0, last = path[0], path[-1]
        remaining = length - len(path)
        if remaining == 0:
            if last > path[1] and G.has_edge(last, v0):
                return list(path)
            return None
        for v in iter_bits(G.adjacency[last]):
            if v <= v0 or used >> v & 1 or dist[v] > remaining:
                continue
            nodes += 1
            if cap is not None and nodes > cap:
                raise SearchBudgetExceeded(nodes)
            path.append(v)
            found = extend(path, used | 1 << v, dist)
            path.pop()
            if found is not None:
                return found
        return None

    for v0 in range(G.n - length + 1):
        if G.degree(v0) < 2:
            continue
        found = extend([v0], 1 << v0, _distances_to(G, v0))
        if found is not None:
            logger.debug("graph cycle of length %d after %d nodes", length, nodes)
            return found
    return None
