from collections.abc import Iterable

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from core.bits import bits, iter_bits, mask_of
from core.errors import SameVertex, VertexOutOfRange
from core.hypergraph import Hypergraph


class SimpleGraph(BaseModel):
    '''A simple graph on 0..n-1, adjacency stored as one neighbour mask per vertex'''
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Number of vertices")
    adjacency: tuple[int, ...] = Field(..., description="Neighbour bit mask of every vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adjacency = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"graph edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SameVertex(f"self-loop at {u}")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
        return cls(n=n, adjacency=tuple(adjacency))

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edge_list(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adjacency[u]) if u < v]

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edge_list())
        return G


class BipartiteIncidence(BaseModel):
    '''Vertices of H on the left, edges of H on the right, joined by membership'''
    model_config = ConfigDict(frozen=True)

    left: tuple[int, ...] = Field(..., description="Vertex indices of H")
    right: tuple[int, ...] = Field(..., description="Edge indices of H")
    adjacency: tuple[int, ...] = Field(..., description="Per edge index, the mask of its vertices")

    def right_degree(self, j: int) -> int:
        return self.adjacency[j].bit_count()

    def left_degree(self, v: int) -> int:
        return sum(1 for mask in self.adjacency if mask >> v & 1)

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency)

    def to_networkx(self) -> nx.Graph:
        B = nx.Graph()
        B.add_nodes_from((("v", i) for i in self.left), bipartite=0)
        B.add_nodes_from((("e", j) for j in self.right), bipartite=1)
        for j in self.right:
            B.add_edges_from((("v", i), ("e", j)) for i in iter_bits(self.adjacency[j]))
        return B


def incidence_graph(H: Hypergraph) -> BipartiteIncidence:
    return BipartiteIncidence(
        left=tuple(range(H.n)),
        right=tuple(range(H.m)),
        adjacency=H.edges,
    )


def shadow2(H: Hypergraph) -> SimpleGraph:
    adjacency = [0] * H.n
    for edge in H.edges:
        for v in iter_bits(edge):
            adjacency[v] |= edge
    return SimpleGraph(n=H.n, adjacency=tuple(mask & ~mask_of([v]) for v, mask in enumerate(adjacency)))
