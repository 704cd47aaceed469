from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from core.bits import MAX_VERTICES, bits, full_mask, iter_bits, mask_of
from core.errors import (
    BadUniformity,
    DuplicateEdge,
    NonUniformEdge,
    SameVertex,
    VertexOutOfRange,
)


class Hypergraph(BaseModel):
    '''An r-uniform hypergraph on vertices 0..n-1 with edges stored as bit masks, in input order'''
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, le=MAX_VERTICES, description="Number of vertices")
    r: int = Field(..., ge=2, description="Uniformity")
    edges: tuple[int, ...] = Field(..., description="Edge bit masks, duplicate-free")

    _vertex_masks: tuple[int, ...] = PrivateAttr(default=())

    @model_validator(mode="after")
    def check_uniform(self) -> "Hypergraph":
        if self.r > self.n:
            raise ValueError(f"uniformity r={self.r} exceeds n={self.n}")
        outside = ~full_mask(self.n)
        for j, edge in enumerate(self.edges):
            if edge < 0 or edge & outside:
                raise ValueError(f"edge {j} has a vertex outside 0..{self.n - 1}")
            if edge.bit_count() != self.r:
                raise ValueError(f"edge {j} has {edge.bit_count()} vertices, expected {self.r}")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("edges repeat")

        incident = [0] * self.n
        for j, edge in enumerate(self.edges):
            for v in iter_bits(edge):
                incident[v] |= 1 << j
        self._vertex_masks = tuple(incident)
        return self

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_masks(self) -> tuple[int, ...]:
        """Per vertex, the bit mask of incident edge ids."""
        return self._vertex_masks

    def edge_mask(self, j: int) -> int:
        return self.edges[j]

    def edge_set(self, j: int) -> list[int]:
        return bits(self.edges[j])

    def covering_edges(self, u: int, v: int) -> list[int]:
        return bits(self._vertex_masks[u] & self._vertex_masks[v])

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self._vertex_masks]

    def relabeled(self, perm: Sequence[int]) -> "Hypergraph":
        """Vertex v becomes perm[v]; edge order is kept."""
        edges = tuple(mask_of(perm[v] for v in iter_bits(edge)) for edge in self.edges)
        return Hypergraph(n=self.n, r=self.r, edges=edges)


def check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise VertexOutOfRange(f"vertex {v} outside 0..{H.n - 1}")


def make_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    if n > MAX_VERTICES:
        raise VertexOutOfRange(f"n={n} exceeds the supported maximum of {MAX_VERTICES}")
    if r < 2 or r > n:
        raise BadUniformity(f"uniformity r={r} must satisfy 2 <= r <= n={n}")

    masks = []
    seen = {}
    for j, edge in enumerate(edges):
        members = list(edge)
        for v in members:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"edge {j} has vertex {v} outside 0..{n - 1}")
        mask = mask_of(members)
        if mask.bit_count() != r or len(members) != r:
            raise NonUniformEdge(f"edge {j} has {len(members)} entries, expected {r} distinct vertices")
        if mask in seen:
            raise DuplicateEdge(f"edge {j} repeats edge {seen[mask]}")
        seen[mask] = j
        masks.append(mask)

    return Hypergraph(n=n, r=r, edges=tuple(masks))


def degree(H: Hypergraph, v: int) -> int:
    check_vertex(H, v)
    return H.vertex_masks[v].bit_count()


def codegree(H: Hypergraph, u: int, v: int) -> int:
    check_vertex(H, u)
    check_vertex(H, v)
    if u == v:
        raise SameVertex(f"co-degree needs two distinct vertices, got {u} twice")
    return (H.vertex_masks[u] & H.vertex_masks[v]).bit_count()


def min_degree(H: Hypergraph) -> int:
    return min(H.degrees())
