from core.hypergraph import Hypergraph


class PairMatcher:
    '''
        Incremental matching of consecutive vertex pairs into distinct edges.

        Pairs are pushed and popped in stack order. A pair is matched by an
        augmenting path search that tries covering edges by ascending id, so
        the matching of every earlier pair survives when the newest pair is
        unassigned again.
    '''

    def __init__(self, H: Hypergraph):
        self.H = H
        self.pairs: list[tuple[int, int]] = []
        self.pair_edge: list[int] = []
        self.edge_owner: dict[int, int] = {}
        self._cover: dict[tuple[int, int], list[int]] = {}

    def covering(self, u: int, v: int) -> list[int]:
        key = (u, v) if u < v else (v, u)
        found = self._cover.get(key)
        if found is None:
            found = self._cover[key] = self.H.covering_edges(u, v)
        return found

    def push(self, u: int, v: int) -> int:
        self.pairs.append((u, v))
        self.pair_edge.append(-1)
        return len(self.pairs) - 1

    def pop(self) -> None:
        self.unassign(len(self.pairs) - 1)
        self.pairs.pop()
        self.pair_edge.pop()

    def unassign(self, p: int) -> None:
        f = self.pair_edge[p]
        if f >= 0:
            del self.edge_owner[f]
            self.pair_edge[p] = -1

    def match(self, p: int) -> bool:
        return self._augment(p, set())

    def _augment(self, p: int, seen: set[int]) -> bool:
        for f in self.covering(*self.pairs[p]):
            if f in seen:
                continue
            seen.add(f)
            owner = self.edge_owner.get(f)
            if owner is None or self._augment(owner, seen):
                self.pair_edge[p] = f
                self.edge_owner[f] = p
                return True
        return False
