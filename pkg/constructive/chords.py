from collections.abc import Iterable

from core.errors import NotAChord
from oracle.berge import BergeCycle
from oracle.frame import HamiltonianFrame


def find_k_chord(frame: HamiltonianFrame, k: int, scope: Iterable[int] | None = None) -> tuple[int, int] | None:
    '''Position i and extra edge f with {i, i+k} inside f, scanning f then i upwards'''
    n = frame.n
    if not 1 <= k <= n - 1:
        return None
    extras = set(frame.extra_edge_ids)
    ids = sorted(extras if scope is None else extras & set(scope))
    for f in ids:
        edge = frame.edge_mask(f)
        for i in range(n):
            if edge >> i & 1 and edge >> ((i + k) % n) & 1:
                return i, f
    return None


def chord_to_cycle(frame: HamiltonianFrame, i: int, k: int, f: int) -> BergeCycle:
    n = frame.n
    j = (i + k) % n
    if f not in frame.extra_edge_ids:
        raise NotAChord(f"edge {f} lies on the hamiltonian cycle")
    if not 1 <= k <= n - 2:
        raise NotAChord(f"a {k}-chord does not give a cycle shorter than n={n}")
    edge = frame.edge_mask(f)
    if not (edge >> (i % n) & 1 and edge >> j & 1):
        raise NotAChord(f"edge {f} does not contain positions {i % n} and {j}")

    vertices = tuple((i + t) % n for t in range(k + 1))
    edge_ids = tuple(frame.e(i + t) for t in range(k)) + (f,)
    return BergeCycle(vertices=vertices, edge_ids=edge_ids)
