"""Self-shift complementary index sets and their coset blocks."""

from collections.abc import Iterable
from math import gcd

from pydantic import BaseModel, ConfigDict, Field

from core.errors import InvariantViolated, NotSsc
from constructive.shifting import shift_set


class SscDecomposition(BaseModel):
    '''A k-SSC set A of Z/nZ split into its d = gcd(n, k) alternating blocks'''
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    d: int
    A: frozenset[int]
    blocks: tuple[frozenset[int], ...] = Field(..., description="O_0 .. O_{d-1}")
    offset: int = Field(0, description="A was rotated by -offset so that it contains 0")


def is_k_ssc(A: Iterable[int], k: int, n: int) -> bool:
    A = set(A)
    if n % 2 or len(A) * 2 != n:
        return False
    return not A & shift_set(A, k, n)


def _block(j: int, d: int, n: int, A: set[int]) -> frozenset[int]:
    start = j if j in A else j + d
    return frozenset((start + t * 2 * d) % n for t in range(n // (2 * d)))


def ssc_decompose(A: Iterable[int], k: int, n: int) -> SscDecomposition:
    A = set(A)
    if not 1 <= k <= n - 1 or not is_k_ssc(A, k, n):
        raise NotSsc(f"{sorted(A)} is not {k}-SSC in Z/{n}Z")

    offset = min(A)
    rotated = shift_set(A, -offset, n)
    d = gcd(n, k)
    if (n // d) % 2:
        raise InvariantViolated(f"n/d = {n // d} is odd for a {k}-SSC set")
    if rotated & shift_set(rotated, d, n):
        raise InvariantViolated(f"A meets d + A for d = {d}")

    blocks = [_block(j, d, n, rotated) for j in range(d)]
    covered = set().union(*blocks)
    if covered != rotated or sum(map(len, blocks)) != len(rotated):
        raise InvariantViolated("blocks do not partition A")

    return SscDecomposition(
        n=n, k=k, d=d,
        A=frozenset(A),
        blocks=tuple(frozenset(shift_set(block, offset, n)) for block in blocks),
        offset=offset,
    )


def ssc_from_window(window_start: int, members: Iterable[int], k: int, n: int) -> frozenset[int]:
    '''
        The unique k-SSC set whose intersection with the d consecutive
        residues window_start .. window_start+d-1 is `members`.
    '''
    d = gcd(n, k)
    members = {m % n for m in members}
    window = [(window_start + t) % n for t in range(d)]
    if not members <= set(window):
        raise NotSsc(f"members {sorted(members)} fall outside the window {window}")
    if n % 2 or (n // d) % 2:
        raise NotSsc(f"no {k}-SSC set exists in Z/{n}Z")

    A = set()
    for x in window:
        # membership alternates every d steps along the coset
        start = x if x in members else x + d
        A.update((start + t * 2 * d) % n for t in range(n // (2 * d)))
    return frozenset(A)
