"""Fixed-width bit sets over vertex indices 0..n-1 (n <= 64)."""

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def rotate_mask(mask: int, s: int, n: int) -> int:
    """Move bit i to bit (i + s) mod n."""
    s %= n
    if s == 0:
        return mask
    return ((mask << s) | (mask >> (n - s))) & full_mask(n)


def shift_image_mask(mask: int, s: int, n: int) -> int:
    """Image of a vertex set under the shifting function with constant s."""
    if s == 0:
        return mask
    low = mask & full_mask(n - s)
    high = mask >> (n - s)
    return (low << s) | (high << 1)
