"""Degree thresholds for pancyclicity and the (n, r) regimes they split into."""

from enum import StrEnum
from math import comb

from core.errors import BadUniformity


class Regime(StrEnum):
    LARGE = "LARGE"      # r > n/2
    HALF = "HALF"        # r = n/2
    ODD = "ODD"          # n = 2r + 1
    EVEN = "EVEN"        # n = 2r + 2
    SMALL = "SMALL"      # n in {2r + 3, 2r + 4}
    OUTSIDE = "OUTSIDE"


# extra edges some vertex must lie in, per regime of the big-r theorem
C_R = {
    Regime.LARGE: 1,
    Regime.HALF: 1,
    Regime.ODD: 6,
    Regime.EVEN: 6,
}

SMALL_MIN_N = 19


def small_extra_bar(r: int) -> int:
    """Extra edges every vertex must lie in when n is 2r+3 or 2r+4."""
    return 5 * (r - 1) + 2


def degree_threshold(n: int, r: int) -> int:
    if not 3 <= r < n:
        raise BadUniformity(f"threshold needs 3 <= r < n, got n={n}, r={r}")
    half = (n - 1) // 2
    # binomial clause wins at equality
    if r <= half:
        return comb(half, r - 1) + 1
    return r


def classify_regime(n: int, r: int) -> Regime:
    if 2 * r > n:
        return Regime.LARGE
    if 2 * r == n:
        return Regime.HALF
    if n == 2 * r + 1:
        return Regime.ODD
    if n == 2 * r + 2:
        return Regime.EVEN
    if n in (2 * r + 3, 2 * r + 4):
        return Regime.SMALL
    return Regime.OUTSIDE
