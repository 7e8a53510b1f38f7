"""Truncated large-n expansions for the B_n and Mossinghoff polygons.

Each function returns a :class:`SeriesValue` carrying the power of 1/n of the
first omitted term, so callers can scale comparison tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

PI = math.pi


@dataclass(frozen=True)
class SeriesValue:
    value: float
    truncation_order: int

    def __float__(self) -> float:
        return self.value


def _series(n: int, coefficients: dict[int, float], order: int) -> SeriesValue:
    if n < 16:
        raise DomainError(f"series are only meaningful for n >= 16, got {n}")
    return SeriesValue(math.fsum(c / n**k for k, c in coefficients.items()), order)


# coefficient of 1/n^k, keyed by k
_PERIMETER_BN = {
    0: PI,
    2: -PI**3 / 24,
    4: PI**5 / 1920 - PI**4,
    5: PI**5,
    6: -(PI**7 / 322560 + 41 * PI**6 / 24),
}
_PERIMETER_MN = {
    0: PI,
    2: -PI**3 / 24,
    4: PI**5 / 1920 - 3 * PI**4,
    5: 9 * PI**5,
    6: -(PI**7 / 322560 + 9 * PI**6 / 8),
}
_GAP_UB_BN = {4: PI**4, 5: -PI**5}
_GAP_BN_MN = {4: 2 * PI**4, 5: -8 * PI**5, 6: -7 * PI**6 / 12}
_SMALLNESS = {0: 1.0, 3: -PI**3, 5: -7 * PI**5 / 4}
_SIGMA_QUARTER = {3: 2 * PI**3, 4: -PI**4}


def series_perimeter_bn(n: int) -> SeriesValue:
    return _series(n, _PERIMETER_BN, 7)


def series_perimeter_mn(n: int) -> SeriesValue:
    return _series(n, _PERIMETER_MN, 7)


def series_gap_ub_bn(n: int) -> SeriesValue:
    """ub L_n - L(B_n) to two terms."""
    return _series(n, _GAP_UB_BN, 6)


def series_gap_bn_mn(n: int) -> SeriesValue:
    return _series(n, _GAP_BN_MN, 7)


def series_smallness_margin(n: int) -> SeriesValue:
    """2 x_{n/4}: width of B_n between its two widest vertices, just under 1."""
    return _series(n, _SMALLNESS, 7)


def series_sigma_quarter(n: int) -> SeriesValue:
    """Convexity determinant of B_n at v_{n/4}."""
    return _series(n, _SIGMA_QUARTER, 5)


def series_fraction(n: int) -> float:
    """Predicted (L(B_n) - L(M_n)) / (ub L_n - L(M_n)); tends to 2/3."""
    bn = series_perimeter_bn(n).value
    mn = series_perimeter_mn(n).value
    ub = 2 * n * math.sin(PI / (2 * n))
    return (bn - mn) / (ub - mn)
