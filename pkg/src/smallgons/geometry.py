"""Planar polygon predicates: perimeter, diameter, convexity and certificates.

All polygons are vertex lists in counterclockwise order with indices taken
modulo ``n``. Coordinates are in units of the polygon diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidPolygonError


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point2, ...]

    def __post_init__(self):
        verts = tuple(Point2(float(x), float(y)) for x, y in self.vertices)
        if len(verts) < 3:
            raise InvalidPolygonError(f"a polygon needs at least 3 vertices, got {len(verts)}")
        if not all(math.isfinite(c) for v in verts for c in v):
            raise InvalidPolygonError("polygon has non-finite coordinates")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_array(cls, xy) -> "Polygon":
        return cls(tuple(Point2(x, y) for x, y in np.asarray(xy, dtype=float)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> Point2:
        return self.vertices[i % len(self.vertices)]

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=float)

    def mirrored(self) -> "Polygon":
        """Reflect across the vertical axis, keeping v_0 first and the order counterclockwise."""
        verts = [Point2(-x, y) for x, y in self.vertices]
        return Polygon((verts[0], *reversed(verts[1:])))

    def scaled(self, factor: float) -> "Polygon":
        return Polygon(tuple(Point2(factor * x, factor * y) for x, y in self.vertices))


@dataclass(frozen=True)
class ToleranceConfig:
    cert_tol: float = 1e-9
    root_tol: float = 1e-14
    bracket_tol: float = 1e-15

    def __post_init__(self):
        if min(self.cert_tol, self.root_tol, self.bracket_tol) <= 0:
            raise ValueError("tolerances must be strictly positive")
        if self.cert_tol <= self.root_tol:
            raise ValueError("cert_tol must exceed root_tol")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class CertificateReport:
    is_small: bool
    small_margin: float
    is_convex: bool
    min_sigma: float
    is_equilateral: bool
    side_deviation: float
    is_symmetric: bool
    mirror_mismatch: float
    diameter_pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def all_pass(self) -> bool:
        return self.is_small and self.is_convex and self.is_equilateral and self.is_symmetric

    def summary(self) -> dict:
        return {
            "is_small": self.is_small,
            "small_margin": self.small_margin,
            "is_convex": self.is_convex,
            "min_sigma": self.min_sigma,
            "is_equilateral": self.is_equilateral,
            "side_deviation": self.side_deviation,
            "is_symmetric": self.is_symmetric,
            "mirror_mismatch": self.mirror_mismatch,
            "diameter_edges": len(self.diameter_pairs),
        }


def _xy(poly: Polygon | Sequence) -> np.ndarray:
    if not isinstance(poly, Polygon):
        poly = Polygon(tuple(poly))
    return poly.as_array()


def side_lengths(poly: Polygon) -> np.ndarray:
    xy = _xy(poly)
    d = np.roll(xy, -1, axis=0) - xy
    return np.hypot(d[:, 0], d[:, 1])


def perimeter(poly: Polygon) -> float:
    return math.fsum(side_lengths(poly))


def pairwise_distances(poly: Polygon) -> np.ndarray:
    xy = _xy(poly)
    diff = xy[:, None, :] - xy[None, :, :]
    return np.hypot(diff[..., 0], diff[..., 1])


def max_pairwise_distance(poly: Polygon) -> tuple[float, tuple[int, int]]:
    """Largest vertex-to-vertex distance and one pair ``(i, j)``, ``i < j``, attaining it."""
    dist = pairwise_distances(poly)
    i, j = np.unravel_index(np.argmax(np.triu(dist, 1)), dist.shape)
    return float(dist[i, j]), (int(i), int(j))


def convexity_determinants(poly: Polygon) -> np.ndarray:
    """sigma_i for every vertex, cyclically.

    sigma_i = (x_i - x_{i-1})(y_{i+1} - y_{i-1}) - (y_i - y_{i-1})(x_{i+1} - x_{i-1});
    all nonnegative for a convex counterclockwise polygon.
    """
    xy = _xy(poly)
    prev = np.roll(xy, 1, axis=0)
    nxt = np.roll(xy, -1, axis=0)
    a = xy - prev
    b = nxt - prev
    return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]


def signed_area(poly: Polygon) -> float:
    xy = _xy(poly)
    x, y = xy[:, 0], xy[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def mirror_mismatch(poly: Polygon) -> float:
    """Largest distance from a reflected vertex (x -> -x) to its nearest original vertex."""
    xy = _xy(poly)
    mirror = xy * np.array([-1.0, 1.0])
    diff = mirror[:, None, :] - xy[None, :, :]
    return float(np.hypot(diff[..., 0], diff[..., 1]).min(axis=1).max())


def diameter_graph(poly: Polygon, tol: ToleranceConfig = DEFAULT_TOL) -> list[tuple[int, int]]:
    """All vertex pairs ``(i, j)``, ``i < j``, at distance 1 within ``tol.cert_tol``."""
    dist = pairwise_distances(poly)
    i, j = np.nonzero(np.triu(np.abs(dist - 1.0) <= tol.cert_tol, 1))
    return [(int(a), int(b)) for a, b in zip(i, j)]


def certify(
    poly: Polygon,
    nominal_side: Optional[float] = None,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> CertificateReport:
    """Check smallness, convexity, equilaterality and mirror symmetry.

    Failures are reported through the flags; margins are always filled in.
    Without ``nominal_side`` the sides are compared to their mean.
    """
    eps = tol.cert_tol
    diam, _ = max_pairwise_distance(poly)
    sigma = convexity_determinants(poly)
    sides = side_lengths(poly)
    ref = float(np.mean(sides)) if nominal_side is None else nominal_side
    side_dev = float(np.max(np.abs(sides - ref)))
    mismatch = mirror_mismatch(poly)
    min_sigma = float(sigma.min())
    return CertificateReport(
        is_small=abs(diam - 1.0) <= eps,
        small_margin=1.0 - diam,
        is_convex=min_sigma >= -eps and signed_area(poly) > 0,
        min_sigma=min_sigma,
        is_equilateral=side_dev <= eps,
        side_deviation=side_dev,
        is_symmetric=mismatch <= eps,
        mirror_mismatch=mismatch,
        diameter_pairs=tuple(diameter_graph(poly, tol)),
    )


def _check_n(n: int) -> None:
    if int(n) != n or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n}")


def upper_bound_perimeter(n: int) -> float:
    """2n sin(pi/2n), the largest perimeter any convex small n-gon can have."""
    _check_n(n)
    return 2 * n * math.sin(math.pi / (2 * n))


def regular_perimeter(n: int) -> float:
    _check_n(n)
    if n % 2:
        return 2 * n * math.sin(math.pi / (2 * n))
    return n * math.sin(math.pi / n)
