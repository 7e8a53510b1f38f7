"""Constructors for the regular, Reinhardt, B_n, Z_32, Z_64 and H_8 polygons.

Each constructor returns a :class:`FamilyInstance` whose polygon starts at
v_0 = (0, 0), lies in y >= 0, is symmetric about x = 0 and is listed
counterclockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .closures import (
    Z64_PENDANTS,
    Z64_STEPS,
    bn_closed_form_point,
    bn_closure_residual,
    bn_signed_steps,
    check_bn_order,
    is_power_of_two,
    walk,
    z64_path,
)
from .errors import DomainError, NotAvailableError
from .fixtures import EQUILATERAL_FIXTURES, FIXTURE_NAMES, fixture
from .geometry import Point2, Polygon, perimeter
from .solver import h8_side_squared, solve_bn_angle, solve_z32_angle, solve_z64_angle

PI = math.pi

__all__ = [
    "FamilyInstance",
    "REFERENCE_TABLE",
    "nonequilateral_lower_bound",
    "bn_closed_form_point",
    "bn_closure_residual",
    "bn_vertices",
    "construct",
    "construct_bn",
    "construct_fixture",
    "construct_h8",
    "construct_regular",
    "construct_reinhardt",
    "construct_z32",
    "construct_z64",
    "fixture",
    "mossinghoff_reference",
    "z32_vertices",
    "z64_vertices",
]


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    n: int
    t: Optional[float]
    side: Optional[float]
    polygon: Polygon
    perimeter: float
    aux: Optional[float] = None

    @property
    def equilateral(self) -> bool:
        return self.side is not None


def _equilateral(family: str, t: float, polygon: Polygon, aux: Optional[float] = None) -> FamilyInstance:
    side = 2 * math.sin(t / 2)
    n = len(polygon)
    return FamilyInstance(family, n, t, side, polygon, n * side, aux)


def order_counterclockwise(points) -> Polygon:
    """Sort points by angle about their centroid, starting from the one nearest the origin."""
    pts = [Point2(float(x), float(y)) for x, y in points]
    cx = math.fsum(p.x for p in pts) / len(pts)
    cy = math.fsum(p.y for p in pts) / len(pts)
    pts.sort(key=lambda p: math.atan2(p.y - cy, p.x - cx))
    start = min(range(len(pts)), key=lambda i: math.hypot(*pts[i]))
    return Polygon(tuple(pts[start:] + pts[:start]))


def _symmetric(half, on_axis) -> Polygon:
    """Close a half construction under x -> -x. ``on_axis`` points are not duplicated."""
    mirrored = [(-x, y) for x, y in half]
    return order_counterclockwise(list(on_axis) + list(half) + mirrored)


def construct_regular(n: int) -> FamilyInstance:
    if int(n) != n or n < 3:
        raise DomainError(f"regular n-gon needs n >= 3, got {n}")
    # unit long diagonals for even n, unit shortest-skip diagonals for odd n
    r = 0.5 if n % 2 == 0 else 1 / (2 * math.cos(PI / (2 * n)))
    verts = []
    for k in range(n):
        a = 2 * PI * k / n
        verts.append(Point2(r * math.sin(a), r * (1 - math.cos(a))))
    poly = Polygon(tuple(verts))
    side = 2 * r * math.sin(PI / n)
    return _equilateral("regular", 2 * math.asin(side / 2), poly)


def construct_reinhardt(m: int, n: int) -> FamilyInstance:
    """Reuleaux m-gon with each arc cut into n/m equal sub-arcs (R_{m,n})."""
    if int(m) != m or m < 3 or m % 2 == 0:
        raise DomainError(f"Reinhardt polygons need an odd m >= 3, got {m}")
    if int(n) != n or n < m or n % m:
        raise DomainError(f"n must be a positive multiple of m = {m}, got {n}")
    q = n // m
    base = construct_regular(m).polygon.vertices
    h = (m - 1) // 2
    points = list(base)
    for j, centre in enumerate(base):
        a = base[(j + h) % m]
        b = base[(j + h + 1) % m]
        a0 = math.atan2(a.y - centre.y, a.x - centre.x)
        sweep = math.remainder(math.atan2(b.y - centre.y, b.x - centre.x) - a0, 2 * PI)
        for i in range(1, q):
            ang = a0 + sweep * i / q
            points.append(Point2(centre.x + math.cos(ang), centre.y + math.sin(ang)))
    poly = order_counterclockwise(points)
    return _equilateral(f"reinhardt:{m}", PI / n, poly)


def bn_vertices(n: int, t: float) -> Polygon:
    """Vertices of B_n for a trial angle ``t``.

    Half construction: the alternating path p_j = p_{j-1} +- (sin kt, cos kt)
    over k in [1, n/2) with k mod 4 != 2, the axis vertex (0, 1), and pendant
    points p_{3k-2} + (-1)^k (sin (4k-2)t, cos (4k-2)t) for k = 1..n/8.
    """
    check_bn_order(n)
    path = walk(bn_signed_steps(n), t)
    pendants = []
    for k in range(1, n // 8 + 1):
        px, py = path[3 * k - 2]
        s = (-1) ** k
        a = (4 * k - 2) * t
        pendants.append((px + s * math.sin(a), py + s * math.cos(a)))
    return _symmetric(path[1:] + pendants, [path[0], (0.0, 1.0)])


def bn_half_path(n: int, t: float) -> list[tuple[float, float]]:
    check_bn_order(n)
    return walk(bn_signed_steps(n), t)


def construct_bn(n: int) -> FamilyInstance:
    t = solve_bn_angle(n)
    return _equilateral("bn", t, bn_vertices(n, t))


def z32_vertices(t: float) -> Polygon:
    if not 0 < t < PI / 32:
        raise DomainError(f"Z_32 needs t in (0, pi/32), got {t!r}")
    s, c = math.sin, math.cos
    fan0 = [(s(j * t), c(j * t)) for j in range(1, 6)]  # v_15 .. v_11
    x11, y11 = fan0[-1]
    fan11 = [(x11 - s(k * t), y11 - c(k * t)) for k in range(6, 13)]  # v_31 .. v_25
    v24 = (x11 - s(13 * t), y11 - c(13 * t))
    v10 = (v24[0] + s(14 * t), v24[1] + c(14 * t))
    v23 = (v10[0] - s(15 * t), v10[1] - c(15 * t))
    return _symmetric(fan0 + fan11 + [v24, v10, v23], [(0.0, 0.0), (0.0, 1.0)])


def construct_z32() -> FamilyInstance:
    t = solve_z32_angle()
    return _equilateral("z32", t, z32_vertices(t))


def _z64_pendants(path, t: float) -> list[tuple[float, float]]:
    out = []
    for k in Z64_PENDANTS:
        # attach at the path vertex between the steps whose multiples straddle k
        j = next(j for j in range(1, len(Z64_STEPS)) if abs(Z64_STEPS[j - 1]) < k < abs(Z64_STEPS[j]))
        sign = -1.0 if Z64_STEPS[j - 1] > 0 else 1.0
        x, y = path[j]
        out.append((x + sign * math.sin(k * t), y + sign * math.cos(k * t)))
    return out


def z64_vertices(t: float, y: float) -> Polygon:
    if not 0 < t < PI / 64:
        raise DomainError(f"Z_64 needs t in (0, pi/64), got {t!r}")
    if not 0 < y < 1:
        raise DomainError(f"Z_64 needs y in (0, 1), got {y!r}")
    path = z64_path(t)
    v50 = (-0.5, y)
    v15 = (math.cos(t) - 0.5, y + math.sin(t))
    half = path[1:] + _z64_pendants(path, t) + [v50, v15]
    return _symmetric(half, [path[0], (0.0, 1.0)])


def construct_z64() -> FamilyInstance:
    t, y = solve_z64_angle()
    return _equilateral("z64", t, z64_vertices(t, y), aux=y)


def h8_vertices(side: float) -> Polygon:
    """Optimal equilateral octagon for a given side length.

    Diameter graph: axis v_0 v_4, v_0 v_3, v_0 v_5, v_3 v_7, v_5 v_1 and the
    horizontal v_2 v_6. The closing side v_1 v_2 has length ``side`` only
    when side^2 is the root of the H_8 sextic.
    """
    a = 2 * math.asin(side / 2)
    v3 = (math.sin(a), math.cos(a))
    # v_7: on the unit circle about v_3 and the circle of radius `side` about v_0
    d = 1.0  # |v_3|
    along = (side**2 - 1 + d**2) / (2 * d)
    across = math.sqrt(side**2 - along**2)
    ux, uy = v3
    v7 = (along * ux - across * uy, along * uy + across * ux)
    if v7[0] > 0:
        v7 = (along * ux + across * uy, along * uy - across * ux)
    h = v3[1] - math.sqrt(side**2 - (0.5 - v3[0]) ** 2)
    v1 = (-v7[0], v7[1])
    v2 = (0.5, h)
    return _symmetric([v1, v2, v3], [(0.0, 0.0), (0.0, 1.0)])


def construct_h8() -> FamilyInstance:
    side = math.sqrt(h8_side_squared())
    return _equilateral("h8", 2 * math.asin(side / 2), h8_vertices(side))


def nonequilateral_lower_bound(n: int) -> float:
    """Perimeter of a known non-equilateral n-gon family, n = 2^s; a lower bound on the optimum."""
    if int(n) != n or not is_power_of_two(n) or n < 4:
        raise DomainError(f"needs n = 2^s with s >= 2, got {n}")
    return (
        2 * n * math.sin(PI / (2 * n))
        * math.cos(PI / (2 * n) - 0.5 * math.asin(0.5 * math.sin(2 * PI / n)))
    )


# n -> (L(R_n), L(M_n), L(B_n), ub L_n, fraction), as published.
REFERENCE_TABLE = {
    16: (3.1214451523, 3.1347065475, 3.1352878881, 3.1365484905, 0.3156),
    32: (3.1365484905, 3.1401338091, 3.1402460942, 3.1403311570, 0.5690),
    64: (3.1403311570, 3.1412623836, 3.1412717079, 3.1412772509, 0.6272),
    128: (3.1412772509, 3.1415127924, 3.1415134468, 3.1415138011, 0.6487),
    256: (3.1415138011, 3.1415728748, 3.1415729180, 3.1415729404, 0.6589),
}

Z_REFERENCE = {
    32: {"t": 0.0981744286, "perimeter": 3.1403202339, "fraction": 0.8715},
    64: {"t": 0.0490873533, "perimeter": 3.1412752155, "fraction": 0.6327},
}


def mossinghoff_reference(n: int) -> float:
    """Published perimeter of Mossinghoff's equilateral n-gon (tabulated n only)."""
    try:
        return REFERENCE_TABLE[n][1]
    except KeyError:
        raise NotAvailableError(
            f"no tabulated Mossinghoff perimeter for n = {n}; use asymptotics.series_perimeter_mn"
        ) from None


def construct_fixture(name: str) -> FamilyInstance:
    poly = fixture(name)
    n = len(poly)
    length = perimeter(poly)
    side = length / n if name in EQUILATERAL_FIXTURES else None
    return FamilyInstance(f"fixture:{name}", n, None, side, poly, length)


FAMILIES = ("regular", "reinhardt:<m>", "bn", "z32", "z64", "h8", "fixture:<name>")


def construct(family: str, n: Optional[int] = None) -> FamilyInstance:
    """Build a polygon from a family spec such as ``"bn"``, ``"reinhardt:3"`` or ``"fixture:V8"``."""
    kind, _, arg = family.partition(":")
    fixed = {"z32": 32, "z64": 64, "h8": 8}
    if kind in fixed:
        if n is not None and n != fixed[kind]:
            raise DomainError(f"{kind} has n = {fixed[kind]}, got {n}")
        return {"z32": construct_z32, "z64": construct_z64, "h8": construct_h8}[kind]()
    if kind == "fixture":
        if arg not in FIXTURE_NAMES:
            raise DomainError(f"unknown fixture {arg!r}; expected one of {', '.join(FIXTURE_NAMES)}")
        inst = construct_fixture(arg)
        if n is not None and n != inst.n:
            raise DomainError(f"fixture {arg} has n = {inst.n}, got {n}")
        return inst
    if n is None:
        raise DomainError(f"family {family!r} needs n")
    if kind == "regular":
        return construct_regular(n)
    if kind == "bn":
        return construct_bn(n)
    if kind == "reinhardt":
        try:
            m = int(arg)
        except ValueError:
            raise DomainError(f"reinhardt needs an odd order, e.g. reinhardt:3, got {family!r}") from None
        return construct_reinhardt(m, n)
    raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
