import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smallgons.errors import DomainError, InvalidPolygonError
from smallgons.families import construct_bn, construct_regular, construct_z32
from smallgons.geometry import (
    Point2,
    Polygon,
    ToleranceConfig,
    certify,
    convexity_determinants,
    diameter_graph,
    max_pairwise_distance,
    perimeter,
    regular_perimeter,
    side_lengths,
    upper_bound_perimeter,
)


def brute_force_diameter(poly):
    best = (-1.0, None)
    for (i, a), (j, b) in itertools.combinations(enumerate(poly.vertices), 2):
        d = math.hypot(a.x - b.x, a.y - b.y)
        if d > best[0]:
            best = (d, (i, j))
    return best


def poly(*pts):
    return Polygon(tuple(pts))


class TestPolygon:
    def test_rejects_too_few_vertices(self):
        with pytest.raises(InvalidPolygonError):
            poly((0, 0), (1, 0))

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidPolygonError):
            poly((0, 0), (1, math.nan), (0, 1))

    def test_indices_wrap(self):
        p = poly((0, 0), (1, 0), (0, 1))
        assert p[3] == p[0]
        assert p[-1] == Point2(0.0, 1.0)

    def test_mirrored_keeps_origin_first(self):
        p = construct_regular(5).polygon
        m = p.mirrored()
        assert m[0] == p[0]
        assert m[1] == Point2(-p[4].x, p[4].y)


class TestTolerance:
    def test_defaults(self):
        tol = ToleranceConfig()
        assert (tol.cert_tol, tol.root_tol, tol.bracket_tol) == (1e-9, 1e-14, 1e-15)

    @pytest.mark.parametrize("kw", [{"cert_tol": 0}, {"root_tol": -1}, {"cert_tol": 1e-15}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            ToleranceConfig(**kw)


class TestPerimeter:
    def test_regular_square(self):
        assert perimeter(construct_regular(4).polygon) == pytest.approx(2.828427, abs=1e-6)

    def test_unit_triangle(self):
        tri = poly((0, 0), (1, 0), (0.5, math.sqrt(3) / 2))
        assert perimeter(tri) == pytest.approx(3.0, abs=1e-15)

    def test_b16(self):
        assert perimeter(construct_bn(16).polygon) == pytest.approx(3.1352878881, abs=1e-10)


class TestMaxPairwiseDistance:
    def test_unit_diagonal_square(self):
        h = 0.5
        sq = poly((0, 0), (h, h), (0, 1), (-h, h))
        d, pair = max_pairwise_distance(sq)
        assert d == pytest.approx(1.0, abs=1e-15)
        assert pair in {(0, 2), (1, 3)}

    def test_b32_matches_brute_force(self):
        p = construct_bn(32).polygon
        d, pair = max_pairwise_distance(p)
        expected, _ = brute_force_diameter(p)
        assert d == expected
        assert abs(d - 1) <= 1e-12
        assert pair in diameter_graph(p)

    def test_b_n_quarter_vertices_are_not_diametral(self):
        n = 32
        p = construct_bn(n).polygon
        a, b = p[n // 4], p[3 * n // 4]
        assert math.hypot(a.x - b.x, a.y - b.y) == pytest.approx(2 * a.x, abs=1e-15)
        assert 2 * a.x < 1 - 1e-4


class TestConvexityDeterminants:
    def test_regular_hexagon_all_equal_positive(self):
        s = convexity_determinants(construct_regular(6).polygon)
        assert np.all(s > 0)
        assert np.ptp(s) < 1e-15

    def test_reflex_quadrilateral(self):
        s = convexity_determinants(poly((0, 0), (1, 0), (0.4, 0.1), (0, 1)))
        assert s.min() < 0

    def test_definition(self):
        p = poly((0, 0), (2, 0), (3, 1), (1, 2))
        s = convexity_determinants(p)
        for i in range(4):
            (x0, y0), (x1, y1), (x2, y2) = p[i - 1], p[i], p[i + 1]
            assert s[i] == (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)


class TestCertify:
    def test_b16_all_pass(self):
        inst = construct_bn(16)
        assert certify(inst.polygon, inst.side).all_pass

    def test_regular_8(self):
        inst = construct_regular(8)
        r = certify(inst.polygon, inst.side)
        assert r.is_small and r.is_convex and r.is_equilateral
        assert inst.perimeter == pytest.approx(3.061467, abs=1e-6)

    def test_z32_all_pass(self):
        inst = construct_z32()
        assert certify(inst.polygon, inst.side).all_pass

    def test_margins_reported_on_failure(self):
        p = construct_regular(6).polygon.scaled(1.01)
        r = certify(p)
        assert not r.is_small
        assert r.small_margin == pytest.approx(-0.01, abs=1e-12)
        assert r.is_convex and r.is_equilateral and r.is_symmetric

    def test_clockwise_polygon_is_not_convex(self):
        p = construct_regular(5).polygon
        cw = Polygon(tuple(reversed(p.vertices)))
        assert not certify(cw).is_convex

    def test_collinear_vertex_counts_as_convex(self):
        h = 0.5
        p = poly((0, 0), (h / 2, h / 2), (h, h), (0, 1), (-h, h))
        r = certify(p)
        assert r.min_sigma == pytest.approx(0.0, abs=1e-15)
        assert r.is_convex

    def test_wrong_nominal_side(self):
        inst = construct_regular(7)
        r = certify(inst.polygon, inst.side * (1 + 1e-6))
        assert not r.is_equilateral
        assert r.side_deviation == pytest.approx(inst.side * 1e-6, rel=1e-6)


class TestDiameterGraph:
    def test_pentagram(self):
        g = diameter_graph(construct_regular(5).polygon)
        assert sorted(g) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

    @pytest.mark.parametrize("n", [16, 32, 64])
    def test_b_n_edge_count(self, n):
        # axis + two mirrored half paths of 3n/8 - 1 edges + n/8 mirrored pendant pairs
        g = diameter_graph(construct_bn(n).polygon)
        assert len(g) == 1 + 2 * (3 * n // 8 - 1) + 2 * (n // 8)
        assert (0, n // 2) in g

    def test_z32_edges(self):
        # enumerated on the solved polygon: axis, 5 fan edges at v_0 per side,
        # 8 edges at v_11 per side (7 pendants + half-path), half-path tail of 2 per side
        g = diameter_graph(construct_z32().polygon)
        assert len(g) == 31
        at_origin = sorted(j for i, j in g if i == 0)
        assert at_origin == [11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21]
        assert sorted(j for i, j in g if i == 11) == [24, 25, 26, 27, 28, 29, 30, 31]

    def test_empty_for_shrunk_polygon(self):
        assert diameter_graph(construct_regular(6).polygon.scaled(0.9)) == []


class TestBounds:
    @pytest.mark.parametrize("n, expected", [(16, 3.1365484905), (32, 3.1403311570)])
    def test_upper_bound(self, n, expected):
        assert upper_bound_perimeter(n) == pytest.approx(expected, abs=5e-11)

    def test_upper_bound_increasing_below_pi(self):
        vals = [upper_bound_perimeter(n) for n in range(3, 2000)]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert vals[-1] < math.pi

    @pytest.mark.parametrize(
        "n, expected",
        [(6, 3.0), (8, 4 * math.sqrt(2 - math.sqrt(2))), (64, 3.1403311570)],
    )
    def test_regular(self, n, expected):
        assert regular_perimeter(n) == pytest.approx(expected, abs=5e-11)

    @pytest.mark.parametrize("f", [upper_bound_perimeter, regular_perimeter])
    def test_domain(self, f):
        with pytest.raises(DomainError):
            f(2)

    @pytest.mark.parametrize("n", range(3, 80))
    def test_regular_vs_bound(self, n):
        if n % 2:
            assert abs(regular_perimeter(n) - upper_bound_perimeter(n)) <= 1e-15
        else:
            assert regular_perimeter(n) < upper_bound_perimeter(n)


# -- properties ---------------------------------------------------------------

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def convex_polygons(draw):
    n = draw(st.integers(3, 40))
    angles = sorted(draw(st.lists(st.floats(0, 2 * math.pi, exclude_max=True), min_size=n, max_size=n, unique=True)))
    r = draw(st.floats(0.1, 5))
    pts = [(r * math.cos(a), r * math.sin(a)) for a in angles]
    return Polygon(tuple(pts))


@settings(max_examples=200, deadline=None)
@given(convex_polygons(), st.floats(0, 2 * math.pi), finite, finite)
def test_perimeter_rigid_motion_invariant(p, theta, dx, dy):
    c, s = math.cos(theta), math.sin(theta)
    moved = Polygon(tuple((c * x - s * y + dx, s * x + c * y + dy) for x, y in p))
    assert perimeter(moved) == pytest.approx(perimeter(p), abs=1e-12 * max(1, perimeter(p)))


@settings(max_examples=200, deadline=None)
@given(convex_polygons())
def test_sigma_mirror_invariant(p):
    s = convexity_determinants(p)
    m = convexity_determinants(p.mirrored())
    n = len(p)
    for k in range(n):
        assert m[k] == pytest.approx(s[-k % n], abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(convex_polygons())
def test_diameter_graph_edges_are_unit(p):
    d, _ = max_pairwise_distance(p)
    unit = p.scaled(1 / d)
    report = certify(unit)
    assert report.is_small
    dmax, _ = max_pairwise_distance(unit)
    for i, j in report.diameter_pairs:
        a, b = unit[i], unit[j]
        length = math.hypot(a.x - b.x, a.y - b.y)
        assert 1 - 1e-9 <= length <= 1 + 1e-9
        assert length <= dmax + 1e-15
    assert max(
        math.hypot(unit[i].x - unit[j].x, unit[i].y - unit[j].y) for i, j in report.diameter_pairs
    ) == pytest.approx(dmax, abs=1e-15)


def test_side_lengths_close_the_polygon():
    p = poly((0, 0), (3, 0), (3, 4))
    assert list(side_lengths(p)) == [3.0, 4.0, 5.0]
