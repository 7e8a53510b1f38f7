"""Vertex coordinates of published example polygons, rounded to 4 decimals.

Used as cross-check oracles and for rendering; never as inputs to a
construction.
"""

from .geometry import Point2, Polygon

FIXTURE_PRECISION = 1e-4

_DATA = {
    "R3plus": (
        (0.0, 0.0),
        (0.5000, 0.8660),
        (0.0, 1.0000),
        (-0.5000, 0.8660),
    ),
    "X8": (
        (0.0, 0.0),
        (0.3335, 0.1950),
        (0.4799, 0.5525),
        (0.3790, 0.9254),
        (0.0, 1.0000),
        (-0.3737, 0.9021),
        (-0.5201, 0.5446),
        (-0.3225, 0.2127),
    ),
    "H8": (
        (0.0, 0.0),
        (0.3228, 0.2134),
        (0.5000, 0.5574),
        (0.3796, 0.9251),
        (0.0, 1.0000),
        (-0.3796, 0.9251),
        (-0.5000, 0.5574),
        (-0.3228, 0.2134),
    ),
    "V8": (
        (0.0, 0.0),
        (0.2983, 0.2128),
        (0.5000, 0.5188),
        (0.4217, 0.9067),
        (0.0, 1.0000),
        (-0.4217, 0.9067),
        (-0.5000, 0.5188),
        (-0.2983, 0.2128),
    ),
    "M16": (
        (0.0, 0.0),
        (0.1875, 0.0568),
        (0.3390, 0.1811),
        (0.4315, 0.3538),
        (0.4885, 0.5412),
        (0.4922, 0.7311),
        (0.3678, 0.8885),
        (0.1950, 0.9808),
        (0.0, 1.0000),
        (-0.1950, 0.9808),
        (-0.3678, 0.8885),
        (-0.4922, 0.7311),
        (-0.4885, 0.5412),
        (-0.4315, 0.3538),
        (-0.3390, 0.1811),
        (-0.1875, 0.0568),
    ),
    "M32": (
        (0.0, 0.0),
        (0.0971, 0.0144),
        (0.1895, 0.0475),
        (0.2736, 0.0979),
        (0.3525, 0.1564),
        (0.4184, 0.2291),
        (0.4603, 0.3178),
        (0.4842, 0.4129),
        (0.4986, 0.5100),
        (0.4966, 0.6081),
        (0.4635, 0.7005),
        (0.4131, 0.7847),
        (0.3546, 0.8635),
        (0.2819, 0.9294),
        (0.1932, 0.9713),
        (0.0980, 0.9952),
        (0.0, 1.0000),
        (-0.0980, 0.9952),
        (-0.1932, 0.9713),
        (-0.2819, 0.9294),
        (-0.3546, 0.8635),
        (-0.4131, 0.7847),
        (-0.4635, 0.7005),
        (-0.4966, 0.6081),
        (-0.4986, 0.5100),
        (-0.4842, 0.4129),
        (-0.4603, 0.3178),
        (-0.4184, 0.2291),
        (-0.3525, 0.1564),
        (-0.2736, 0.0979),
        (-0.1895, 0.0475),
        (-0.0971, 0.0144),
    ),
    "B16": (
        (0.0, 0.0),
        (0.1875, 0.0569),
        (0.3604, 0.1492),
        (0.4847, 0.3006),
        (0.4960, 0.4963),
        (0.4390, 0.6838),
        (0.3465, 0.8565),
        (0.1950, 0.9808),
        (0.0, 1.0000),
        (-0.1950, 0.9808),
        (-0.3465, 0.8565),
        (-0.4390, 0.6838),
        (-0.4960, 0.4963),
        (-0.4847, 0.3006),
        (-0.3604, 0.1492),
        (-0.1875, 0.0569),
    ),
    "B32": (
        (0.0, 0.0),
        (0.0971, 0.0144),
        (0.1923, 0.0382),
        (0.2810, 0.0802),
        (0.3537, 0.1461),
        (0.4121, 0.2249),
        (0.4626, 0.3091),
        (0.4957, 0.4015),
        (0.4995, 0.4995),
        (0.4851, 0.5966),
        (0.4613, 0.6918),
        (0.4193, 0.7805),
        (0.3534, 0.8532),
        (0.2746, 0.9117),
        (0.1904, 0.9621),
        (0.0980, 0.9952),
        (0.0, 1.0000),
        (-0.0980, 0.9952),
        (-0.1904, 0.9621),
        (-0.2746, 0.9117),
        (-0.3534, 0.8532),
        (-0.4193, 0.7805),
        (-0.4613, 0.6918),
        (-0.4851, 0.5966),
        (-0.4995, 0.4995),
        (-0.4957, 0.4015),
        (-0.4626, 0.3091),
        (-0.4121, 0.2249),
        (-0.3537, 0.1461),
        (-0.2810, 0.0802),
        (-0.1923, 0.0382),
        (-0.0971, 0.0144),
    ),
    "Z32": (
        (0.0, 0.0),
        (0.0842, 0.0505),
        (0.1630, 0.1089),
        (0.2357, 0.1748),
        (0.3016, 0.2475),
        (0.3601, 0.3263),
        (0.4105, 0.4105),
        (0.4525, 0.4992),
        (0.4855, 0.5916),
        (0.4999, 0.6887),
        (0.4952, 0.7867),
        (0.4714, 0.8819),
        (0.3827, 0.9239),
        (0.2903, 0.9569),
        (0.1951, 0.9808),
        (0.0980, 0.9952),
        (0.0, 1.0000),
        (-0.0980, 0.9952),
        (-0.1951, 0.9808),
        (-0.2903, 0.9569),
        (-0.3827, 0.9239),
        (-0.4714, 0.8819),
        (-0.4952, 0.7867),
        (-0.4999, 0.6887),
        (-0.4855, 0.5916),
        (-0.4525, 0.4992),
        (-0.4105, 0.4105),
        (-0.3601, 0.3263),
        (-0.3016, 0.2475),
        (-0.2357, 0.1748),
        (-0.1630, 0.1089),
        (-0.0842, 0.0505),
    ),
    "Z64": (
        (0.0, 0.0),
        (0.0490, 0.0036),
        (0.0973, 0.0120),
        (0.1452, 0.0228),
        (0.1918, 0.0382),
        (0.2367, 0.0580),
        (0.2805, 0.0801),
        (0.3220, 0.1064),
        (0.3607, 0.1366),
        (0.3962, 0.1704),
        (0.4283, 0.2076),
        (0.4565, 0.2477),
        (0.4786, 0.2915),
        (0.4940, 0.3382),
        (0.5000, 0.3869),
        (0.4988, 0.4359),
        (0.4952, 0.4849),
        (0.4868, 0.5332),
        (0.4760, 0.5811),
        (0.4629, 0.6284),
        (0.4453, 0.6742),
        (0.4254, 0.7191),
        (0.4012, 0.7618),
        (0.3749, 0.8033),
        (0.3447, 0.8420),
        (0.3109, 0.8775),
        (0.2737, 0.9096),
        (0.2336, 0.9378),
        (0.1909, 0.9620),
        (0.1451, 0.9797),
        (0.0978, 0.9928),
        (0.0491, 0.9988),
        (0.0, 1.0000),
        (-0.0491, 0.9988),
        (-0.0978, 0.9928),
        (-0.1451, 0.9797),
        (-0.1909, 0.9620),
        (-0.2336, 0.9378),
        (-0.2737, 0.9096),
        (-0.3109, 0.8775),
        (-0.3447, 0.8420),
        (-0.3749, 0.8033),
        (-0.4012, 0.7618),
        (-0.4254, 0.7191),
        (-0.4453, 0.6742),
        (-0.4629, 0.6284),
        (-0.4760, 0.5811),
        (-0.4868, 0.5332),
        (-0.4952, 0.4849),
        (-0.4988, 0.4359),
        (-0.5000, 0.3869),
        (-0.4940, 0.3382),
        (-0.4786, 0.2915),
        (-0.4565, 0.2477),
        (-0.4283, 0.2076),
        (-0.3962, 0.1704),
        (-0.3607, 0.1366),
        (-0.3220, 0.1064),
        (-0.2805, 0.0801),
        (-0.2367, 0.0580),
        (-0.1918, 0.0382),
        (-0.1452, 0.0228),
        (-0.0973, 0.0120),
        (-0.0490, 0.0036),
    ),
}

#: Reference perimeters for each fixture, 6 decimals.
FIXTURE_PERIMETERS = {
    "R3plus": 3.035276,
    "X8": 3.090369,
    "H8": 3.095609,
    "V8": 3.121147,
    "M16": 3.134707,
    "M32": 3.140134,
    "B16": 3.135288,
    "B32": 3.140246,
    "Z32": 3.140320,
    "Z64": 3.141275,
}

#: Fixtures whose coordinates are equilateral to within the rounding slack.
#: M16 is equilateral in principle, but two of its listed sides are off by ~5e-3.
EQUILATERAL_FIXTURES = frozenset({"X8", "H8", "M32", "B16", "B32", "Z32", "Z64"})

#: Fixtures whose underlying polygon is symmetric about the vertical axis.
SYMMETRIC_FIXTURES = frozenset(set(_DATA) - {"X8"})

FIXTURE_NAMES = tuple(_DATA)


def fixture(name: str) -> Polygon:
    """Return the published vertex list for ``name`` (counterclockwise from the origin)."""
    try:
        data = _DATA[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; expected one of {', '.join(FIXTURE_NAMES)}") from None
    return Polygon(tuple(Point2(x, y) for x, y in data))
