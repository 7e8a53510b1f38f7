"""Convex equilateral small polygons of large perimeter.

Constructors for the regular, Reinhardt, B_n (n = 2^s), Z_32, Z_64 and H_8
polygons, the closure-equation solvers behind them, certificates for
smallness, convexity, equilaterality and symmetry, and large-n series.
"""

from .errors import (
    BracketError,
    DomainError,
    EvaluationError,
    InfeasibleError,
    InvalidPolygonError,
    NotAvailableError,
    SmallgonError,
    SolveError,
)
from .families import (
    FamilyInstance,
    nonequilateral_lower_bound,
    construct,
    construct_bn,
    construct_h8,
    construct_regular,
    construct_reinhardt,
    construct_z32,
    construct_z64,
    mossinghoff_reference,
)
from .fixtures import fixture
from .geometry import (
    CertificateReport,
    Point2,
    Polygon,
    ToleranceConfig,
    certify,
    convexity_determinants,
    diameter_graph,
    max_pairwise_distance,
    perimeter,
    regular_perimeter,
    upper_bound_perimeter,
)

__version__ = "0.1.0"
