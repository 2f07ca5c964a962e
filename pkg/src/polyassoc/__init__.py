"""polyassoc: exact-arithmetic polygon diagonalization complexes.

Builds the convex-diagonalization complex of a labeled simple polygon
(optionally with holes), its integer-coordinate and secondary-polytope
realizations, its flip graph, and the visibility/deformation machinery, all
with brute-force-verifiable exact certificates.
"""

from .errors import (
    BrokenChain,
    CertificateNotFound,
    CollinearTriple,
    CrossingDiagonals,
    DegeneratePolygon,
    MismatchedN,
    NotABoundaryEdge,
    NotABridgeDiagonal,
    NotADiagonal,
    NotAFace,
    NotATriangulation,
    NotConvexDiagonalization,
    NotSimple,
    NotStar,
    PolyassocError,
    RegionTooLarge,
    SameVertex,
    TargetEqualsVertex,
    TooFewVertices,
    ValidationError,
)
from .geom import (
    GeneralizedPolygon,
    KernelRegion,
    Point,
    Polygon,
    kernel,
    orient,
    reflex_vertices,
    region_reflex_vertices,
    triangle_area,
    validate_generalized,
    validate_polygon,
)
from .visibility import (
    VisibilityGraph,
    diagonals,
    is_diagonal,
    noncrossing,
    visibility_graph,
)
from .complexes import (
    ComplexKP,
    FlipGraph,
    ThetaComplex,
    build_complex,
    enumerate_triangulations,
    face_factorization,
    facet_removal_complex,
    flip_graph,
    hole_split,
    is_convex_diagonalization,
    minimal_convex_diagonalizations,
    noncrossing_subsets,
    theta_complex,
)

__version__ = "0.1.0"
