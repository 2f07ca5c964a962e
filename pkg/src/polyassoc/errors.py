"""Exception hierarchy shared by all modules.

Every error carries a stable ``name`` used verbatim in CLI messages and HTTP
error payloads.
"""


class PolyassocError(Exception):
    name = "Error"


class ValidationError(PolyassocError):
    """Bad input: maps to CLI exit code 2 and HTTP 400."""

    name = "ValidationError"


class TooFewVertices(ValidationError):
    name = "TooFewVertices"


class NotSimple(ValidationError):
    name = "NotSimple"


class CollinearTriple(ValidationError):
    name = "CollinearTriple"


class DegeneratePolygon(ValidationError):
    """Polygon was accepted with allow_degenerate but this operation needs
    general position."""

    name = "DegeneratePolygon"


class SameVertex(ValidationError):
    name = "SameVertex"


class NotADiagonal(ValidationError):
    name = "NotADiagonal"


class CrossingDiagonals(ValidationError):
    name = "CrossingDiagonals"


class NotConvexDiagonalization(ValidationError):
    name = "NotConvexDiagonalization"


class NotATriangulation(ValidationError):
    name = "NotATriangulation"


class NotABoundaryEdge(ValidationError):
    name = "NotABoundaryEdge"


class NotAFace(ValidationError):
    name = "NotAFace"


class NotABridgeDiagonal(ValidationError):
    name = "NotABridgeDiagonal"


class NotStar(ValidationError):
    name = "NotStar"


class MismatchedN(ValidationError):
    name = "MismatchedN"


class TargetEqualsVertex(ValidationError):
    name = "TargetEqualsVertex"


class BrokenChain(PolyassocError):
    name = "BrokenChain"


class CertificateNotFound(PolyassocError):
    name = "CertificateNotFound"


class RegionTooLarge(PolyassocError):
    """Enumeration hit the configured cap: maps to CLI exit 3 and HTTP 413.

    ``reached`` is the number of items enumerated before giving up, a true
    lower bound on the total.
    """

    name = "RegionTooLarge"

    def __init__(self, cap: int, reached: int, what: str = "faces"):
        self.cap = cap
        self.reached = reached
        self.what = what
        super().__init__(f"more than {cap} {what} (stopped after {reached})")
