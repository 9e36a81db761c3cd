"""Exception types shared across the package.

Every domain failure raises a subclass of :class:`XfanError`; the CLI maps
these to exit code 2. Plain ``ValueError`` is reserved for malformed caller
input (bad shapes, unparseable vectors), which the CLI maps to exit code 1.
"""


class XfanError(Exception):
    """Base class for all domain errors."""


class SingularMatrix(XfanError):
    """Square matrix with determinant zero passed to inverse()."""


class ExponentNegative(XfanError):
    """Negative power requested of a polynomial that is not an invertible monomial."""


class NotSkewSymmetrizable(XfanError):
    """No positive integer diagonal D makes D.B skew-symmetric."""


class NotSkewSymmetric(XfanError):
    """Operation requires B with B^T = -B (unit skew-symmetrizer)."""


class IndexOutOfRange(XfanError):
    """Mutation direction outside 1..n."""


class DimensionMismatch(XfanError):
    """Vector length does not match the matrix rank n."""


class NotAcyclic(XfanError):
    """Quiver has an oriented cycle."""


class DualityViolation(XfanError):
    """G_t . C_t^T != I at some node; indicates an implementation bug."""


class SignCoherenceViolation(XfanError):
    """A c-matrix column with mixed signs; indicates an implementation bug."""


class ConventionViolation(XfanError):
    """A convention oracle failed (Cartan identity, mesh cross-check)."""


class NotRepresentationFinite(XfanError):
    """Exhaustive knitting requested for a quiver that is not of Dynkin type."""


class NotPositive(XfanError):
    """c-vector with a negative entry (or zero) where a positive one is required."""


class NotARoot(XfanError):
    """c-vector is not a module dimension vector of the knitted slice."""


class NotInVisitedComplex(XfanError):
    """No visited cone contains the requested integral point.

    ``reason`` is "outside_complex" when the catalog is complete (the point
    genuinely lies outside the support of the complex) and "beyond_depth"
    when the search was truncated and the point might live in an unvisited
    cone.
    """

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason


class ExhaustionCapExceeded(XfanError):
    """--exhaustive hit the hard node cap before the frontier emptied."""
