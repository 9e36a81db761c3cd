"""Exact cluster-complex toolkit.

Enumerates the seeds of a cluster Poisson variety by matrix mutation,
cuts the cones of the associated complex out of c-matrix inequality
systems, evaluates theta functions on integral points, and (for acyclic
skew-symmetric seeds) recovers supporting-hyperplane normals from the
representation theory of the path algebra. All arithmetic is exact.
"""

from .cones import (
    ConeDescription,
    Facet,
    InequalitySystem,
    build_system,
    canonical_key,
    classify,
    conic_membership,
    contains,
)
from .errors import (
    ConventionViolation,
    DimensionMismatch,
    DualityViolation,
    ExhaustionCapExceeded,
    ExponentNegative,
    IndexOutOfRange,
    NotAcyclic,
    NotARoot,
    NotInVisitedComplex,
    NotPositive,
    NotRepresentationFinite,
    NotSkewSymmetric,
    NotSkewSymmetrizable,
    SignCoherenceViolation,
    SingularMatrix,
    XfanError,
)
from .fan import ThetaFunction, XCone, XFanReport, assemble_fan, extreme_rays, locate, theta
from .intmat import (
    IntMatrix,
    RationalMatrix,
    hnf_rows,
    integer_kernel_basis,
    primitive_vector,
)
from .laurent import LaurentPolynomial, divide_exact, poly_add, poly_mul, poly_pow
from .pattern import (
    DEFAULT_DEPTH,
    PatternCatalog,
    PatternNode,
    enumerate_pattern,
    initial_node,
    mutate_node,
    positive_c_vectors,
)
from .reptheory import (
    ARQuiverSlice,
    DerivedObject,
    Mesh,
    PathAlgebraData,
    g_vector,
    kernel_certificates,
    knit,
    normal_vector,
    path_algebra_data,
    tau_inverse_dim,
    verify_dv_gv,
)
from .seed import (
    ExchangeMatrix,
    Quiver,
    is_acyclic,
    kernel_of_p_star,
    mutate,
    p_star,
    quiver_of,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ARQuiverSlice",
    "ConeDescription",
    "ConventionViolation",
    "DEFAULT_DEPTH",
    "DerivedObject",
    "DimensionMismatch",
    "DualityViolation",
    "ExchangeMatrix",
    "ExhaustionCapExceeded",
    "ExponentNegative",
    "Facet",
    "IndexOutOfRange",
    "InequalitySystem",
    "IntMatrix",
    "LaurentPolynomial",
    "Mesh",
    "NotAcyclic",
    "NotARoot",
    "NotInVisitedComplex",
    "NotPositive",
    "NotRepresentationFinite",
    "NotSkewSymmetric",
    "NotSkewSymmetrizable",
    "PathAlgebraData",
    "PatternCatalog",
    "PatternNode",
    "Quiver",
    "RationalMatrix",
    "SignCoherenceViolation",
    "SingularMatrix",
    "ThetaFunction",
    "XCone",
    "XFanReport",
    "XfanError",
    "assemble_fan",
    "build_system",
    "canonical_key",
    "classify",
    "conic_membership",
    "contains",
    "divide_exact",
    "enumerate_pattern",
    "extreme_rays",
    "g_vector",
    "hnf_rows",
    "initial_node",
    "integer_kernel_basis",
    "is_acyclic",
    "kernel_certificates",
    "kernel_of_p_star",
    "knit",
    "locate",
    "mutate",
    "mutate_node",
    "normal_vector",
    "p_star",
    "path_algebra_data",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "positive_c_vectors",
    "primitive_vector",
    "quiver_of",
    "theta",
    "validate",
    "verify_dv_gv",
]
