"""Exact construction and classification of Lie algebra extensions.

Build extensions from data ``(alpha, rho)``, extract such data from an
extension, decide equivalence and splitness, compute Chevalley-Eilenberg
cohomology and the H^3 obstruction to the existence of extensions.
"""

__version__ = "0.1.0"

from .cochains import SkewCochain, alpha_wedge, chevalley_d, delta, wedge_bracket
from .cohomology import Cohomology, CohomologyClass, class_equal, cohomology_dim, is_coboundary
from .extensions import (
    EquivalenceWitness,
    Extension,
    ExtensionData,
    OuterAction,
    build,
    central_class,
    check_data,
    decide_split_abelian,
    enumerate_extensions,
    equivalent,
    extract,
    from_outer_centerless,
    obstruction,
    pullback,
    semidirect,
    transform,
    verify_split,
)
from .liealg import (
    LieAlgebra,
    LinearMap,
    OuterAlgebra,
    Representation,
    adjoint,
    bracket,
    center,
    check_jacobi,
    derivations,
    outer,
    quotient_algebra,
)
from .ratlinalg import Matrix, Rational, Subspace, kernel, quotient, solve

__all__ = [
    "SkewCochain", "alpha_wedge", "chevalley_d", "delta", "wedge_bracket",
    "Cohomology", "CohomologyClass", "class_equal", "cohomology_dim", "is_coboundary",
    "EquivalenceWitness", "Extension", "ExtensionData", "OuterAction", "build",
    "central_class", "check_data", "decide_split_abelian", "enumerate_extensions",
    "equivalent", "extract", "from_outer_centerless", "obstruction", "pullback",
    "semidirect", "transform", "verify_split",
    "LieAlgebra", "LinearMap", "OuterAlgebra", "Representation", "adjoint", "bracket",
    "center", "check_jacobi", "derivations", "outer", "quotient_algebra",
    "Matrix", "Rational", "Subspace", "kernel", "quotient", "solve",
]
