"""Exact toolkit for homogeneous right-LCM monoids: least common multiples in
length balls, submonoid inclusion checks, Nica covariance of matrix
representations, and the Artin-monoid Nica-amenability classification."""

__version__ = "0.1.0"

from .presentations import (  # noqa: E402
    Ball,
    CoxeterMatrix,
    Element,
    HomogeneousPresentation,
    ResourceError,
    SimplicialGraph,
    alternating_product,
    artin_presentation,
    check_cancellativity,
    enumerate_ball,
    equal,
    free_presentation,
    graph_product,
    left_divides,
    parabolic_member,
    parabolic_presentation,
    saturate,
)
from .verdict import Fails, Holds, Inconclusive  # noqa: E402
from .lcm import (  # noqa: E402
    EmptyUpTo,
    InconclusiveUpTo,
    Lcm,
    ProvenEmpty,
    ideal_intersection,
    lcm,
    lcm_set,
    verify_right_lcm,
)
from .inclusions import (  # noqa: E402
    ParabolicInclusion,
    check_closed_under_factorization,
    check_preserves_orthogonality,
    check_respects_lcm,
)
from .matrices import RationalMatrix, psd  # noqa: E402
from .replab import (  # noqa: E402
    Representation,
    TruncatedRegularRep,
    build_regular_rep,
    check_covariance,
    check_wick,
    diagonal_expectation,
    extend_by_zero,
    z_functional,
)
from .artin import (  # noqa: E402
    amenability_verdict,
    classify,
    dihedral_witness_report,
    propagate_graph_product,
)

__all__ = [
    "Fails",
    "Holds",
    "Inconclusive",
    "RationalMatrix",
    "psd",
    "Ball",
    "CoxeterMatrix",
    "Element",
    "EmptyUpTo",
    "HomogeneousPresentation",
    "InconclusiveUpTo",
    "Lcm",
    "ParabolicInclusion",
    "ProvenEmpty",
    "Representation",
    "ResourceError",
    "SimplicialGraph",
    "TruncatedRegularRep",
    "alternating_product",
    "amenability_verdict",
    "artin_presentation",
    "build_regular_rep",
    "check_cancellativity",
    "check_closed_under_factorization",
    "check_covariance",
    "check_preserves_orthogonality",
    "check_respects_lcm",
    "check_wick",
    "classify",
    "diagonal_expectation",
    "dihedral_witness_report",
    "enumerate_ball",
    "equal",
    "extend_by_zero",
    "free_presentation",
    "graph_product",
    "ideal_intersection",
    "lcm",
    "lcm_set",
    "left_divides",
    "parabolic_member",
    "parabolic_presentation",
    "propagate_graph_product",
    "saturate",
    "verify_right_lcm",
    "z_functional",
]
