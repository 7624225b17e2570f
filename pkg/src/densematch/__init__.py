"""Exact perfect-matching counting in dense graphs and the Hankel systems behind it."""

from .counting import (
    count_pm_bipartite,
    count_pm_general,
    double_factorial_pm,
    exact_oracle,
    matchings_by_size,
    permanent,
)
from .errors import (
    GraphError,
    OracleInconsistencyError,
    ParseError,
    ResourceLimitError,
    SingularSystemError,
)
from .exactalg import (
    ExactMatrix,
    build_A,
    build_B,
    build_C,
    build_Q,
    build_U,
    central_binomial_lower,
    checkerboard_split,
    determinant,
    is_positive_definite,
    leading_principal_minors,
    pascal_lower,
    schur_product,
    solve_symmetric_exact,
)
from .graphs import (
    BipartiteMultigraph,
    MatchingPolynomial,
    SimpleGraph,
    augment_alpha,
    augment_beta,
    bipartite_independence_at_most,
    format_graph,
    independence_at_most,
    parse_graph,
)
from .reduction import ReductionReport, reduce_alpha, reduce_beta, verify_roundtrip

__version__ = "0.1.0"
