"""Recover the matching polynomial of a bipartite graph from dense-graph counts.

For a simple balanced bipartite ``g`` with ``n`` vertices per side, both
drivers build ``G_0 .. G_n``, ask an oracle for each perfect-matching count
``p_i``, and solve ``(p_0..p_n) = (m_n..m_0) H`` for the matching counts,
where ``H`` is the factorial Hankel matrix (overlay construction) or the
squared double-factorial Hankel matrix (clique construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Optional

from .counting import (
    CountOracle,
    DEFAULT_MAX_VERTICES,
    double_factorial_pm,
    exact_oracle,
    matchings_by_size,
)
from .errors import GraphError, OracleInconsistencyError, ResourceLimitError
from .exactalg import build_A, build_Q, solve_symmetric_exact
from .graphs import BipartiteMultigraph, MatchingPolynomial, augment_alpha, augment_beta

CONSTRUCTIONS = ("beta", "alpha")
DEFAULT_MAX_N = {"beta": 8, "alpha": 5}


@dataclass(frozen=True)
class ReductionReport:
    construction: str
    n: int
    p: tuple[int, ...]
    recovered: MatchingPolynomial
    oracle_calls: int
    verified: Optional[bool] = None


def _check_input(g: BipartiteMultigraph) -> int:
    if not g.balanced:
        raise GraphError(
            f"reduction needs equal sides, got {g.n_left} left and {g.n_right} right"
        )
    if not g.simple:
        raise GraphError("reduction needs a simple bipartite graph (multiplicities <= 1)")
    return g.n_left


def _run(construction, g, oracle, augment, system) -> ReductionReport:
    n = _check_input(g)
    p = []
    for i in range(n + 1):
        p.append(int(oracle(augment(g, i))))
    try:
        reversed_m = solve_symmetric_exact(system(n), p)
    except OracleInconsistencyError as exc:
        j = n - exc.index
        raise OracleInconsistencyError(
            f"oracle inconsistency: m_{j} is not an integer", index=j
        ) from exc
    m = reversed_m[::-1]
    for j, c in enumerate(m):
        if c < 0:
            raise OracleInconsistencyError(
                f"oracle inconsistency: m_{j} = {c} is negative", index=j
            )
    return ReductionReport(construction, n, tuple(p), MatchingPolynomial(m), len(p))


def reduce_beta(g: BipartiteMultigraph, oracle: CountOracle = exact_oracle) -> ReductionReport:
    """Overlay ``K_{n+i,n+i}`` on ``g`` plus ``i`` fresh vertices per side."""
    return _run("beta", g, oracle, augment_beta, build_A)


def reduce_alpha(g: BipartiteMultigraph, oracle: CountOracle = exact_oracle) -> ReductionReport:
    """Turn both sides of ``g`` plus ``i`` fresh vertices into cliques."""
    return _run("alpha", g, oracle, augment_alpha, build_Q)


def forward_counts(construction: str, m, n: int) -> tuple[int, ...]:
    """Predicted ``p_i`` from matching counts ``m`` via the completion formula.

    A size-``j`` matching leaves ``n+i-j`` free vertices per side: they
    complete in ``(n+i-j)!`` ways under the overlay and ``f(n+i-j)^2`` ways
    under the twin cliques.
    """
    if construction == "beta":
        weight = factorial
    elif construction == "alpha":
        weight = lambda t: double_factorial_pm(t) ** 2  # noqa: E731
    else:
        raise ValueError(f"unknown construction {construction!r}")
    return tuple(
        sum(weight(n + i - j) * m[j] for j in range(n + 1)) for i in range(n + 1)
    )


def verify_roundtrip(
    g: BipartiteMultigraph,
    construction: str,
    max_n: Optional[int] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ReductionReport:
    """Run a reduction with the exact oracle and compare against enumeration."""
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}")
    n = _check_input(g)
    cap = DEFAULT_MAX_N[construction] if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(f"n = {n} exceeds the {construction} cap of {cap}")

    def oracle(h):
        return exact_oracle(h, max_vertices=max_vertices)

    reducer = reduce_beta if construction == "beta" else reduce_alpha
    report = reducer(g, oracle)
    expected = matchings_by_size(g)
    return ReductionReport(
        report.construction,
        report.n,
        report.p,
        report.recovered,
        report.oracle_calls,
        verified=report.recovered == expected,
    )
