"""Exact perfect-matching counters and the brute-force matching enumerator.

``permanent`` is Ryser's inclusion-exclusion formula walked in Gray-code
order, so each step updates the row sums with one column instead of
recomputing them.  ``count_pm_general`` always matches the lowest unmatched
vertex and memoizes on the set of vertices still free.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, Union

from .errors import ResourceLimitError
from .graphs import BipartiteMultigraph, MatchingPolynomial, SimpleGraph

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_EDGES = 64

Graph = Union[BipartiteMultigraph, SimpleGraph]
CountOracle = Callable[[Graph], int]


def double_factorial_pm(n: int) -> int:
    """Number of perfect matchings of K_n: (n-1)!! for even n, 0 for odd n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2:
        return 0
    return math.prod(range(1, n, 2))


def _rows_of(m) -> list[tuple[int, ...]]:
    rows = [tuple(int(x) for x in r) for r in getattr(m, "rows", m)]
    if any(len(r) != len(rows) for r in rows):
        shape = (len(rows), len(rows[0]) if rows else 0)
        raise ValueError(f"permanent needs a square matrix, got {shape}")
    return rows


def _ryser_chunk(rows: Sequence[Sequence[int]], start: int, stop: int) -> int:
    """Signed Ryser sum over Gray-code positions ``start..stop-1`` (position 0 excluded)."""
    n = len(rows)
    cols = [tuple(r[j] for r in rows) for j in range(n)]
    start = max(start, 1)
    if start >= stop:
        return 0
    # Seed the row sums with the subset at Gray position start-1.
    prev = (start - 1) ^ ((start - 1) >> 1)
    sums = [0] * n
    for j in range(n):
        if prev >> j & 1:
            col = cols[j]
            for i in range(n):
                sums[i] += col[i]
    size = bin(prev).count("1")
    total = 0
    prod = math.prod
    for g in range(start, stop):
        j = (g & -g).bit_length() - 1
        col = cols[j]
        gray = g ^ (g >> 1)
        if gray >> j & 1:
            size += 1
            for i in range(n):
                sums[i] += col[i]
        else:
            size -= 1
            for i in range(n):
                sums[i] -= col[i]
        p = prod(sums)
        if p:
            total += -p if size & 1 else p
    return total


def permanent(m, workers: int = 1) -> int:
    """Exact permanent of a square nonnegative integer matrix.

    ``m`` may be an ExactMatrix or any sequence of rows.  With ``workers > 1``
    the Gray-code range is split into chunks evaluated in separate processes;
    chunk sums are exact so the result does not depend on scheduling.
    """
    rows = _rows_of(m)
    n = len(rows)
    if n == 0:
        return 1
    if any(x < 0 for r in rows for x in r):
        raise ValueError("permanent expects nonnegative entries")
    end = 1 << n
    if workers <= 1 or n < 12:
        total = _ryser_chunk(rows, 1, end)
    else:
        step = -(-end // workers)
        bounds = [(lo, min(lo + step, end)) for lo in range(0, end, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_ryser_chunk, [rows] * len(bounds), *zip(*bounds))
            total = sum(parts)
    return -total if n & 1 else total


def count_pm_bipartite(g: BipartiteMultigraph, workers: int = 1) -> int:
    if not g.balanced:
        return 0
    return permanent(g.mult, workers=workers)


def count_pm_general(g: SimpleGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    n = g.n_vertices
    if n > max_vertices:
        raise ResourceLimitError(
            f"general graph has {n} vertices, cap is {max_vertices}"
        )
    if n % 2:
        return 0
    nbrs = g.neighbor_masks()
    memo = {0: 1}

    def count(free: int) -> int:
        hit = memo.get(free)
        if hit is not None:
            return hit
        low = free & -free
        u = low.bit_length() - 1
        rest = free ^ low
        cand = nbrs[u] & rest
        total = 0
        while cand:
            bit = cand & -cand
            total += count(rest ^ bit)
            cand ^= bit
        memo[free] = total
        return total

    return count((1 << n) - 1)


def matchings_by_size(
    g: BipartiteMultigraph, max_edges: int = DEFAULT_MAX_EDGES
) -> MatchingPolynomial:
    """Count matchings of every size, parallel edges counted separately.

    Enumerates left vertex by left vertex (skip it, or match it to a free
    right vertex), memoized on the set of used right vertices.
    """
    total = g.total_multiplicity()
    if total > max_edges:
        raise ResourceLimitError(
            f"graph has total multiplicity {total}, enumeration cap is {max_edges}"
        )
    n_left = g.n_left
    k = min(g.n_left, g.n_right)
    adj = [[(v, x) for v, x in enumerate(row) if x] for row in g.mult]
    memo: dict[tuple[int, int], list[int]] = {}

    def walk(u: int, used: int) -> list[int]:
        if u == n_left:
            return [1]
        key = (u, used)
        if key in memo:
            return memo[key]
        out = list(walk(u + 1, used))
        for v, x in adj[u]:
            if used >> v & 1:
                continue
            sub = walk(u + 1, used | 1 << v)
            if len(out) < len(sub) + 1:
                out.extend([0] * (len(sub) + 1 - len(out)))
            for j, c in enumerate(sub):
                out[j + 1] += x * c
        memo[key] = out
        return out

    counts = walk(0, 0)
    counts = counts + [0] * (k + 1 - len(counts))
    return MatchingPolynomial(counts)


def exact_oracle(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Default CountOracle: permanent for bipartite graphs, memoized search otherwise."""
    if isinstance(g, BipartiteMultigraph):
        return count_pm_bipartite(g)
    return count_pm_general(g, max_vertices=max_vertices)
