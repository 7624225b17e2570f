"""Graph types, the two dense augmentations, class checks and the text format.

Text format (UTF-8, one item per line)::

    # comment
    bipartite <n_left> <n_right>     or     general <n>
    e <u> <v> [mult]

Indices are 0-based.  In ``bipartite`` mode ``u`` is a left vertex and ``v``
a right vertex; repeated edge lines accumulate multiplicity.  ``general``
graphs are simple: loops and multiplicities above 1 are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GraphError, ParseError


@dataclass(frozen=True)
class BipartiteMultigraph:
    """Bipartite graph stored as its biadjacency multiplicity matrix."""

    n_left: int
    n_right: int
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n_left < 0 or self.n_right < 0:
            raise GraphError("vertex counts must be nonnegative")
        mult = tuple(tuple(int(x) for x in row) for row in self.mult)
        if len(mult) != self.n_left or any(len(row) != self.n_right for row in mult):
            raise GraphError(
                f"multiplicity matrix must be {self.n_left}x{self.n_right}"
            )
        if any(x < 0 for row in mult for x in row):
            raise GraphError("edge multiplicities must be nonnegative")
        object.__setattr__(self, "mult", mult)

    @classmethod
    def from_edges(cls, n_left: int, n_right: int, edges: Iterable[tuple[int, int]]):
        rows = [[0] * n_right for _ in range(n_left)]
        for u, v in edges:
            rows[u][v] += 1
        return cls(n_left, n_right, rows)

    @classmethod
    def empty(cls, n: int) -> "BipartiteMultigraph":
        return cls(n, n, [[0] * n for _ in range(n)])

    @property
    def balanced(self) -> bool:
        return self.n_left == self.n_right

    @property
    def simple(self) -> bool:
        return all(x <= 1 for row in self.mult for x in row)

    def edges(self) -> list[tuple[int, int]]:
        """Cross pairs with nonzero multiplicity, row-major."""
        return [
            (u, v)
            for u, row in enumerate(self.mult)
            for v, x in enumerate(row)
            if x
        ]

    def total_multiplicity(self) -> int:
        return sum(sum(row) for row in self.mult)

    def to_general(self) -> "SimpleGraph":
        """The same simple graph on n_left + n_right vertices, right side shifted."""
        if not self.simple:
            raise GraphError("only simple bipartite graphs convert to SimpleGraph")
        off = self.n_left
        return SimpleGraph.from_edges(
            self.n_left + self.n_right, [(u, off + v) for u, v in self.edges()]
        )


@dataclass(frozen=True)
class SimpleGraph:
    n_vertices: int
    adj: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.n_vertices
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = tuple(tuple(bool(x) for x in row) for row in self.adj)
        if len(adj) != n or any(len(row) != n for row in adj):
            raise GraphError(f"adjacency must be {n}x{n}")
        for u in range(n):
            if adj[u][u]:
                raise GraphError(f"self-loop at vertex {u}")
            for v in range(u + 1, n):
                if adj[u][v] != adj[v][u]:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [[False] * n for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u][v] = rows[v][u] = True
        return cls(n, rows)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, combinations(range(n), 2))

    def edges(self) -> list[tuple[int, int]]:
        n = self.n_vertices
        return [(u, v) for u in range(n) for v in range(u + 1, n) if self.adj[u][v]]

    def neighbor_masks(self) -> list[int]:
        masks = []
        for row in self.adj:
            m = 0
            for v, x in enumerate(row):
                if x:
                    m |= 1 << v
            masks.append(m)
        return masks


@dataclass(frozen=True)
class MatchingPolynomial:
    """Counts ``counts[j]`` of matchings with exactly ``j`` edges."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    def __getitem__(self, j):
        return self.counts[j]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


def _require_balanced(g: BipartiteMultigraph, what: str) -> int:
    if not g.balanced:
        raise GraphError(
            f"{what} needs equal sides, got {g.n_left} left and {g.n_right} right"
        )
    return g.n_left


def augment_beta(g: BipartiteMultigraph, i: int) -> BipartiteMultigraph:
    """Add ``i`` vertices per side, then one edge between every left-right pair.

    Original pairs gain a parallel edge; all other pairs get multiplicity 1.
    """
    n = _require_balanced(g, "augment_beta")
    if i < 0:
        raise GraphError("number of added vertices must be nonnegative")
    size = n + i
    rows = [[1] * size for _ in range(size)]
    for u in range(n):
        for v in range(n):
            rows[u][v] += g.mult[u][v]
    return BipartiteMultigraph(size, size, rows)


def augment_alpha(g: BipartiteMultigraph, i: int) -> SimpleGraph:
    """Add ``i`` vertices per side and turn each side into a clique.

    Left side is vertices ``0..n+i-1``, right side ``n+i..2(n+i)-1``.  Cross
    edges are exactly those of ``g``.
    """
    n = _require_balanced(g, "augment_alpha")
    if not g.simple:
        raise GraphError("augment_alpha needs a simple bipartite graph")
    if i < 0:
        raise GraphError("number of added vertices must be nonnegative")
    side = n + i
    total = 2 * side
    rows = [[False] * total for _ in range(total)]
    for lo in (0, side):
        for u in range(lo, lo + side):
            for v in range(lo, lo + side):
                if u != v:
                    rows[u][v] = True
    for u, v in g.edges():
        rows[u][side + v] = rows[side + v][u] = True
    return SimpleGraph(total, rows)


def independence_at_most(g: SimpleGraph, k: int) -> bool:
    """True iff no ``k+1`` vertices are pairwise non-adjacent (brute force)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    adj = g.adj
    for subset in combinations(range(g.n_vertices), k + 1):
        if not any(adj[u][v] for u, v in combinations(subset, 2)):
            return False
    return True


def bipartite_independence_at_most(g: BipartiteMultigraph, k: int) -> bool:
    """True iff no ``k+1`` left and ``k+1`` right vertices span zero cross edges."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    mult = g.mult
    right_sets = list(combinations(range(g.n_right), k + 1))
    for left in combinations(range(g.n_left), k + 1):
        for right in right_sets:
            if all(mult[u][v] == 0 for u in left for v in right):
                return False
    return True


def parse_graph(text: str | Iterable[str]) -> BipartiteMultigraph | SimpleGraph:
    lines = text.splitlines() if isinstance(text, str) else text
    header = None
    n_left = n_right = 0
    counts: list[list[int]] = []

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()

        if header is None:
            kind = parts[0]
            try:
                sizes = [int(x) for x in parts[1:]]
            except ValueError:
                raise ParseError(f"non-integer vertex count in header {line!r}", lineno)
            if kind == "bipartite" and len(sizes) == 2:
                n_left, n_right = sizes
            elif kind == "general" and len(sizes) == 1:
                n_left = n_right = sizes[0]
            else:
                raise ParseError(f"malformed header {line!r}", lineno)
            if n_left < 0 or n_right < 0:
                raise ParseError("vertex counts must be nonnegative", lineno)
            header = kind
            counts = [[0] * n_right for _ in range(n_left)]
            continue

        if parts[0] != "e" or len(parts) not in (3, 4):
            raise ParseError(f"expected 'e <u> <v> [mult]', got {line!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
            m = int(parts[3]) if len(parts) == 4 else 1
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno)
        if not (0 <= u < n_left) or not (0 <= v < n_right):
            raise ParseError(f"vertex index out of range in {line!r}", lineno)
        if m < 0:
            raise ParseError("negative multiplicity", lineno)
        if m == 0:
            raise ParseError("multiplicity must be at least 1", lineno)
        if header == "general":
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            lo, hi = min(u, v), max(u, v)
            counts[lo][hi] += m
            if counts[lo][hi] > 1:
                raise ParseError(f"parallel edge {lo}-{hi} in general graph", lineno)
        else:
            counts[u][v] += m

    if header is None:
        raise ParseError("missing header ('bipartite <n> <m>' or 'general <n>')")
    if header == "bipartite":
        return BipartiteMultigraph(n_left, n_right, counts)
    edges = [(u, v) for u in range(n_left) for v in range(n_left) if counts[u][v]]
    return SimpleGraph.from_edges(n_left, edges)


def format_graph(g: BipartiteMultigraph | SimpleGraph) -> str:
    """Canonical text form; ``parse_graph(format_graph(g)) == g``."""
    if isinstance(g, BipartiteMultigraph):
        out = [f"bipartite {g.n_left} {g.n_right}"]
        for u, v in g.edges():
            m = g.mult[u][v]
            out.append(f"e {u} {v}" if m == 1 else f"e {u} {v} {m}")
    else:
        out = [f"general {g.n_vertices}"]
        out.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def cross_edges(g: SimpleGraph, side: int) -> set[tuple[int, int]]:
    """Edges between ``[0, side)`` and ``[side, 2*side)``, as (left, right) pairs."""
    return {
        (u, v - side)
        for u, v in g.edges()
        if u < side <= v
    }


def random_bipartite(n: int, p: float, rng) -> BipartiteMultigraph:
    """Simple balanced bipartite graph with independent edge probability ``p``."""
    return BipartiteMultigraph(
        n, n, [[1 if rng.random() < p else 0 for _ in range(n)] for _ in range(n)]
    )


def running_example() -> BipartiteMultigraph:
    """2x2 graph with edges (0,0), (0,1), (1,1)."""
    return BipartiteMultigraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 1)])


__all__ = [
    "BipartiteMultigraph",
    "SimpleGraph",
    "MatchingPolynomial",
    "augment_beta",
    "augment_alpha",
    "independence_at_most",
    "bipartite_independence_at_most",
    "parse_graph",
    "format_graph",
    "cross_edges",
    "random_bipartite",
    "running_example",
]
