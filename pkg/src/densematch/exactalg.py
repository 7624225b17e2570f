"""Exact integer matrices and the structured Hankel families of the reductions.

Everything here is integral: determinants and leading minors come from
fraction-free (Bareiss) elimination, and the linear solver back-substitutes
with exact divisibility checks instead of ever forming rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Sequence

from .counting import double_factorial_pm
from .errors import OracleInconsistencyError, SingularSystemError


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of Python ints.  ``ExactMatrix.empty()`` is the 0x0 matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix rows")
        if rows and not rows[0]:
            raise ValueError("matrix with rows but no columns")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def empty(cls) -> "ExactMatrix":
        return cls(())

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, fn) -> "ExactMatrix":
        return cls(tuple(tuple(fn(i, j) for j in range(n_cols)) for i in range(n_rows)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "ExactMatrix":
        k = len(values)
        return cls.from_function(k, k, lambda i, j: values[i] if i == j else 0)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        r, c = self.shape
        return r == c

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        (r, k), (k2, c) = self.shape, other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        return ExactMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == self.T.rows

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        cols = list(cols)
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def leading(self, k: int) -> "ExactMatrix":
        return self.submatrix(range(k), range(k))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def format(self) -> str:
        """One row per line, space-separated decimal integers."""
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def vec_mat(x: Sequence[int], a: ExactMatrix) -> tuple[int, ...]:
    """Row vector times matrix, ``x . a``."""
    r, c = a.shape
    if len(x) != r:
        raise ValueError(f"vector of length {len(x)} against {a.shape} matrix")
    return tuple(sum(x[k] * a.rows[k][j] for k in range(r)) for j in range(c))


def hankel(size: int, seq) -> ExactMatrix:
    """``size x size`` matrix with entry (i, j) = seq(i + j)."""
    values = [seq(t) for t in range(2 * size - 1)] if size else []
    return ExactMatrix.from_function(size, size, lambda i, j: values[i + j])


# -- Structured families ----------------------------------------------------

def build_A(n: int) -> ExactMatrix:
    """(n+1)x(n+1) factorial Hankel matrix, entry (i+j)!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return hankel(n + 1, factorial)


def pascal_lower(n: int) -> ExactMatrix:
    """Lower Pascal triangle ``binomial(i, k)``; ``L L^T`` is the symmetric Pascal matrix."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ExactMatrix.from_function(n + 1, n + 1, comb)


def factorial_diagonal(n: int) -> ExactMatrix:
    return ExactMatrix.diagonal([factorial(i) for i in range(n + 1)])


def _require_even(n: int, name: str):
    if n < 0 or n % 2:
        raise ValueError(f"{name} needs a nonnegative even n, got {n}")


def build_B(n: int) -> ExactMatrix:
    """(n/2+1)x(n/2+1) matrix with entry f(2(i+j))."""
    _require_even(n, "build_B")
    return hankel(n // 2 + 1, lambda t: double_factorial_pm(2 * t))


def build_C(n: int) -> ExactMatrix:
    """(n/2)x(n/2) matrix with entry f(2(i+j)+2); the 0x0 matrix at n = 0."""
    _require_even(n, "build_C")
    return hankel(n // 2, lambda t: double_factorial_pm(2 * t + 2))


def central_binomial_hankel(m: int) -> ExactMatrix:
    """(m+1)x(m+1) Hankel matrix of central binomials, entry binomial(2(i+j), i+j)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return hankel(m + 1, lambda t: comb(2 * t, t))


def central_binomial_lower(m: int) -> ExactMatrix:
    """Unit lower-triangular factor with entry binomial(2i, i-k)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return ExactMatrix.from_function(
        m + 1, m + 1, lambda i, k: comb(2 * i, i - k) if k <= i else 0
    )


def central_binomial_weights(m: int) -> ExactMatrix:
    """diag(1, 2, ..., 2) of size m+1: the k = 0 term once, every +-k pair twice."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return ExactMatrix.diagonal([1] + [2] * m)


def build_U(m: int) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Integral form of the factorial half of the B = U o V split.

    The true factor has entries (i+j)!/2^(i+j), which are not integers.  This
    returns ``(A_m, exps)`` such that ``U[i][j] = A_m[i][j] / (2**exps[i] * 2**exps[j])``.
    """
    return build_A(m), tuple(range(m + 1))


def schur_product(m1: ExactMatrix, m2: ExactMatrix) -> ExactMatrix:
    if m1.shape != m2.shape:
        raise ValueError(f"shape mismatch: {m1.shape} vs {m2.shape}")
    return ExactMatrix(
        tuple(tuple(a * b for a, b in zip(r1, r2)) for r1, r2 in zip(m1.rows, m2.rows))
    )


def build_Q(n: int) -> ExactMatrix:
    """(n+1)x(n+1) matrix with entry f(i+j)^2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return hankel(n + 1, lambda t: double_factorial_pm(t) ** 2)


def checkerboard_order(size: int) -> list[int]:
    """Even indices first, then odd ones: (0, 2, 4, ..., 1, 3, 5, ...)."""
    return list(range(0, size, 2)) + list(range(1, size, 2))


def checkerboard_split(q: ExactMatrix, n: int) -> tuple[ExactMatrix, ExactMatrix, bool]:
    """Permute rows and columns of ``q`` into even/odd order.

    Returns the even-even block, the odd-odd block, and whether both
    off-diagonal blocks are identically zero.
    """
    size = n + 1
    if q.shape != (size, size):
        raise ValueError(f"expected a {size}x{size} matrix, got {q.shape}")
    evens = list(range(0, size, 2))
    odds = list(range(1, size, 2))
    top_left = q.submatrix(evens, evens)
    bottom_right = q.submatrix(odds, odds)
    off_zero = all(q.rows[i][j] == 0 and q.rows[j][i] == 0 for i in evens for j in odds)
    return top_left, bottom_right, off_zero


def checkerboard_blocks_expected(n: int) -> tuple[ExactMatrix, ExactMatrix]:
    """The two Schur squares that the permuted Q_n should decompose into."""
    if n % 2 == 0:
        b, c = build_B(n), build_C(n)
    else:
        b, c = build_B(n - 1), build_C(n + 1)
    return schur_product(b, b), schur_product(c, c)


# -- Fraction-free elimination ----------------------------------------------

def determinant(m: ExactMatrix) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    a = m.to_lists()
    size = len(a)
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[-1][-1] if size else 1


def leading_principal_minors(m: ExactMatrix) -> tuple[int, ...]:
    """Determinants of the k x k leading blocks, k = 1..dim."""
    if not m.is_symmetric():
        raise ValueError("leading_principal_minors expects a symmetric matrix")
    a = m.to_lists()
    size = len(a)
    minors = []
    prev = 1
    # Without pivoting the k-th Bareiss pivot is the k-th leading minor.
    for k in range(size):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend(determinant(m.leading(t)) for t in range(k + 2, size + 1))
            break
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    return tuple(minors)


def is_positive_definite(m: ExactMatrix) -> bool:
    """Sylvester's criterion with exact minors."""
    return all(d > 0 for d in leading_principal_minors(m))


def solve_symmetric_exact(a: ExactMatrix, p: Sequence[int]) -> tuple[int, ...]:
    """Integer ``x`` with ``x . a = p`` (equivalently ``a x = p``).

    Raises SingularSystemError if ``a`` is singular and
    OracleInconsistencyError (with ``.index``) if the unique solution is not
    integral.
    """
    if not a.is_symmetric():
        raise ValueError("solve_symmetric_exact expects a symmetric matrix")
    size = a.shape[0]
    if len(p) != size:
        raise ValueError(f"right-hand side has length {len(p)}, expected {size}")
    rows = [list(r) + [int(b)] for r, b in zip(a.rows, p)]
    prev = 1
    for k in range(size):
        if rows[k][k] == 0:
            for r in range(k + 1, size):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    break
            else:
                raise SingularSystemError("singular system")
        pivot = rows[k][k]
        for i in range(k + 1, size):
            aik = rows[i][k]
            row_i, row_k = rows[i], rows[k]
            for j in range(k + 1, size + 1):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot

    x = [0] * size
    for k in range(size - 1, -1, -1):
        rhs = rows[k][size] - sum(rows[k][j] * x[j] for j in range(k + 1, size))
        q, r = divmod(rhs, rows[k][k])
        if r:
            raise OracleInconsistencyError(
                f"oracle inconsistency: solution component {k} is not an integer",
                index=k,
            )
        x[k] = q
    return tuple(x)


# -- Factorization certificates ---------------------------------------------

def pascal_factorization_holds(n: int) -> bool:
    """A_n == D (L L^T) D with D = diag(0!, ..., n!) and L the Pascal triangle."""
    low = pascal_lower(n)
    d = factorial_diagonal(n)
    return build_A(n) == d @ (low @ low.T) @ d


def central_binomial_factorization_holds(m: int) -> bool:
    """V_m == L diag(1, 2, ..., 2) L^T with L the central-binomial triangle."""
    low = central_binomial_lower(m)
    return central_binomial_hankel(m) == low @ central_binomial_weights(m) @ low.T


def schur_split_holds(n: int) -> bool:
    """B_n = U o V, checked integrally as 2^(i+j) * B[i][j] == A[i][j] * V[i][j]."""
    b = build_B(n)
    m = n // 2
    a, exps = build_U(m)
    v = central_binomial_hankel(m)
    return all(
        b[i, j] * 2 ** (exps[i] + exps[j]) == a[i, j] * v[i, j]
        for i in range(m + 1)
        for j in range(m + 1)
    )


def c_is_trimmed_b(n: int) -> bool:
    """C_n is B_n with the first row and last column removed."""
    b = build_B(n)
    k = n // 2
    return build_C(n) == b.submatrix(range(1, k + 1), range(k))


def checkerboard_law_holds(n: int) -> bool:
    top, bottom, off_zero = checkerboard_split(build_Q(n), n)
    exp_top, exp_bottom = checkerboard_blocks_expected(n)
    return off_zero and top == exp_top and bottom == exp_bottom
