"""Exit criteria.  Each test is one criterion; conftest prints a PASS/FAIL line per test.

All comparisons are exact integer equality (zero tolerance).
"""

import random
import time
from itertools import product
from math import comb, factorial, prod

from densematch.counting import (
    count_pm_bipartite,
    count_pm_general,
    double_factorial_pm,
    matchings_by_size,
    permanent,
)
from densematch.exactalg import (
    ExactMatrix,
    build_A,
    build_B,
    build_C,
    build_Q,
    central_binomial_hankel,
    central_binomial_lower,
    central_binomial_weights,
    checkerboard_split,
    determinant,
    factorial_diagonal,
    leading_principal_minors,
    pascal_lower,
    schur_product,
)
from densematch.graphs import (
    BipartiteMultigraph,
    SimpleGraph,
    augment_alpha,
    augment_beta,
    bipartite_independence_at_most,
    independence_at_most,
    random_bipartite,
    running_example,
)
from densematch.reduction import reduce_alpha, reduce_beta, verify_roundtrip

EDGE_PROBS = (0.2, 0.5, 0.8)
ROUNDTRIP_GRAPHS = 100


def binom(a, b):
    return comb(a, b) if 0 <= b <= a else 0


def _sample(seed, sizes):
    rng = random.Random(seed)
    return [
        random_bipartite(rng.choice(sizes), rng.choice(EDGE_PROBS), rng)
        for _ in range(ROUNDTRIP_GRAPHS)
    ]


BETA_GRAPHS = _sample(410, range(1, 8))
ALPHA_GRAPHS = _sample(510, range(1, 6))


def test_roundtrip_beta_reduction():
    start = time.perf_counter()
    for g in BETA_GRAPHS:
        report = verify_roundtrip(g, "beta")
        assert report.verified is True
        assert report.recovered == matchings_by_size(g)
    assert time.perf_counter() - start < 60.0


def test_roundtrip_alpha_reduction():
    start = time.perf_counter()
    for g in ALPHA_GRAPHS:
        report = verify_roundtrip(g, "alpha")
        assert report.verified is True
        assert report.recovered == matchings_by_size(g)
    assert time.perf_counter() - start < 120.0


def test_proof_identity_suite():
    for i in range(21):
        for j in range(21):
            assert comb(i + j, j) == sum(comb(i, k) * comb(j, k) for k in range(21))
    for i in range(16):
        for j in range(16):
            tail = sum(binom(2 * i, i - k) * binom(2 * j, j - k) for k in range(1, 16))
            assert comb(2 * (i + j), i + j) == comb(2 * i, i) * comb(2 * j, j) + 2 * tail
    for t in range(21):
        assert double_factorial_pm(2 * t) * 2 ** t * factorial(t) == factorial(2 * t)
    for n in range(13):
        low, d = pascal_lower(n), factorial_diagonal(n)
        assert build_A(n) == d @ low @ low.T @ d
    for m in range(13):
        low = central_binomial_lower(m)
        assert central_binomial_hankel(m) == low @ central_binomial_weights(m) @ low.T


def test_determinant_closed_forms():
    for n in range(9):
        assert determinant(build_A(n)) == prod(factorial(i) for i in range(n + 1)) ** 2
    for m in range(11):
        assert determinant(central_binomial_hankel(m)) == 2 ** m


def test_positive_definiteness_certificates():
    mats = [build_A(n) for n in range(11)]
    mats += [build_B(n) for n in range(0, 13, 2)]
    mats += [build_C(n) for n in range(2, 13, 2)]
    mats += [build_Q(n) for n in range(11)]
    for m in mats:
        minors = leading_principal_minors(m)
        assert len(minors) == m.shape[0]
        assert all(d > 0 for d in minors)


def test_checkerboard_block_law():
    for n in range(10):
        top, bottom, off_zero = checkerboard_split(build_Q(n), n)
        assert off_zero
        if n % 2 == 0:
            b, c = build_B(n), build_C(n)
        else:
            b, c = build_B(n - 1), build_C(n + 1)
        assert top == schur_product(b, b)
        assert bottom == schur_product(c, c)
        # and the permuted matrix really is the block diagonal
        order = list(range(0, n + 1, 2)) + list(range(1, n + 1, 2))
        permuted = build_Q(n).submatrix(order, order)
        k = top.shape[0]
        block = ExactMatrix.from_function(
            n + 1, n + 1,
            lambda i, j: top[i, j] if i < k and j < k
            else bottom[i - k, j - k] if i >= k and j >= k else 0,
        )
        assert permuted == block


def test_counting_kernel_oracles():
    for k in range(13):
        assert permanent([[1] * k] * k) == factorial(k)
    for t in range(9):
        assert count_pm_general(SimpleGraph.complete(2 * t)) == prod(range(1, 2 * t, 2))
    for n in range(5):
        for bits in product((0, 1), repeat=n * n):
            g = BipartiteMultigraph(n, n, [bits[r * n:(r + 1) * n] for r in range(n)])
            assert count_pm_bipartite(g) == count_pm_general(g.to_general())


def test_construction_class_membership():
    for g in BETA_GRAPHS:
        for i in range(g.n_left + 1):
            assert bipartite_independence_at_most(augment_beta(g, i), 2)
    for g in ALPHA_GRAPHS:
        for i in range(g.n_left + 1):
            assert independence_at_most(augment_alpha(g, i), 2)


def test_worked_example_regression():
    g = running_example()
    beta, alpha = reduce_beta(g), reduce_alpha(g)
    assert beta.p == (6, 13, 44)
    assert alpha.p == (2, 3, 10)
    assert tuple(beta.recovered) == tuple(alpha.recovered) == (1, 3, 1)

