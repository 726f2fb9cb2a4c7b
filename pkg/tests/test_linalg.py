import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bipath import linalg

PRIMES = [2, 3, 5]


def test_rank_examples():
    assert linalg.rank(linalg.identity(3), 2) == 3
    assert linalg.rank(linalg.zeros(2, 5), 2) == 0
    assert linalg.rank([[1, 1], [1, 1]], 2) == 1


def test_nullspace_examples():
    assert linalg.nullspace_basis(linalg.identity(3), 3).shape == (3, 0)
    assert linalg.nullspace_basis(linalg.zeros(4, 4), 2).shape == (4, 4)
    assert linalg.nullspace_basis([[1, 1]], 2).T.tolist() == [[1, 1]]


def test_solve_examples():
    b = np.array([1, 0, 1])
    assert linalg.solve(linalg.identity(3), b, 2).tolist() == b.tolist()
    assert linalg.solve(linalg.zeros(2, 2), [1, 0], 2) is None
    assert linalg.solve([[2]], [1], 3).tolist() == [2]


def test_quotient_examples():
    q = linalg.quotient_map(linalg.zeros(3, 0), 3, 2)
    assert q.dim == 3
    assert linalg.quotient_map(linalg.identity(2), 2, 5).dim == 0
    q = linalg.quotient_map([[1], [1]], 2, 2)
    assert q.dim == 1
    assert q.project([1, 1]).tolist() == [0]
    assert q.project([1, 0]).tolist() != [0]
    with pytest.raises(ValueError):
        linalg.quotient_map([[1, 1], [1, 1]], 2, 2)


def test_modulus_must_be_prime():
    for p in (0, 1, 4, 9):
        with pytest.raises(ValueError):
            linalg.check_modulus(p)


@st.composite
def matrices(draw, max_dim=30):
    p = draw(st.sampled_from(PRIMES))
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    # low-rank products exercise dependent rows and columns
    k = draw(st.integers(0, max(r, c, 1)))
    M = (rng.integers(0, p, (r, k)) @ rng.integers(0, p, (k, c))) % p if k else np.zeros((r, c), dtype=np.int64)
    return p, M.astype(np.int64)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_and_nullspace(pm):
    p, M = pm
    r = linalg.rank(M, p)
    assert r == linalg.rank(M.T, p)
    N = linalg.nullspace_basis(M, p)
    assert N.shape[1] == M.shape[1] - r
    assert not linalg.matmul(M, N, p).any()
    assert linalg.rank(N, p) == N.shape[1]


@settings(max_examples=60, deadline=None)
@given(matrices(15), matrices(15))
def test_rank_of_product(a, b):
    p, A = a
    _, B = b
    B = B[: A.shape[1]] % p if B.shape[0] >= A.shape[1] else np.zeros((A.shape[1], B.shape[1]), dtype=np.int64)
    r = linalg.rank(linalg.matmul(A, B, p), p)
    assert r <= min(linalg.rank(A, p), linalg.rank(B, p))


@settings(max_examples=80, deadline=None)
@given(matrices(), st.integers(0, 2**32 - 1))
def test_solve_by_substitution(pm, seed):
    p, M = pm
    rng = np.random.default_rng(seed)
    x0 = rng.integers(0, p, M.shape[1])
    b = linalg.matmul(M, x0, p)
    x = linalg.solve(M, b, p)
    assert x is not None
    assert (linalg.matmul(M, x, p) == b).all()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(0, 8), st.integers(0, 2**32 - 1))
def test_inverse(p, n, seed):
    rng = np.random.default_rng(seed)
    G = linalg.random_invertible(n, p, rng)
    assert (linalg.matmul(G, linalg.inverse(G, p), p) == linalg.identity(n)).all()
