"""Dense linear algebra over a prime field GF(p).

Matrices are ``numpy`` integer arrays with entries reduced into ``[0, p)``;
every routine takes the modulus explicitly.  Dimensions here are tiny
(homology of desk-scale complexes), so plain Gaussian elimination with
first-nonzero pivoting is all that is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DTYPE = np.int64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def check_modulus(p: int) -> int:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise ValueError(f"field characteristic must be prime, got {p!r}")
    if p >= 1 << 31:
        raise ValueError("modulus too large for int64 products")
    return int(p)


def as_matrix(M, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=DTYPE)
    if shape is not None:
        A = A.reshape(shape)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {A.shape}")
    return A % p


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=DTYPE)


def matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    # entries < 2**31 keep every partial sum of a desk-scale product in int64
    return (np.asarray(A, dtype=DTYPE) @ np.asarray(B, dtype=DTYPE)) % p


def rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    A = np.array(M, dtype=DTYPE) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M, p: int) -> int:
    A = np.asarray(M)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace_basis(M, p: int) -> np.ndarray:
    """Columns spanning ker M; there are ``cols - rank`` of them."""
    A = np.asarray(M, dtype=DTYPE)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return identity(cols)
    R, pivots = rref(A, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = zeros(cols, len(free))
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-R[row, f]) % p
    return basis


def solve(M, b, p: int) -> np.ndarray | None:
    """A solution x of ``M x = b``, or ``None`` when the system is inconsistent.

    ``b`` may be a vector or a matrix of right-hand sides (solved jointly).
    """
    A = np.asarray(M, dtype=DTYPE)
    rhs = np.asarray(b, dtype=DTYPE)
    vector = rhs.ndim == 1
    if vector:
        rhs = rhs[:, None]
    rows, cols = A.shape
    if rhs.shape[0] != rows:
        raise ValueError(f"shape mismatch: {A.shape} vs {rhs.shape}")
    k = rhs.shape[1]
    if rows == 0:
        x = zeros(cols, k)
        return x[:, 0] if vector else x
    R, pivots = rref(np.hstack([A % p, rhs % p]), p)
    if any(pc >= cols for pc in pivots):
        return None
    x = zeros(cols, k)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, cols:]
    return x[:, 0] if vector else x


@dataclass(frozen=True)
class Quotient:
    """Projection of GF(p)^n onto GF(p)^n / span(sub).

    ``complement`` holds standard basis vectors completing ``sub`` to a basis;
    ``project(v)`` gives the class of ``v`` in those coordinates.
    """

    p: int
    complement: np.ndarray
    projector: np.ndarray

    @property
    def dim(self) -> int:
        return self.complement.shape[1]

    def project(self, v) -> np.ndarray:
        return matmul(self.projector, np.asarray(v, dtype=DTYPE), self.p)


def quotient_map(sub, n: int, p: int) -> Quotient:
    S = np.asarray(sub, dtype=DTYPE)
    S = zeros(n, 0) if S.size == 0 else S.reshape(n, -1) % p
    k = S.shape[1]
    if rank(S, p) != k:
        raise ValueError("subspace generators are linearly dependent")
    # non-pivot columns of the echelon form of S^T index a complementary set of unit vectors
    pivots = set(rref(S.T, p)[1]) if k else set()
    free = [i for i in range(n) if i not in pivots]
    comp = zeros(n, len(free))
    for j, i in enumerate(free):
        comp[i, j] = 1
    basis = np.hstack([S, comp])
    inv = solve(basis, identity(n), p)
    assert inv is not None
    return Quotient(p, comp, inv[k:, :])


def independent_columns(M, p: int) -> np.ndarray:
    A = np.asarray(M, dtype=DTYPE)
    if A.size == 0:
        return A.reshape(A.shape[0], 0)
    pivots = rref(A, p)[1]
    return A[:, pivots] % p


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        M = rng.integers(0, p, size=(n, n), dtype=DTYPE)
        if rank(M, p) == n:
            return M


def inverse(M, p: int) -> np.ndarray:
    A = np.asarray(M, dtype=DTYPE)
    inv = solve(A, identity(A.shape[0]), p)
    if inv is None or rank(A, p) != A.shape[0]:
        raise ValueError("matrix is singular")
    return inv
