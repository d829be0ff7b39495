"""Dense exact matrices and subspaces over a FiniteField.

Matrices are 2-d ``int64`` numpy arrays of element codes; the field is always
passed explicitly.  Vectors are rows and act on the left of matrices, so a
"kernel" is the left kernel ``{v : v M = 0}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import AmbientMismatch, SingularMatrix
from .field import FiniteField

DTYPE = np.int64


def asmatrix(M, cols: int | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=DTYPE)
    if A.ndim == 1:
        A = A.reshape(-1, cols if cols is not None else A.shape[0]) if A.size else A.reshape(0, cols or 0)
    return A


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=DTYPE)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=DTYPE)


def matmul(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if F.is_prime_field:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=DTYPE)
    for k in range(A.shape[1]):
        col = A[:, k]
        nz = np.nonzero(col)[0]
        if nz.size:
            out[nz] = F.add(out[nz], F.mul(col[nz, None], B[k][None, :]))
    return out


def add(F: FiniteField, A, B) -> np.ndarray:
    return np.asarray(F.add(np.asarray(A, dtype=DTYPE), np.asarray(B, dtype=DTYPE)), dtype=DTYPE)


def sub(F: FiniteField, A, B) -> np.ndarray:
    return np.asarray(F.sub(np.asarray(A, dtype=DTYPE), np.asarray(B, dtype=DTYPE)), dtype=DTYPE)


def scale(F: FiniteField, A, c: int) -> np.ndarray:
    return np.asarray(F.mul(np.asarray(A, dtype=DTYPE), c), dtype=DTYPE)


def kron(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    prod = F.mul(A[:, None, :, None], B[None, :, None, :])
    return np.asarray(prod, dtype=DTYPE).reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def rref(F: FiniteField, M) -> tuple[np.ndarray, tuple[int, ...], int]:
    """Reduced row-echelon form with zero rows dropped.

    Returns ``(R, pivots, rank)``; R has exactly ``rank`` rows.
    """
    A = np.array(M, dtype=DTYPE, copy=True)
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    prime = F.is_prime_field
    p = F.p
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        pv = int(A[r, c])
        if pv != 1:
            A[r] = F.mul(A[r], F.inv(pv))
        col = A[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            if prime:
                A[others] = (A[others] - col[others, None] * A[r][None, :]) % p
            else:
                A[others] = F.sub(A[others], F.mul(col[others, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], tuple(pivots), r


def rank(F: FiniteField, M) -> int:
    return rref(F, M)[2]


def inverse(F: FiniteField, M: np.ndarray) -> np.ndarray:
    n = M.shape[0]
    if M.shape != (n, n):
        raise SingularMatrix("inverse of a non-square matrix")
    R, piv, r = rref(F, np.hstack([M, identity(n)]))
    if r < n or piv[n - 1] != n - 1:
        raise SingularMatrix("matrix is singular")
    return R[:, n:]


def is_invertible(F: FiniteField, M: np.ndarray) -> bool:
    return M.shape[0] == M.shape[1] and rank(F, M) == M.shape[0]


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row space inside F^n stored by its canonical echelon basis."""

    field: FiniteField
    ambient_dim: int
    basis: np.ndarray
    pivots: tuple[int, ...]
    _key: bytes = dc_field(init=False, repr=False)

    def __post_init__(self):
        self.basis.setflags(write=False)
        object.__setattr__(self, "_key", self.basis.tobytes())

    @classmethod
    def span(cls, F: FiniteField, vectors, n: int) -> "Subspace":
        A = asmatrix(vectors, n) if len(vectors) else zeros(0, n)
        if A.shape[1] != n:
            raise AmbientMismatch(f"vectors of length {A.shape[1]} in F^{n}")
        R, piv, _ = rref(F, A)
        return cls(F, n, R, piv)

    @classmethod
    def zero(cls, F: FiniteField, n: int) -> "Subspace":
        return cls(F, n, zeros(0, n), ())

    @classmethod
    def full(cls, F: FiniteField, n: int) -> "Subspace":
        return cls(F, n, identity(n), tuple(range(n)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def key(self) -> tuple[int, bytes]:
        return (self.ambient_dim, self._key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.key == other.key and self.field == other.field

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, {self.field})"

    def reduce(self, v) -> np.ndarray:
        """Reduce vectors (1-d or rows of a 2-d array) modulo this subspace."""
        V = np.asarray(v, dtype=DTYPE)
        if self.dim == 0:
            return V.copy()
        one = V.ndim == 1
        V2 = V.reshape(1, -1) if one else V
        coeffs = V2[:, list(self.pivots)]
        out = sub(self.field, V2, matmul(self.field, coeffs, self.basis))
        return out[0] if one else out

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return other.dim <= self.dim and (other.dim == 0 or self.contains(other.basis))

    def coordinates(self, v) -> np.ndarray:
        """Coordinates of vectors already known to lie in the subspace."""
        V = np.asarray(v, dtype=DTYPE)
        return V[..., list(self.pivots)]


def _check_ambient(U: Subspace, V: Subspace) -> None:
    if U.ambient_dim != V.ambient_dim:
        raise AmbientMismatch(f"ambient dimensions {U.ambient_dim} and {V.ambient_dim}")


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    if V.dim == 0:
        return U
    if U.dim == 0:
        return V
    return Subspace.span(U.field, np.vstack([U.basis, V.basis]), U.ambient_dim)


def subspace_intersect(U: Subspace, V: Subspace) -> Subspace:
    """Zassenhaus: echelonize [[U, U], [V, 0]]; rows with zero left half span U n V."""
    _check_ambient(U, V)
    F, n = U.field, U.ambient_dim
    if U.dim == 0 or V.dim == 0:
        return Subspace.zero(F, n)
    top = np.hstack([U.basis, U.basis])
    bottom = np.hstack([V.basis, zeros(V.dim, n)])
    R, piv, _ = rref(F, np.vstack([top, bottom]))
    rows = [i for i, c in enumerate(piv) if c >= n]
    return Subspace.span(F, R[rows, n:], n)


def kernel(F: FiniteField, M) -> Subspace:
    """Left kernel {v : v M = 0} of an r x c matrix, as a subspace of F^r."""
    A = asmatrix(M)
    r, c = A.shape
    if r == 0:
        return Subspace.zero(F, 0)
    # v M = 0  <=>  M^T v^T = 0: right nullspace of M^T from its rref
    R, piv, rk = rref(F, A.T)
    free = [j for j in range(r) if j not in set(piv)]
    basis = zeros(len(free), r)
    for i, j in enumerate(free):
        basis[i, j] = 1
        for row, pc in enumerate(piv):
            basis[i, pc] = F.neg(int(R[row, j]))
    return Subspace.span(F, basis, r)


def solve_left(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray | None:
    """Some X with X A = B (rows of B in the row space of A), or None."""
    n = A.shape[0]
    R, piv, rk = rref(F, np.hstack([A.T, B.T]))
    ncols = A.shape[0]
    if any(c >= ncols for c in piv):
        return None
    X = zeros(B.shape[0], n)
    for row, c in enumerate(piv):
        X[:, c] = R[row, ncols:]
    return X


def quotient_map(U: Subspace) -> tuple[np.ndarray, np.ndarray]:
    """Projection F^n -> F^n/U and a section back, through non-pivot coordinates.

    ``projection`` is n x (n - dim U) and sends v to the non-pivot entries of
    v reduced modulo U; ``section`` is (n - dim U) x n and places quotient
    coordinates on those same non-pivot positions.
    """
    F, n = U.field, U.ambient_dim
    free = [j for j in range(n) if j not in set(U.pivots)]
    reduced = U.reduce(identity(n))
    projection = np.ascontiguousarray(reduced[:, free])
    section = zeros(len(free), n)
    for i, j in enumerate(free):
        section[i, j] = 1
    return projection, section


def mat_poly(F: FiniteField, f, A: np.ndarray) -> np.ndarray:
    """Evaluate the polynomial f (codes, low degree first) at the square matrix A."""
    n = A.shape[0]
    out = zeros(n, n)
    for c in reversed(list(f)):
        out = matmul(F, out, A)
        if c:
            out[np.arange(n), np.arange(n)] = F.add(out[np.arange(n), np.arange(n)], int(c))
    return out


def charpoly(F: FiniteField, A: np.ndarray) -> list[int]:
    """Characteristic polynomial det(xI - A) via Hessenberg reduction."""
    from . import poly

    H = np.array(A, dtype=DTYPE, copy=True)
    n = H.shape[0]
    for j in range(n - 2):
        nz = np.flatnonzero(H[j + 1 :, j])
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            H[[i, j + 1]] = H[[j + 1, i]]
            H[:, [i, j + 1]] = H[:, [j + 1, i]]
        pinv = F.inv(int(H[j + 1, j]))
        for k in range(j + 2, n):
            u = int(H[k, j])
            if u:
                u = F.mul(u, pinv)
                H[k] = F.sub(H[k], F.mul(u, H[j + 1]))
                H[:, j + 1] = F.add(H[:, j + 1], F.mul(u, H[:, k]))
    # recurrence over leading principal submatrices
    ps: list[list[int]] = [[1]]
    for m in range(1, n + 1):
        pm = poly.mul(F, [F.neg(int(H[m - 1, m - 1])), 1], ps[m - 1])
        t = 1
        for i in range(1, m):
            t = F.mul(t, int(H[m - i, m - i - 1]))
            if t == 0:
                break
            c = F.mul(t, int(H[m - 1 - i, m - 1]))
            if c:
                pm = poly.sub(F, pm, poly.scale(F, ps[m - 1 - i], c))
        ps.append(pm)
    return ps[n]
