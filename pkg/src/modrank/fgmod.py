"""Submodule calculus for FG-modules."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .errors import NotCertifiedIrreducible, NotInvariant
from .grpalg import FGModule
from .linalg import Subspace


@dataclass(frozen=True)
class Submodule:
    """A subspace of ``parent`` together with a verified-invariance flag."""

    parent: FGModule
    space: Subspace
    closed: bool = True

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        return self.space.basis


def spin_space(F, gens, vectors, n: int) -> Subspace:
    """Smallest subspace containing ``vectors`` and invariant under each matrix in gens."""
    W = Subspace.span(F, vectors, n) if len(vectors) else Subspace.zero(F, n)
    frontier = W.basis
    while frontier.shape[0] and W.dim < n:
        images = np.vstack([la.matmul(F, frontier, g) for g in gens])
        images = W.reduce(images)
        images = images[np.any(images, axis=1)]
        if images.shape[0] == 0:
            break
        new, _, _ = la.rref(F, images)
        W = Subspace.span(F, np.vstack([W.basis, new]), n)
        frontier = new
    return W


def spin(M: FGModule, vectors) -> Submodule:
    """The submodule generated by ``vectors``."""
    vecs = la.asmatrix(vectors, M.dim) if len(vectors) else la.zeros(0, M.dim)
    return Submodule(M, spin_space(M.field, M.gen_action, vecs, M.dim), True)


def is_invariant(M: FGModule, U: Subspace) -> bool:
    return all(U.contains(la.matmul(M.field, U.basis, g)) for g in M.gen_action) if U.dim else True


def submodule(M: FGModule, U: Subspace) -> Submodule:
    if not is_invariant(M, U):
        raise NotInvariant("subspace is not invariant under the group action")
    return Submodule(M, U, True)


def _as_space(U) -> Subspace:
    return U.space if isinstance(U, Submodule) else U


def restrict(M: FGModule, U) -> FGModule:
    """The module structure on U in its echelon basis."""
    U = _as_space(U)
    if not is_invariant(M, U):
        raise NotInvariant("subspace is not invariant under the group action")
    F = M.field
    mats = [U.coordinates(la.matmul(F, U.basis, g)) for g in M.gen_action]
    return FGModule(F, M.group, mats)


def quotient_module(M: FGModule, U) -> tuple[FGModule, np.ndarray, np.ndarray]:
    """M/U with its projection (n x m) and section (m x n) matrices."""
    U = _as_space(U)
    if not is_invariant(M, U):
        raise NotInvariant("subspace is not invariant under the group action")
    F = M.field
    proj, sec = la.quotient_map(U)
    mats = [la.matmul(F, la.matmul(F, sec, g), proj) for g in M.gen_action]
    return FGModule(F, M.group, mats), proj, sec


def sub_and_quotient(M: FGModule, U):
    """Return ``(sub, quot, inclusion, projection)``.

    ``inclusion`` is the echelon basis of U (rows in M), ``projection`` is
    the n x (n - dim U) matrix onto the quotient coordinates.
    """
    if isinstance(U, Submodule) and not U.closed:
        raise NotInvariant("submodule handle is not closed")
    space = _as_space(U)
    sub = restrict(M, space)
    quot, proj, _ = quotient_module(M, space)
    return sub, quot, space.basis, proj


@dataclass(frozen=True)
class HomBasis:
    source: FGModule
    target: FGModule
    basis: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def hom_space(S: FGModule, T: FGModule) -> HomBasis:
    """Basis of Hom_FG(S, T) as dim(S) x dim(T) matrices X with M_S(g) X = X M_T(g)."""
    F = S.field
    ds, dt = S.dim, T.dim
    if ds == 0 or dt == 0:
        return HomBasis(S, T, ())
    Is, It = la.identity(ds), la.identity(dt)
    blocks = []
    for a, b in zip(S.gen_action, T.gen_action):
        # row-major vec: vec(A X) = (A kron I) vec X, vec(X B) = (I kron B^T) vec X
        blocks.append(la.sub(F, la.kron(F, a, It), la.kron(F, Is, np.ascontiguousarray(b.T))))
    K = np.vstack(blocks)
    null = la.kernel(F, np.ascontiguousarray(K.T))
    basis = tuple(np.ascontiguousarray(v.reshape(ds, dt)) for v in null.basis)
    return HomBasis(S, T, basis)


def is_isomorphic_simple(S: FGModule, T: FGModule) -> tuple[bool, np.ndarray | None]:
    """Isomorphism test for certified simple modules, with an intertwiner."""
    if S._certificate is None or T._certificate is None:
        raise NotCertifiedIrreducible("both modules must be certified irreducible")
    if S.dim != T.dim:
        return False, None
    if S is T:
        return True, la.identity(S.dim)
    if S.traces() != T.traces():
        return False, None
    H = hom_space(S, T)
    if H.dim == 0:
        return False, None
    X = H.basis[0]
    assert la.is_invertible(S.field, X), "nonzero map between simple modules must be invertible"
    return True, X


def dual(M: FGModule) -> FGModule:
    """Contragredient module: g acts by the transpose of M(g^-1)."""
    G = M.group
    mats = [np.ascontiguousarray(M.elem_matrices[G.inv[g]].T) for g in G.gen_indices]
    return FGModule(M.field, G, mats)


def direct_sum(M: FGModule, N: FGModule) -> FGModule:
    F = M.field
    mats = []
    for a, b in zip(M.gen_action, N.gen_action):
        m = la.zeros(M.dim + N.dim, M.dim + N.dim)
        m[: M.dim, : M.dim] = a
        m[M.dim :, M.dim :] = b
        mats.append(m)
    return FGModule(F, M.group, mats)


def direct_sum_all(mods) -> FGModule:
    mods = list(mods)
    out = mods[0]
    for m in mods[1:]:
        out = direct_sum(out, m)
    return out


def conjugate(M: FGModule, T: np.ndarray) -> FGModule:
    """Same module in the basis given by the rows of the invertible matrix T."""
    F = M.field
    Tinv = la.inverse(F, T)
    mats = [la.matmul(F, la.matmul(F, T, g), Tinv) for g in M.gen_action]
    return FGModule(F, M.group, mats)


def annihilator_pairing(W: Subspace) -> Subspace:
    """{v : v . w = 0 for all w in W} under the standard bilinear pairing."""
    if W.dim == 0:
        return Subspace.full(W.field, W.ambient_dim)
    return la.kernel(W.field, np.ascontiguousarray(W.basis.T))
