"""Right FG-modules given by one invertible matrix per group generator.

Row vectors are acted on from the right: ``v . x`` is ``v @ M(x)`` and
``M(x) M(y) = M(xy)``.  Every module validates this at construction.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .errors import ActionTooLarge, NonTerminating, NotAHomomorphism, NotASubgroup, NotInvertible, ValidationError
from .field import FiniteField
from .group import GroupTable, is_subgroup
from .linalg import Subspace

# |G| * dim^2 stored entries for the per-element matrices
MAX_ACTION_ENTRIES = 1 << 24


class FGModule:
    """A finite-dimensional right FG-module.

    ``elem_matrices[x]`` holds the matrix of group element x; all of them are
    built and checked once, when the module is created.
    """

    def __init__(self, field: FiniteField, group: GroupTable, gen_action, *, name: str | None = None):
        self.field = field
        self.group = group
        self.name = name
        mats = [la.asmatrix(m) for m in gen_action]
        if len(mats) != group.ngens:
            raise ValidationError(f"expected {group.ngens} action matrices, got {len(mats)}")
        dim = mats[0].shape[0] if mats else 0
        if not mats and group.order > 1:
            raise ValidationError("missing action matrices")
        for m in mats:
            if m.shape != (dim, dim):
                raise ValidationError(f"action matrix of shape {m.shape}, expected {(dim, dim)}")
            if m.size and (m.min() < 0 or m.max() >= field.q):
                raise ValidationError(f"matrix entry outside 0..{field.q - 1}")
        if group.order * dim * dim > MAX_ACTION_ENTRIES:
            raise ActionTooLarge(f"|G| dim^2 = {group.order * dim * dim} exceeds {MAX_ACTION_ENTRIES}")
        self.dim = dim
        for i, m in enumerate(mats):
            if dim and not la.is_invertible(field, m):
                raise NotInvertible(f"action matrix of generator {i} is singular")
            m.setflags(write=False)
        self.gen_action = tuple(mats)
        self.elem_matrices = self._build_and_validate()
        self._certificate = None

    def _build_and_validate(self) -> np.ndarray:
        G, F, d = self.group, self.field, self.dim
        E = np.empty((G.order, d, d), dtype=la.DTYPE)
        E[0] = la.identity(d)
        for x in range(1, G.order):
            E[x] = la.matmul(F, E[G.parent[x]], self.gen_action[G.parent_gen[x]])
        # M(x)M(g) = M(xg) for all x and generators g implies the full
        # homomorphism property by induction on word length.
        for x in range(G.order):
            for gi, m in enumerate(self.gen_action):
                y = int(G.right_gen[x, gi])
                if G.parent[y] == x and G.parent_gen[y] == gi:
                    continue
                if not np.array_equal(la.matmul(F, E[x], m), E[y]):
                    raise NotAHomomorphism(
                        f"M({x}) M({G.gen_indices[gi]}) != M({y})", (x, G.gen_indices[gi])
                    )
        E.setflags(write=False)
        return E

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"FGModule({label}dim={self.dim}, {self.field}, {self.group})"

    @property
    def order(self) -> int:
        return self.group.order

    def action(self, x: int) -> np.ndarray:
        return self.elem_matrices[x]

    def act(self, v, x: int) -> np.ndarray:
        return la.matmul(self.field, la.asmatrix(v, self.dim), self.elem_matrices[x])

    def full(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def traces(self) -> tuple[int, ...]:
        """Trace of every element matrix; an isomorphism invariant."""
        F = self.field
        out = []
        for x in range(self.group.order):
            t = 0
            for c in np.diagonal(self.elem_matrices[x]):
                t = F.add(t, int(c))
            out.append(int(t))
        return tuple(out)


def module_from_action(F: FiniteField, G: GroupTable, matrices, name: str | None = None) -> FGModule:
    return FGModule(F, G, matrices, name=name)


def trivial_module(F: FiniteField, G: GroupTable, dim: int = 1) -> FGModule:
    return FGModule(F, G, [la.identity(dim) for _ in range(G.ngens)], name=f"trivial^{dim}")


def regular_module(F: FiniteField, G: GroupTable) -> FGModule:
    """FG acting on itself by right multiplication; basis indexed by elements."""
    n = G.order
    mats = []
    for gi in range(G.ngens):
        m = la.zeros(n, n)
        m[np.arange(n), G.right_gen[:, gi]] = 1
        mats.append(m)
    return FGModule(F, G, mats, name=f"{F}[{G.name or 'G'}]")


# ----------------------------------------------------------------------
# group algebra elements: coefficient vectors of length |G|


def group_element(G: GroupTable, x: int) -> np.ndarray:
    a = np.zeros(G.order, dtype=la.DTYPE)
    a[x] = 1
    return a


def algebra_element(F: FiniteField, G: GroupTable, terms: dict[int, int]) -> np.ndarray:
    a = np.zeros(G.order, dtype=la.DTYPE)
    for x, c in terms.items():
        a[x] = F.add(int(a[x]), int(c) % F.q if F.is_prime_field else int(c))
    return a


def algebra_mul(F: FiniteField, G: GroupTable, a, b) -> np.ndarray:
    out = np.zeros(G.order, dtype=la.DTYPE)
    for x in np.flatnonzero(a):
        ys = np.flatnonzero(b)
        if ys.size == 0:
            break
        prods = F.mul(int(a[x]), b[ys])
        for y, c in zip(ys, np.atleast_1d(prods)):
            z = G.mult[x, y]
            out[z] = F.add(int(out[z]), int(c))
    return out


def elem_action(M: FGModule, a) -> np.ndarray:
    """Matrix of the algebra element a = sum a[x] x acting on M."""
    F = M.field
    out = la.zeros(M.dim, M.dim)
    for x in np.flatnonzero(a):
        out = la.add(F, out, la.scale(F, M.elem_matrices[x], int(a[x])))
    return out


def augmentation_ideal_chain(M: FGModule, H) -> list[Subspace]:
    """Descending chain M >= M I(H) >= M I(H)^2 >= ... ending at 0.

    ``M I(H)^{j+1}`` is spanned by ``w (h - 1)`` for w in a basis of the
    previous term and h in H.  Raises NonTerminating if the chain stalls
    above zero, which happens only when H is not a p-group.
    """
    G, F = M.group, M.field
    H = sorted(set(int(h) for h in H))
    if not is_subgroup(G, H):
        raise NotASubgroup("H is not a subgroup of G")
    shifts = [la.sub(F, M.elem_matrices[h], la.identity(M.dim)) for h in H if h != 0]
    chain = [M.full()]
    while chain[-1].dim:
        W = chain[-1]
        if not shifts:
            nxt = M.zero()
        else:
            rows = np.vstack([la.matmul(F, W.basis, s) for s in shifts])
            nxt = Subspace.span(F, rows, M.dim)
        if nxt == W:
            raise NonTerminating(f"augmentation chain stalls at dimension {W.dim}")
        chain.append(nxt)
    return chain


ideal_power_chain = augmentation_ideal_chain
