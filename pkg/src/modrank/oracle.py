"""Brute-force ground truth for small modules.

Everything here is exhaustive: the lattice is built from the cyclic
submodule of every vector (one vector per projective point, since scalar
multiples spin to the same submodule) and closed under sums.  Every
submodule is a sum of cyclic ones, so a breadth-first search that adds one
cyclic submodule at a time reaches all of them, and the BFS depth of a
member is the least number of vectors that generate it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .errors import BudgetExceeded
from .fgmod import quotient_module, restrict, spin_space
from .grpalg import FGModule
from .linalg import Subspace

DEFAULT_BUDGET = 200_000


def feasible(M: FGModule, budget: int = DEFAULT_BUDGET) -> bool:
    return M.field.q ** M.dim <= budget


def _check(M: FGModule, budget: int) -> None:
    if not feasible(M, budget):
        raise BudgetExceeded(f"q^dim = {M.field.q}^{M.dim} exceeds the budget {budget}")


def projective_points(F, n: int):
    """One vector per 1-dimensional subspace: first nonzero entry equal to 1."""
    for lead in range(n):
        for tail in itertools.product(range(F.q), repeat=n - lead - 1):
            v = np.zeros(n, dtype=la.DTYPE)
            v[lead] = 1
            v[lead + 1 :] = tail
            yield v


@dataclass
class SubmoduleLattice:
    """All submodules of a module.

    ``d[i]`` is the least number of generators of member i, ``succ[i]`` the
    members reached from i by adding one cyclic submodule.
    """

    module: FGModule
    members: list[Subspace]
    d: list[int]
    succ: list[set[int]]
    cyclic: list[int]
    index: dict = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def top(self) -> int:
        return self.index[self.module.full().key]

    @property
    def bottom(self) -> int:
        return self.index[self.module.zero().key]

    def find(self, U: Subspace) -> int:
        return self.index[U.key]

    def upper_covers(self, i: int) -> list[int]:
        succ = sorted(self.succ[i], key=lambda j: self.members[j].dim)
        covers: list[int] = []
        for j in succ:
            Sj = self.members[j]
            if not any(self.members[c].dim < Sj.dim and Sj.contains_space(self.members[c]) for c in covers):
                covers.append(j)
        return covers

    def hasse(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in self.upper_covers(i)]

    def lower_covers(self, j: int) -> list[int]:
        return [i for i in range(len(self)) if j in self.succ[i] and j in self.upper_covers(i)]

    def maximal(self) -> list[int]:
        """Maximal proper submodules: every one-step extension is the whole module."""
        top = self.top
        return [i for i in range(len(self)) if i != top and self.succ[i] == {top}]

    def below(self, j: int) -> list[int]:
        V = self.members[j]
        return [i for i, W in enumerate(self.members) if W.dim <= V.dim and V.contains_space(W)]


def _distinct_residues(F, W: Subspace, reps: np.ndarray) -> list[int]:
    """Indices of reps whose images in F^n / W are pairwise non-proportional and nonzero.

    W + spin(v) only depends on the line through v + W, so one representative
    per such line is enough.
    """
    R = W.reduce(reps)
    live = np.flatnonzero(np.any(R, axis=1))
    if live.size == 0:
        return []
    R = R[live]
    lead = R[np.arange(R.shape[0]), np.argmax(R != 0, axis=1)]
    R = np.asarray(F.mul(R, np.asarray(F.inv(lead))[:, None]), dtype=la.DTYPE)
    _, first = np.unique(R, axis=0, return_index=True)
    return sorted(int(live[k]) for k in first)


def enumerate_submodules(M: FGModule, budget: int = DEFAULT_BUDGET) -> SubmoduleLattice:
    _check(M, budget)
    F, n = M.field, M.dim
    gens = M.gen_action
    zero = M.zero()
    cyclic: dict = {}
    for v in projective_points(F, n):
        S = spin_space(F, gens, v[None, :], n)
        cyclic.setdefault(S.key, (S, v))
    cyc = list(cyclic.values())
    reps = np.vstack([v for _, v in cyc])
    members = [zero]
    index = {zero.key: 0}
    d = [0]
    succ: list[set[int]] = [set()]
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            W = members[i]
            for c in _distinct_residues(F, W, reps):
                S = la.subspace_sum(W, cyc[c][0])
                j = index.get(S.key)
                if j is None:
                    j = len(members)
                    index[S.key] = j
                    members.append(S)
                    d.append(d[i] + 1)
                    succ.append(set())
                    nxt.append(j)
                succ[i].add(j)
        frontier = nxt
    cyc_idx = [index[C.key] for C, _ in cyc]
    return SubmoduleLattice(M, members, d, succ, cyc_idx, index)


def d_exhaustive(M: FGModule, budget: int = DEFAULT_BUDGET, lattice: SubmoduleLattice | None = None) -> int:
    """Least k such that some k vectors generate M."""
    if M.dim == 0:
        return 0
    lat = lattice if lattice is not None else enumerate_submodules(M, budget)
    return lat.d[lat.top]


def frattini_bruteforce(M: FGModule, budget: int = DEFAULT_BUDGET, lattice: SubmoduleLattice | None = None) -> Subspace:
    """Intersection of all maximal submodules."""
    if M.dim == 0:
        return M.zero()
    lat = lattice if lattice is not None else enumerate_submodules(M, budget)
    out = M.full()
    for i in lat.maximal():
        out = la.subspace_intersect(out, lat.members[i])
    return out


def radical_in_lattice(lat: SubmoduleLattice, j: int) -> Subspace:
    """Intersection of the maximal submodules of member j, read off the lattice."""
    V = lat.members[j]
    out = V
    for i in lat.lower_covers(j):
        out = la.subspace_intersect(out, lat.members[i])
    return out


@dataclass
class FactorScan:
    width: int
    witness: tuple[Subspace, Subspace] | None  # (W, V) with V/W the widest factor
    scanned: int


def factor_scan(M: FGModule, budget: int = DEFAULT_BUDGET, seed=0, lattice: SubmoduleLattice | None = None) -> FactorScan:
    """Widest semisimple homogeneous factor V/W over all lattice pairs W < V.

    V/W is semisimple exactly when W contains the radical of V, so pairs
    failing that are skipped; homogeneity is checked by chopping V/W.
    """
    from .chop import chop

    if M.dim == 0:
        return FactorScan(0, None, 0)
    lat = lattice if lattice is not None else enumerate_submodules(M, budget)
    F = M.field
    best, wit, scanned = 0, None, 0
    for j, V in enumerate(lat.members):
        if V.dim == 0:
            continue
        rad = radical_in_lattice(lat, j)
        Vmod = restrict(M, V)
        for i in lat.below(j):
            W = lat.members[i]
            if i == j or not W.contains_space(rad):
                continue
            scanned += 1
            Wc = Subspace.span(F, V.coordinates(W.basis), V.dim)
            fac, _, _ = quotient_module(Vmod, Wc)
            comp = chop(fac, seed)
            if len(comp.classes) != 1:
                continue
            width = comp.classes[0].multiplicity
            if width > best:
                best, wit = width, (W, V)
    return FactorScan(best, wit, scanned)
