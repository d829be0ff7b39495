from __future__ import annotations

import itertools

import numpy as np

from modrank import linalg as la
from modrank.fgmod import spin


def all_invariant_subspaces(M):
    """Every invariant subspace, by checking all subspaces spanned by up to dim vectors.

    Only for tiny modules: works through spins of all vector tuples.
    """
    F, n = M.field, M.dim
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(F.q), repeat=n) if any(v)]
    found = {M.zero().key: M.zero()}
    frontier = [M.zero()]
    while frontier:
        nxt = []
        for W in frontier:
            for v in vecs:
                if W.contains(v):
                    continue
                S = spin(M, np.vstack([W.basis, v[None, :]]) if W.dim else v[None, :]).space
                if S.key not in found:
                    found[S.key] = S
                    nxt.append(S)
        frontier = nxt
    return list(found.values())


def min_generators_bruteforce(M):
    """Smallest k such that some k-tuple of vectors spins to M (plain tuple search)."""
    F, n = M.field, M.dim
    if n == 0:
        return 0
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(F.q), repeat=n) if any(v)]
    for k in range(1, n + 1):
        for combo in itertools.combinations(range(len(vecs)), k):
            if spin(M, np.vstack([vecs[i] for i in combo])).dim == n:
                return k
    raise AssertionError("unreachable")


def is_simple_bruteforce(M) -> bool:
    return len(all_invariant_subspaces(M)) == 2


def random_invertible(F, n, rng):
    while True:
        T = rng.integers(0, F.q, size=(n, n))
        if la.is_invertible(F, T):
            return T
