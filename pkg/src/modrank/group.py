"""Finite permutation groups stored by full Cayley table.

Permutations are 0-based one-line images ``p[i] = i^p`` and act on the
right, so the product ``x*y`` applies x first: ``(x*y)[i] = y[x[i]]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .errors import (
    InvalidFieldSize,
    InvalidPermutation,
    NotASubgroup,
    NotNormal,
    OrderLimitExceeded,
    PrimeDoesNotDivideOrder,
)
from .field import prime_power

MAX_ORDER = 5000


@dataclass(frozen=True)
class Partition:
    """Disjoint blocks of element indices; blocks sorted, ordered by least member."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks) -> "Partition":
        bs = sorted((tuple(sorted(b)) for b in blocks if len(b)), key=lambda b: b[0])
        return cls(tuple(bs))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def support(self) -> set[int]:
        return {x for b in self.blocks for x in b}


class GroupTable:
    """A fully enumerated finite group.

    Element 0 is the identity; elements are numbered in BFS order from the
    identity, multiplying on the right by generators in list order.
    ``words[x]`` is the BFS word (generator positions) producing x.
    """

    def __init__(self, degree: int, generators, *, name: str | None = None):
        self.degree = int(degree)
        gens = [tuple(int(i) for i in g) for g in generators]
        for g in gens:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise InvalidPermutation(f"{list(g)} is not a permutation of 0..{self.degree - 1}")
        self.generators = tuple(gens)
        self.name = name
        ident = tuple(range(self.degree))
        elems = [ident]
        index = {ident: 0}
        parent = [-1]
        parent_gen = [-1]
        right = []
        queue = deque([0])
        while queue:
            x = queue.popleft()
            px = elems[x]
            row = []
            for gi, g in enumerate(gens):
                y = tuple(g[i] for i in px)
                j = index.get(y)
                if j is None:
                    j = len(elems)
                    if j >= MAX_ORDER:
                        raise OrderLimitExceeded(f"group order exceeds {MAX_ORDER}")
                    index[y] = j
                    elems.append(y)
                    parent.append(x)
                    parent_gen.append(gi)
                    queue.append(j)
                row.append(j)
            right.append(row)
        self.order = len(elems)
        self.perms = np.array(elems, dtype=np.int64).reshape(self.order, self.degree)
        self._index = index
        self.parent = np.array(parent, dtype=np.int64)
        self.parent_gen = np.array(parent_gen, dtype=np.int64)
        self.right_gen = np.array(right, dtype=np.int64).reshape(self.order, len(gens))
        self.gen_indices = tuple(index[g] for g in gens)
        words: list[tuple[int, ...]] = [()]
        for x in range(1, self.order):
            words.append(words[parent[x]] + (parent_gen[x],))
        self.words = tuple(words)

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"GroupTable({label}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index_of(self, perm) -> int:
        return self._index[tuple(int(i) for i in perm)]

    @cached_property
    def mult(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int32 if n < 2**31 else np.int64)
        table[:, 0] = np.arange(n)
        for y in range(1, n):
            table[:, y] = self.right_gen[table[:, self.parent[y]], self.parent_gen[y]]
        return table

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mult == 0)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        return out

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n)
        cur = idx.copy()
        out = np.zeros(n, dtype=np.int64)
        k = 1
        while not out.all():
            hit = (cur == 0) & (out == 0)
            out[hit] = k
            cur = self.mult[cur, idx]
            k += 1
        return out

    def mul(self, x: int, y: int) -> int:
        return int(self.mult[x, y])

    def power(self, x: int, e: int) -> int:
        e %= int(self.orders[x])
        result, base = 0, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return int(self.mult[self.mult[self.inv[g], x], g])

    @cached_property
    def exponent(self) -> int:
        e = 1
        for o in set(int(o) for o in self.orders):
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))


def group_from_perms(degree: int, generators, name: str | None = None) -> GroupTable:
    return GroupTable(degree, generators, name=name)


def conjugacy_classes(G: GroupTable) -> Partition:
    seen = np.zeros(G.order, dtype=bool)
    blocks = []
    for x in range(G.order):
        if seen[x]:
            continue
        orbit = [x]
        seen[x] = True
        i = 0
        while i < len(orbit):
            y = orbit[i]
            for g in G.gen_indices:
                z = G.conj(y, g)
                if not seen[z]:
                    seen[z] = True
                    orbit.append(z)
            i += 1
        blocks.append(orbit)
    return Partition.from_blocks(blocks)


def subgroup_generated(G: GroupTable, elements) -> tuple[int, ...]:
    gens = sorted({int(x) for x in elements} - {0})
    members = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.mult[x, g])
            if y not in members:
                members.add(y)
                queue.append(y)
    return tuple(sorted(members))


def is_subgroup(G: GroupTable, H) -> bool:
    H = np.array(sorted(set(int(h) for h in H)), dtype=np.int64)
    if H.size == 0 or H[0] != 0:
        return False
    prods = G.mult[np.ix_(H, H)]
    return bool(np.isin(prods, H).all())


def is_normal(G: GroupTable, H) -> bool:
    Hs = set(int(h) for h in H)
    return all(G.conj(h, g) in Hs for g in G.gen_indices for h in Hs)


def center(G: GroupTable) -> tuple[int, ...]:
    gens = list(G.gen_indices)
    M = G.mult
    return tuple(x for x in range(G.order) if all(M[x, g] == M[g, x] for g in gens))


def normalizer(G: GroupTable, H) -> tuple[int, ...]:
    Hs = set(int(h) for h in H)
    return tuple(x for x in range(G.order) if all(G.conj(h, x) in Hs for h in Hs))


def centralizer(G: GroupTable, S) -> tuple[int, ...]:
    S = [int(s) for s in S]
    M = G.mult
    return tuple(x for x in range(G.order) if all(M[x, s] == M[s, x] for s in S))


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


@dataclass(frozen=True)
class Sylow:
    elements: tuple[int, ...]
    is_normal: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def sylow(G: GroupTable, p: int) -> Sylow:
    """One Sylow p-subgroup, grown through normalizers with least-index choices."""
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide |G| = {G.order}")
    target = p_part(G.order, p)
    P: tuple[int, ...] = (0,)
    while len(P) < target:
        Ps = set(P)
        for x in normalizer(G, P):
            if x not in Ps and G.power(x, p) in Ps:
                P = subgroup_generated(G, Ps | {x})
                break
        else:  # pragma: no cover - Sylow theory guarantees a candidate
            raise AssertionError("no p-element in N(P)/P")
    return Sylow(P, is_normal(G, P))


@dataclass
class Quotient:
    group: GroupTable
    projection: np.ndarray
    cosets: tuple[tuple[int, ...], ...]


def quotient(G: GroupTable, N) -> Quotient:
    """G/N realized on the cosets of N by right multiplication."""
    N = tuple(sorted(set(int(h) for h in N)))
    if not is_subgroup(G, N):
        raise NotASubgroup("N is not a subgroup")
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    label = np.full(G.order, -1, dtype=np.int64)
    cosets = []
    for x in range(G.order):
        if label[x] < 0:
            coset = tuple(sorted(int(G.mult[x, h]) for h in N))
            label[list(coset)] = len(cosets)
            cosets.append(coset)
    m = len(cosets)
    perms = []
    for g in G.gen_indices:
        perms.append([int(label[G.mult[c[0], g]]) for c in cosets])
    Q = GroupTable(m, perms, name=f"{G.name}/N" if G.name else None)
    proj = np.zeros(G.order, dtype=np.int64)
    for y in range(1, G.order):
        proj[y] = Q.right_gen[proj[G.parent[y]], G.parent_gen[y]]
    return Quotient(Q, proj, tuple(cosets))


def p_regular_elements(G: GroupTable, p: int) -> list[int]:
    return [x for x in range(G.order) if int(G.orders[x]) % p]


def f_conjugacy_classes(G: GroupTable, q: int) -> Partition:
    """Classes of p-regular elements fused under x -> x^q (p = char GF(q))."""
    pk = prime_power(int(q))
    if pk is None:
        raise InvalidFieldSize(f"{q} is not a prime power")
    p = pk[0]
    classes = conjugacy_classes(G)
    owner = {}
    reg_blocks = [b for b in classes if int(G.orders[b[0]]) % p]
    for i, b in enumerate(reg_blocks):
        for x in b:
            owner[x] = i
    parent = list(range(len(reg_blocks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, b in enumerate(reg_blocks):
        j = owner[G.power(b[0], q)]
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    merged: dict[int, list[int]] = {}
    for i, b in enumerate(reg_blocks):
        merged.setdefault(find(i), []).extend(b)
    return Partition.from_blocks(merged.values())


def p_regular_class_count(G: GroupTable, p: int) -> int:
    """Number of conjugacy classes of p-regular elements (the split-field count)."""
    return sum(1 for b in conjugacy_classes(G) if int(G.orders[b[0]]) % p)


# ----------------------------------------------------------------------
# named groups used by fixtures and tests


def _cycle_perm(degree: int, cycle, offset: int = 0) -> list[int]:
    p = list(range(degree))
    c = [offset + i for i in cycle]
    for a, b in zip(c, c[1:] + c[:1]):
        p[a] = b
    return p


def cyclic(n: int) -> GroupTable:
    if n == 1:
        return GroupTable(1, [[0]], name="C1")
    return GroupTable(n, [_cycle_perm(n, range(n))], name=f"C{n}")


def direct_product_cyclic(*ns: int) -> GroupTable:
    degree = sum(ns)
    gens = []
    off = 0
    for n in ns:
        gens.append(_cycle_perm(degree, range(n), off))
        off += n
    return GroupTable(degree, gens, name="x".join(f"C{n}" for n in ns))


def symmetric(n: int) -> GroupTable:
    if n <= 2:
        return cyclic(n) if n == 2 else GroupTable(1, [[0]], name="S1")
    return GroupTable(n, [_cycle_perm(n, [0, 1]), _cycle_perm(n, range(n))], name=f"S{n}")


def alternating(n: int) -> GroupTable:
    gens = [_cycle_perm(n, [0, 1, i]) for i in range(2, n)]
    return GroupTable(n, gens, name=f"A{n}")


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n acting on an n-gon."""
    rot = _cycle_perm(n, range(n))
    refl = [(-i) % n for i in range(n)]
    return GroupTable(n, [rot, refl], name=f"D{n}")


def quaternion() -> GroupTable:
    """Q8 in its regular permutation representation on 8 points."""
    # element (s, u): sign s in {0,1}, unit u in 1,i,j,k -> index 4*s + u
    table = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def right_mult(unit: int) -> list[int]:
        out = []
        for idx in range(8):
            s, u = divmod(idx, 4)
            sign, w = table[(u, unit)]
            out.append(4 * ((s + sign) % 2) + w)
        return out

    return GroupTable(8, [right_mult(1), right_mult(2)], name="Q8")


def named_group(name: str) -> GroupTable:
    """Parse names like C3, S4, A4, D4 (order 8), Q8, C2xC2."""
    key = name.strip()
    if "x" in key:
        parts = key.split("x")
        if all(p.startswith("C") and p[1:].isdigit() for p in parts):
            return direct_product_cyclic(*(int(p[1:]) for p in parts))
    if key == "Q8":
        return quaternion()
    if key[:1] in "CSAD" and key[1:].isdigit():
        n = int(key[1:])
        if key[0] == "C":
            return cyclic(n)
        if key[0] == "S":
            return symmetric(n)
        if key[0] == "A":
            return alternating(n)
        return dihedral(n)
    raise ValueError(f"unknown group name {name!r}")
