"""Dense univariate polynomials over a FiniteField and Berlekamp factorization.

Polynomials are lists of element codes, lowest degree first, with no
trailing zeros; the zero polynomial is ``[]``.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .errors import ZeroPolynomial
from .field import FiniteField

Poly = list


def trim(f) -> Poly:
    f = [int(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: Poly) -> int:
    return len(f) - 1


def monic(F: FiniteField, f: Poly) -> Poly:
    if not f:
        raise ZeroPolynomial("zero polynomial has no leading coefficient")
    c = F.inv(f[-1])
    return [F.mul(a, c) for a in f]


def add(F: FiniteField, f: Poly, g: Poly) -> Poly:
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return trim(F.add(a, b) for a, b in zip(f, g))


def sub(F: FiniteField, f: Poly, g: Poly) -> Poly:
    return add(F, f, [F.neg(c) for c in g])


def scale(F: FiniteField, f: Poly, c: int) -> Poly:
    return trim(F.mul(a, c) for a in f)


def mul(F: FiniteField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out)


def divmod_(F: FiniteField, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroPolynomial("division by the zero polynomial")
    r = list(f)
    dg = degree(g)
    if len(r) <= dg:
        return [], trim(r)
    lead_inv = F.inv(g[-1])
    qt = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = F.mul(c, lead_inv)
            qt[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g[j]))
    return trim(qt), trim(r[:dg])


def rem(F: FiniteField, f: Poly, g: Poly) -> Poly:
    return divmod_(F, f, g)[1]


def gcd(F: FiniteField, f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, rem(F, f, g)
    return monic(F, f) if f else []


def powmod(F: FiniteField, f: Poly, e: int, m: Poly) -> Poly:
    result = [1]
    base = rem(F, f, m)
    while e:
        if e & 1:
            result = rem(F, mul(F, result, base), m)
        base = rem(F, mul(F, base, base), m)
        e >>= 1
    return result


def derivative(F: FiniteField, f: Poly) -> Poly:
    return trim(F.mul(F.from_int(i), c) for i, c in enumerate(f))[1:] if len(f) > 1 else []


def evaluate(F: FiniteField, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return int(acc)


def _pth_root(F: FiniteField, f: Poly) -> Poly:
    # f(x) = g(x)^p with all exponents of f divisible by p
    p = F.p
    root = F.q // p
    return trim(F.pow(f[i], root) for i in range(0, len(f), p))


def squarefree_decomposition(F: FiniteField, f: Poly) -> list[tuple[Poly, int]]:
    """Monic f as a list of (squarefree factor, exponent)."""
    out: list[tuple[Poly, int]] = []
    if degree(f) < 1:
        return out
    df = derivative(F, f)
    if not df:
        return [(g, e * F.p) for g, e in squarefree_decomposition(F, _pth_root(F, f))]
    c = gcd(F, f, df)
    w = divmod_(F, f, c)[0]
    i = 1
    while degree(w) > 0:
        y = gcd(F, w, c)
        z = divmod_(F, w, y)[0]
        if degree(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(F, c, y)[0]
    if degree(c) > 0:
        out.extend((g, e * F.p) for g, e in squarefree_decomposition(F, _pth_root(F, c)))
    return out


def berlekamp(F: FiniteField, g: Poly) -> list[Poly]:
    """Split a monic squarefree polynomial into its monic irreducible factors."""
    from .linalg import kernel

    n = degree(g)
    if n <= 1:
        return [g]
    q = F.q
    Q = np.zeros((n, n), dtype=np.int64)
    xq = powmod(F, [0, 1], q, g)
    row = [1]
    for i in range(n):
        Q[i, : len(row)] = row
        row = rem(F, mul(F, row, xq), g)
    for i in range(n):
        Q[i, i] = F.sub(int(Q[i, i]), 1)
    basis = kernel(F, Q).basis
    r = basis.shape[0]
    if r == 1:
        return [g]
    factors = [g]
    for v in basis:
        h = trim(v)
        if degree(h) < 1:
            continue
        nxt = []
        for u in factors:
            if degree(u) <= 1:
                nxt.append(u)
                continue
            rest = u
            for s in range(q):
                if degree(rest) <= 1:
                    break
                d = gcd(F, rest, sub(F, h, [s]))
                if 0 < degree(d) < degree(rest):
                    nxt.append(d)
                    rest = divmod_(F, rest, d)[0]
            nxt.append(rest)
        factors = nxt
        if len(factors) == r:
            break
    assert len(factors) == r, "Berlekamp split did not reach the kernel dimension"
    return [monic(F, u) for u in factors]


def poly_factor(F: FiniteField, f) -> list[tuple[Poly, int]]:
    """Factor f into monic irreducibles with multiplicity.

    The leading coefficient is dropped; factors are sorted by degree and
    then by their coefficient codes.
    """
    f = trim(f)
    if not f:
        raise ZeroPolynomial("cannot factor the zero polynomial")
    f = monic(F, f)
    counts: Counter = Counter()
    for part, e in squarefree_decomposition(F, f):
        for h in berlekamp(F, part):
            counts[tuple(h)] += e
    return sorted(((list(h), e) for h, e in counts.items()), key=lambda t: (len(t[0]), t[0]))


def expand(F: FiniteField, factors) -> Poly:
    out = [1]
    for h, e in factors:
        for _ in range(e):
            out = mul(F, out, list(h))
    return out


def is_irreducible(F: FiniteField, f) -> bool:
    fac = poly_factor(F, f)
    return len(fac) == 1 and fac[0][1] == 1
