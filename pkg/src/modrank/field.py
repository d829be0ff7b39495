"""Arithmetic in GF(p^k) on integer codes.

An element sum(c_i x^i) is stored as the integer sum(c_i p^i).  Every
arithmetic method accepts Python ints or integer numpy arrays of codes and
broadcasts like numpy; scalar inputs give scalar ``int`` results.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import DegreeTooLarge, DivisionByZero, NotPrime

MAX_ORDER = 1 << 16
MAX_DEGREE = 8
# full addition table only when it stays small
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    return (p, k) if r == 1 else None


def _int_poly_rem(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by monic b over GF(p); coefficient lists low to high."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    r = [c % p for c in a[:db]]
    while r and r[-1] == 0:
        r.pop()
    return r


def _is_irreducible_mod_p(f: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    k = len(f) - 1
    if k <= 1:
        return k == 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _int_poly_rem(f, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # lexicographic in (c_0, ..., c_{k-1}); product() varies the last slot fastest
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if _is_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


class FiniteField:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus.

    Instances are immutable; use :func:`ff_make` to get the cached canonical
    instance for ``(p, k)``.
    """

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if not 1 <= k <= MAX_DEGREE or p**k > MAX_ORDER:
            raise DegreeTooLarge(f"GF({p}^{k}) exceeds the supported size")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = _smallest_irreducible(p, k)
        self.is_prime_field = k == 1
        q = self.q
        if self.is_prime_field:
            codes = np.arange(q, dtype=np.int64)
            self._neg = (-codes) % p
            self._inv = np.array([0] + [pow(a, p - 2, p) for a in range(1, q)], dtype=np.int64)
            self.primitive = next(
                g for g in range(1, q) if len({pow(g, e, p) for e in range(q - 1)}) == q - 1
            )
            return
        self._digits = np.array(
            [[(c // p**i) % p for i in range(k)] for c in range(q)], dtype=np.int64
        )
        self._powers = p ** np.arange(k, dtype=np.int64)
        self._neg = ((-self._digits) % p) @ self._powers
        self._build_log_tables()
        self._add_table = None
        if p != 2 and q <= _ADD_TABLE_LIMIT:
            d = self._digits
            self._add_table = ((d[:, None, :] + d[None, :, :]) % p) @ self._powers

    def _mulx(self, a: int) -> int:
        """Multiply the code a by x modulo the modulus."""
        p, k = self.p, self.k
        digits = [(a // p**i) % p for i in range(k)]
        top = digits[-1]
        shifted = [0] + digits[:-1]
        for i in range(k):
            shifted[i] = (shifted[i] - top * self.modulus[i]) % p
        return sum(c * p**i for i, c in enumerate(shifted))

    def _poly_mul_code(self, a: int, b: int) -> int:
        """Schoolbook product of two codes; used only while building tables."""
        p, k = self.p, self.k
        acc = 0
        term = a
        for i in range(k):
            c = (b // p**i) % p
            if c:
                acc = self._digit_add(acc, self._digit_scale(term, c))
            term = self._mulx(term)
        return acc

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        return sum((((a // p**i) + (b // p**i)) % p) * p**i for i in range(self.k))

    def _digit_scale(self, a: int, c: int) -> int:
        p = self.p
        return sum((((a // p**i) % p) * c % p) * p**i for i in range(self.k))

    def _build_log_tables(self) -> None:
        q = self.q
        order = q - 1
        for g in range(2, q):
            powers = [1]
            cur = g
            while cur != 1:
                powers.append(cur)
                cur = self._poly_mul_code(cur, g)
            if len(powers) == order:
                break
        else:
            raise AssertionError("no primitive element found")
        self.primitive = g
        log = np.zeros(q, dtype=np.int64)
        for i, c in enumerate(powers):
            log[c] = i
        # log(0) is a sentinel whose sums always land in the zero tail of exp
        log[0] = 2 * order
        exp = np.zeros(4 * order + 1, dtype=np.int64)
        cyc = np.array(powers, dtype=np.int64)
        exp[:order] = cyc
        exp[order : 2 * order] = cyc
        self._log = log
        self._exp = exp
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(order - log[1:]) % order]
        self._inv = inv

    # ------------------------------------------------------------------
    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __reduce__(self):
        return (ff_make, (self.p, self.k))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.q)

    def add(self, a, b):
        if self.is_prime_field:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return _out(self._add_table[a, b])
        s = (self._digits[a] + self._digits[b]) % self.p
        return _out(s @ self._powers)

    def neg(self, a):
        if self.is_prime_field:
            return (-a) % self.p
        return _out(self._neg[a])

    def sub(self, a, b):
        if self.is_prime_field:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.is_prime_field:
            return (a * b) % self.p
        return _out(self._exp[self._log[a] + self._log[b]])

    def inv(self, a):
        if np.isscalar(a) and int(a) == 0:
            raise DivisionByZero("inverse of zero")
        if not np.isscalar(a) and np.any(np.asarray(a) == 0):
            raise DivisionByZero("inverse of zero")
        return _out(self._inv[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, int(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return int(result)

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) -> GF(q)."""
        return n % self.p


def _out(x):
    return int(x) if isinstance(x, np.generic) else x


@lru_cache(maxsize=None)
def ff_make(p: int, k: int = 1) -> FiniteField:
    """Return the canonical field GF(p^k)."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    pk = prime_power(q)
    if pk is None:
        raise NotPrime(f"{q} is not a prime power")
    return ff_make(*pk)


def ff_add(F: FiniteField, a: int, b: int) -> int:
    return F.add(a, b)


def ff_mul(F: FiniteField, a: int, b: int) -> int:
    return F.mul(a, b)


def ff_inv(F: FiniteField, a: int) -> int:
    return F.inv(a)
