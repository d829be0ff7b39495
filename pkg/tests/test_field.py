from __future__ import annotations

import itertools
import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modrank.errors import DegreeTooLarge, DivisionByZero, NotPrime
from modrank.field import MAX_ORDER, FiniteField, ff_add, ff_inv, ff_make, ff_mul, field_of_order, prime_power


def _poly_mulmod(a, b, mod, p):
    """Schoolbook product of coefficient lists modulo a monic polynomial."""
    k = len(mod) - 1
    prod = [0] * (2 * k)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * mod[i]) % p
    return prod[:k]


def _digits(a, p, k):
    return [(a // p**i) % p for i in range(k)]


def _code(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def test_prime_field_modulus():
    F = ff_make(3, 1)
    assert F.q == 3 and F.is_prime_field
    assert tuple(F.modulus) == (0, 1)


def test_gf4_modulus_is_the_only_irreducible_quadratic():
    F = ff_make(2, 2)
    # monic quadratics x^2 + a x + b over GF(2) without a root
    irreducible = [(b, a, 1) for a in range(2) for b in range(2) if all((x * x + a * x + b) % 2 for x in range(2))]
    assert irreducible == [(1, 1, 1)]
    assert tuple(F.modulus) == irreducible[0]


def test_not_prime():
    with pytest.raises(NotPrime):
        ff_make(4, 1)


def test_degree_too_large():
    with pytest.raises(DegreeTooLarge):
        ff_make(2, 40)


def test_order_cap():
    assert MAX_ORDER == 1 << 16


@pytest.mark.parametrize(
    "pk,a,b,expected",
    [((2, 2), 2, 2, 3), ((3, 1), 2, 2, 1), ((5, 1), 3, 4, 2), ((2, 3), 2, 4, 5)],
)
def test_mul_examples(pk, a, b, expected):
    assert ff_mul(ff_make(*pk), a, b) == expected


def test_gf8_modulus():
    # (1, 0, 1) precedes (1, 1, 0): the modulus is x^3 + x^2 + 1, so x * x^2 = x^2 + 1
    assert tuple(ff_make(2, 3).modulus) == (1, 0, 1, 1)


def test_mul_by_one(small_field):
    for a in small_field.elements():
        assert ff_mul(small_field, a, 1) == a


def test_tables_against_schoolbook(small_field):
    F = small_field
    p, k = F.p, F.k
    mod = list(F.modulus)
    for a, b in itertools.product(range(F.q), repeat=2):
        da, db = _digits(a, p, k), _digits(b, p, k)
        assert ff_add(F, a, b) == _code([(x + y) % p for x, y in zip(da, db)], p)
        assert ff_mul(F, a, b) == _code(_poly_mulmod(da, db, mod, p), p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243, 256])
def test_inverse_exhaustive(q):
    F = field_of_order(q)
    a = np.arange(1, q)
    assert np.all(F.mul(a, F.inv(a)) == 1)
    with pytest.raises(DivisionByZero):
        ff_inv(F, 0)


def test_modulus_is_irreducible_and_lexicographically_first():
    F = ff_make(3, 2)
    p, k = 3, 2

    def irreducible(c):
        return all((x * x + c[1] * x + c[0]) % p for x in range(p))

    candidates = sorted(c for c in itertools.product(range(p), repeat=k) if irreducible(c))
    assert tuple(F.modulus)[:k] == candidates[0]


@pytest.mark.parametrize("q", [2, 4, 8, 9, 16, 27])
def test_primitive_element_generates(q):
    F = field_of_order(q)
    seen = {F.pow(F.primitive, e) for e in range(q - 1)}
    assert seen == set(range(1, q))


def test_prime_power_parsing():
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_pickle_roundtrip():
    F = ff_make(2, 3)
    G = pickle.loads(pickle.dumps(F))
    assert G == F and hash(G) == hash(F)


FIELDS = [ff_make(p, k) for p, k in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 4), (7, 1)]]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(F: FiniteField, data):
    n = 200
    a = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n)))
    b = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n)))
    c = np.array(data.draw(st.lists(st.integers(0, F.q - 1), min_size=n, max_size=n)))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.add(a, F.neg(a)), np.zeros(n, dtype=np.int64))
    assert np.array_equal(F.sub(F.add(a, b), b), a)


@pytest.mark.parametrize("pk", [(2, 1), (3, 1), (2, 2), (3, 2), (5, 2), (2, 5)])
def test_field_axioms_bulk(pk):
    """10^4 random triples per field."""
    F = ff_make(*pk)
    rng = np.random.default_rng(pk[0] * 10 + pk[1])
    a, b, c = (rng.integers(0, F.q, 10_000) for _ in range(3))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.add(a, b), F.add(b, a))
