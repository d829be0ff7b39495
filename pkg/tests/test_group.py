from __future__ import annotations

import itertools
from math import gcd

import pytest

from modrank.errors import InvalidPermutation, NotNormal, OrderLimitExceeded, PrimeDoesNotDivideOrder
from modrank.group import (
    center,
    conjugacy_classes,
    f_conjugacy_classes,
    group_from_perms,
    is_normal,
    named_group,
    p_part,
    quotient,
    sylow,
)

NAMES = ["C2", "C3", "C4", "C5", "C6", "C7", "C2xC2", "S3", "D4", "Q8", "A4", "S4"]


def _brute_classes(G):
    seen, out = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {G.conj(x, g) for g in range(G.order)}
        seen |= cls
        out.append(cls)
    return out


def test_small_groups_by_closure():
    assert group_from_perms(3, [[1, 2, 0]]).order == 3
    assert group_from_perms(3, [[1, 0, 2], [1, 2, 0]]).order == 6
    K = group_from_perms(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
    assert K.order == 4 and K.is_abelian()


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        group_from_perms(3, [[0, 0, 1]])


def test_order_cap():
    with pytest.raises(OrderLimitExceeded):
        named_group("S8")


@pytest.mark.parametrize("name,order", [("C5", 5), ("S3", 6), ("D4", 8), ("Q8", 8), ("A4", 12), ("S4", 24), ("C2xC2", 4)])
def test_orders(name, order):
    assert named_group(name).order == order


@pytest.mark.parametrize("name", NAMES)
def test_group_axioms(name):
    G = named_group(name)
    n = G.order
    for x, y, z in itertools.product(range(n), repeat=3):
        assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    for x in range(n):
        assert G.mul(x, 0) == x == G.mul(0, x)
        assert G.mul(x, G.inv[x]) == 0


def test_product_applies_left_factor_first():
    G = named_group("S3")
    for x, y in itertools.product(range(G.order), repeat=2):
        px, py, pxy = G.perms[x], G.perms[y], G.perms[G.mul(x, y)]
        assert all(pxy[i] == py[px[i]] for i in range(G.degree))


def test_abelian_classes_are_singletons():
    G = named_group("C2xC2")
    assert sorted(len(b) for b in conjugacy_classes(G)) == [1, 1, 1, 1]


@pytest.mark.parametrize("name,sizes", [("S3", [1, 2, 3]), ("Q8", [1, 1, 2, 2, 2]), ("D4", [1, 1, 2, 2, 2]), ("A4", [1, 3, 4, 4])])
def test_class_sizes(name, sizes):
    assert sorted(conjugacy_classes(named_group(name)).sizes()) == sizes


@pytest.mark.parametrize("name", NAMES)
def test_classes_match_bruteforce(name):
    G = named_group(name)
    ours = sorted(sorted(b) for b in conjugacy_classes(G))
    assert ours == sorted(sorted(c) for c in _brute_classes(G))


def test_center():
    assert len(center(named_group("C2xC2"))) == 4
    assert len(center(named_group("Q8"))) == 2
    assert len(center(named_group("S3"))) == 1


def test_sylow_s3():
    G = named_group("S3")
    s3 = sylow(G, 3)
    assert s3.order == 3 and s3.is_normal
    s2 = sylow(G, 2)
    assert s2.order == 2 and not s2.is_normal
    with pytest.raises(PrimeDoesNotDivideOrder):
        sylow(G, 5)


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("p", [2, 3])
def test_sylow_orders(name, p):
    G = named_group(name)
    if G.order % p:
        return
    P = sylow(G, p)
    assert P.order == p_part(G.order, p)
    normal_bruteforce = all(G.conj(x, g) in set(P.elements) for x in P.elements for g in range(G.order))
    assert P.is_normal == normal_bruteforce


def test_quotients():
    G = named_group("S3")
    assert quotient(G, range(G.order)).group.order == 1
    assert quotient(G, [0]).group.order == 6
    Q = quotient(G, sylow(G, 3).elements)
    assert Q.group.order == 2
    for x, y in itertools.product(range(G.order), repeat=2):
        assert Q.group.mul(int(Q.projection[x]), int(Q.projection[y])) == Q.projection[G.mul(x, y)]
    with pytest.raises(NotNormal):
        quotient(G, sylow(G, 2).elements)


@pytest.mark.parametrize("name,q,count", [("C3", 2, 2), ("C3", 4, 3), ("C5", 2, 2), ("C7", 2, 3), ("S3", 2, 2)])
def test_f_conjugacy_examples(name, q, count):
    assert len(f_conjugacy_classes(named_group(name), q)) == count


def test_f_classes_of_c3_over_gf2():
    G = named_group("C3")
    blocks = sorted(sorted(b) for b in f_conjugacy_classes(G, 2))
    assert blocks == [[0], [1, 2]]


@pytest.mark.parametrize("name", ["C3", "S3", "D4", "Q8", "A4", "C2xC2"])
def test_f_classes_equal_ordinary_when_field_is_big(name):
    G = named_group(name)
    e = G.exponent
    for q in [2, 3, 4, 5, 7, 8, 9, 13, 25]:
        if (q - 1) % e == 0:
            p = [r for r in (2, 3, 5, 7, 13) if q % r == 0][0]
            regular = sorted(sorted(b) for b in conjugacy_classes(G) if G.orders[b[0]] % p)
            assert sorted(sorted(b) for b in f_conjugacy_classes(G, q)) == regular


def test_normality_of_center():
    for name in NAMES:
        G = named_group(name)
        assert is_normal(G, center(G))
