from __future__ import annotations

import numpy as np
import pytest

from modrank import linalg as la
from modrank.chop import chop, frattini, is_irreducible, semisimple_decompose, socle
from modrank.errors import NotSemisimple, ZeroModule
from modrank.fgmod import direct_sum_all, quotient_module, spin
from modrank.field import ff_make
from modrank.fixtures import intro_module
from modrank.group import named_group
from modrank.grpalg import FGModule, regular_module, trivial_module
from modrank.linalg import Subspace

from helpers import all_invariant_subspaces, is_simple_bruteforce

GF2, GF3, GF7 = ff_make(2), ff_make(3), ff_make(7)


def _signature(rep):
    return sorted((c.dim, c.multiplicity) for c in rep.classes)


def test_one_dim_is_irreducible():
    assert is_irreducible(trivial_module(GF3, named_group("S3"))).irreducible


def test_zero_module_rejected():
    with pytest.raises(ZeroModule):
        is_irreducible(trivial_module(GF3, named_group("C2"), 0))


def test_regular_c2_reducible_with_fixed_line():
    R = regular_module(GF2, named_group("C2"))
    res = is_irreducible(R)
    assert not res.irreducible
    assert res.witness.space == Subspace.span(GF2, [[1, 1]], 2)


def test_c3_two_dim_factor_irreducible():
    R = regular_module(GF2, named_group("C3"))
    S = next(c.module for c in chop(R).classes if c.dim == 2)
    assert is_irreducible(S, seed=5).irreducible
    assert is_simple_bruteforce(S)


@pytest.mark.parametrize(
    "name,q,expected",
    [
        ("C3", 2, [(1, 1), (2, 1)]),
        ("S3", 7, [(1, 1), (1, 1), (2, 2)]),
        ("S3", 2, [(1, 2), (2, 2)]),
        ("C4", 2, [(1, 4)]),
        ("Q8", 3, [(1, 1), (1, 1), (1, 1), (1, 1), (2, 2)]),
    ],
)
def test_chop_regular(name, q, expected):
    rep = chop(regular_module(ff_make(q), named_group(name)))
    assert _signature(rep) == sorted(expected)
    assert sum(c.dim * c.multiplicity for c in rep.classes) == rep.classes[0].module.group.order


def test_chop_intro():
    M, _ = intro_module(3)
    assert _signature(chop(M)) == [(1, 3)]


@pytest.mark.parametrize("name,q", [("C3", 2), ("C5", 2), ("S3", 2), ("C2xC2", 3)])
def test_factors_are_simple_by_bruteforce(name, q):
    for c in chop(regular_module(ff_make(q), named_group(name))).classes:
        if c.module.field.q ** c.dim <= 2000:
            assert is_simple_bruteforce(c.module)


def test_socle_examples():
    M, H = intro_module(3)
    assert socle(M).submodule.space == H
    R = regular_module(GF2, named_group("C2"))
    assert socle(R).submodule.space == Subspace.span(GF2, [[1, 1]], 2)
    S = regular_module(GF7, named_group("S3"))
    assert socle(S).submodule.dim == 6


def test_frattini_examples():
    M, H = intro_module(5)
    assert frattini(M).space == H
    assert frattini(regular_module(GF7, named_group("S3"))).dim == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_frattini_of_cyclic_p_group_is_augmentation_ideal(p):
    F = ff_make(p)
    G = named_group(f"C{p}")
    R = regular_module(F, G)
    fr = frattini(R).space
    assert fr.dim == p - 1
    # augmentation ideal: coordinate sum zero
    assert not np.any(fr.basis.sum(axis=1) % p)


def _maximal_intersection(M):
    subs = all_invariant_subspaces(M)
    full = M.full()
    proper = [U for U in subs if U != full]
    maximal = [U for U in proper if not any(V != U and V.contains_space(U) for V in proper)]
    out = full
    for U in maximal:
        out = la.subspace_intersect(out, U)
    return out


@pytest.mark.parametrize("name,q", [("C4", 2), ("S3", 2), ("C2xC2", 2), ("C3", 3), ("C6", 2)])
def test_frattini_against_maximal_submodules(name, q):
    R = regular_module(ff_make(q), named_group(name))
    assert frattini(R).space == _maximal_intersection(R)


def test_s4_frattini_dimension():
    # J(GF(2)S4) has codimension 1 + 4 = 5 (trivial and the 2-dim simple, each to its dimension)
    R = regular_module(GF2, named_group("S4"))
    assert frattini(R).dim == 19


def test_decompose_examples():
    G = named_group("C2")
    N = trivial_module(GF3, G, 3)
    dec = semisimple_decompose(N)
    assert dec.n == 1 and dec.widths == [3]

    M, H = intro_module(3)
    from modrank.fgmod import restrict

    dec = semisimple_decompose(restrict(M, H))
    assert dec.n == 1 and dec.widths == [2]

    dec = semisimple_decompose(regular_module(GF2, named_group("C3")))
    assert sorted(dec.widths) == [1, 1]


def test_decompose_rejects_non_semisimple():
    with pytest.raises(NotSemisimple):
        semisimple_decompose(regular_module(GF2, named_group("C2")))


@pytest.mark.parametrize("name,q", [("S3", 7), ("Q8", 3), ("C5", 2), ("A4", 5)])
def test_summands_direct_sum_to_module(name, q):
    R = regular_module(ff_make(q), named_group(name))
    dec = semisimple_decompose(R)
    total = R.zero()
    dims = 0
    for comp in dec.components:
        for U in comp.summands:
            assert spin(R, U.basis).space == U
            total = la.subspace_sum(total, U)
            dims += U.dim
    assert total.dim == dims == R.dim


@pytest.mark.parametrize("name,q", [("S3", 2), ("C4", 3), ("D4", 2), ("Q8", 2), ("A4", 2)])
def test_frattini_quotient_is_semisimple(name, q):
    R = regular_module(ff_make(q), named_group(name))
    rep = chop(R)
    fr = frattini(R, composition=rep)
    N, _, _ = quotient_module(R, fr.space)
    assert frattini(N).dim == 0
    semisimple_decompose(N)


@pytest.mark.parametrize("name,q", [("S3", 5), ("C3", 7), ("D4", 3)])
def test_maschke(name, q):
    G = named_group(name)
    R = regular_module(ff_make(q), G)
    M = direct_sum_all([R, trivial_module(ff_make(q), G, 2)])
    assert frattini(M).dim == 0


@pytest.mark.parametrize("name,q", [("S3", 7), ("D4", 2), ("A4", 2), ("C6", 3)])
def test_chop_seed_independent(name, q):
    R = regular_module(ff_make(q), named_group(name))
    ref = chop(R, 0).signature()
    for seed in range(1, 8):
        assert chop(R, seed).signature() == ref


def test_isomorphism_is_an_equivalence_on_factors():
    from modrank.fgmod import is_isomorphic_simple

    R = regular_module(GF7, named_group("S3"))
    from modrank.chop import _composition_factors
    import random

    factors = _composition_factors(R, random.Random(4))
    for a in factors:
        assert is_isomorphic_simple(a, a)[0]
        for b in factors:
            ab = is_isomorphic_simple(a, b)[0]
            assert ab == is_isomorphic_simple(b, a)[0]
            for c in factors:
                if ab and is_isomorphic_simple(b, c)[0]:
                    assert is_isomorphic_simple(a, c)[0]
