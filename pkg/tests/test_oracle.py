from __future__ import annotations

import pytest

from modrank import linalg as la
from modrank.chop import chop
from modrank.errors import BudgetExceeded
from modrank.fgmod import direct_sum
from modrank.field import ff_make
from modrank.fixtures import intro_module, s3_gf7_simple
from modrank.group import named_group
from modrank.grpalg import regular_module, trivial_module
from modrank.linalg import Subspace
from modrank.oracle import (
    d_exhaustive,
    enumerate_submodules,
    factor_scan,
    feasible,
    frattini_bruteforce,
    projective_points,
)

from helpers import all_invariant_subspaces, min_generators_bruteforce

GF2, GF3 = ff_make(2), ff_make(3)


def test_projective_points_count():
    for F, n in [(GF2, 3), (GF3, 3), (ff_make(5), 2)]:
        pts = list(projective_points(F, n))
        assert len(pts) == (F.q**n - 1) // (F.q - 1)
        assert len({Subspace.span(F, v[None, :], n).key for v in pts}) == len(pts)


def test_simple_module_lattice():
    S = s3_gf7_simple()
    lat = enumerate_submodules(S)
    assert len(lat) == 2
    assert factor_scan(S).width == 1


def test_intro_lattice_gf2():
    M, H = intro_module(2)
    lat = enumerate_submodules(M)
    dims = sorted(U.dim for U in lat.members)
    assert dims == [0, 1, 1, 1, 2, 3]
    assert lat.members[lat.maximal()[0]] == H and len(lat.maximal()) == 1


def test_trivial_square_lattice():
    T = trivial_module(GF2, named_group("C2"), 2)
    assert len(enumerate_submodules(T)) == 5


@pytest.mark.parametrize(
    "M",
    [
        intro_module(3)[0],
        regular_module(GF2, named_group("C4")),
        regular_module(GF3, named_group("S3")),
        regular_module(GF2, named_group("C2xC2")),
        regular_module(GF2, named_group("C3")),
    ],
    ids=["intro3", "C4/2", "S3/3", "V4/2", "C3/2"],
)
def test_lattice_matches_bruteforce_closure(M):
    lat = enumerate_submodules(M)
    assert {U.key for U in lat.members} == {U.key for U in all_invariant_subspaces(M)}
    keys = {U.key for U in lat.members}
    for U in lat.members:
        for V in lat.members:
            assert la.subspace_sum(U, V).key in keys
            assert la.subspace_intersect(U, V).key in keys


def test_hasse_edges_are_covers():
    M = regular_module(GF2, named_group("C4"))
    lat = enumerate_submodules(M)
    # uniserial: a chain of length 4
    assert sorted(U.dim for U in lat.members) == [0, 1, 2, 3, 4]
    assert len(lat.hasse()) == 4


@pytest.mark.parametrize("p", [2, 3, 5])
def test_d_exhaustive_intro(p):
    M, H = intro_module(p)
    from modrank.fgmod import restrict

    assert d_exhaustive(M) == 1
    assert d_exhaustive(restrict(M, H)) == 2


def test_d_exhaustive_s3_gf7_pair():
    S = s3_gf7_simple()
    assert d_exhaustive(direct_sum(S, S)) == 1


@pytest.mark.parametrize(
    "M",
    [regular_module(GF2, named_group("C2xC2")), trivial_module(GF3, named_group("C2"), 3), intro_module(2)[0]],
    ids=["V4/2", "triv3", "intro2"],
)
def test_d_exhaustive_against_tuple_search(M):
    assert d_exhaustive(M) == min_generators_bruteforce(M)


def test_frattini_bruteforce_examples():
    M, H = intro_module(3)
    assert frattini_bruteforce(M) == H
    R = regular_module(GF2, named_group("C2"))
    assert frattini_bruteforce(R) == Subspace.span(GF2, [[1, 1]], 2)
    assert frattini_bruteforce(regular_module(ff_make(7), named_group("S3"))).dim == 0


def test_factor_scan_examples():
    M, H = intro_module(3)
    scan = factor_scan(M)
    assert scan.width == 2
    assert scan.witness == (M.zero(), H)
    assert factor_scan(regular_module(GF2, named_group("C3"))).width == 1


def test_budget_guard():
    R = regular_module(GF3, named_group("S4"))
    assert not feasible(R)
    with pytest.raises(BudgetExceeded):
        enumerate_submodules(R)
    with pytest.raises(BudgetExceeded):
        d_exhaustive(intro_module(3)[0], budget=26)
