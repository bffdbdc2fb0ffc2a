import pytest

from cyclosol import oracle
from cyclosol.combinat import SignedComposition, enumerate_signed_compositions
from cyclosol.cosets import (
    coset_key,
    coset_transversal,
    double_coset_count,
    double_coset_families,
    double_coset_representatives,
    element_of_tableau,
    intersection_right,
    is_transversal,
    mak_transversal,
    minimal_double_coset_elements,
    satisfies_descent_condition,
    subgroup_order,
    tableau_of,
)
from cyclosol.wreath import GroupElement, enumerate_group, group_order, length

SMALL = [(2, 2), (3, 2), (2, 3), (3, 3)]


def test_subgroup_order():
    assert subgroup_order(SignedComposition((3, -2)), 2) == 2**3 * 6 * 2
    assert subgroup_order(SignedComposition((-1, -1)), 5) == 1


@pytest.mark.parametrize("r,n", SMALL + [(2, 4)])
def test_transversal_size(r, n):
    for mu in enumerate_signed_compositions(n):
        t = coset_transversal(mu, r)
        assert len(t) == group_order(r, n) // subgroup_order(mu, r)
        assert is_transversal(t.elements, mu, r)


@pytest.mark.parametrize("r,n", SMALL)
def test_transversal_is_the_set_of_minimal_elements(r, n):
    for mu in enumerate_signed_compositions(n):
        assert oracle.brute_force_transversal(mu, r) == list(coset_transversal(mu, r).elements)


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3)])
def test_descent_characterization(r, n):
    for mu in enumerate_signed_compositions(n):
        members = set(coset_transversal(mu, r).elements)
        for g in enumerate_group(r, n):
            assert satisfies_descent_condition(g, mu) == (g in members)


def test_rejects_small_r():
    with pytest.raises(ValueError):
        coset_transversal(SignedComposition((1, -1)), 1)
    with pytest.raises(ValueError):
        mak_transversal(SignedComposition((1, -1)), 1)


def test_coset_key_is_invariant():
    r = 3
    mu = SignedComposition((2, -1))
    g = GroupElement(r, 3, (1, 2, 0), (2, 3, 1))
    for h in [GroupElement.t(r, 3, 1), GroupElement.t(r, 3, 2), GroupElement.s(r, 3, 1)]:
        assert coset_key(h * g, mu) == coset_key(g, mu)


def test_tableau_round_trip():
    mu = SignedComposition((2, -2, 1))
    for g in coset_transversal(mu, 2).elements:
        t = tableau_of(g, mu)
        assert t.is_row_standard(mu)
        assert element_of_tableau(t, mu) == g


def test_worked_example_counts():
    mu, nu = SignedComposition((3, -2)), SignedComposition((-2, -2, 1))
    for r in (2, 3):
        assert double_coset_count(mu, nu, r) == 2 * r * r + 3 * r
        assert len(minimal_double_coset_elements(mu, nu, r)) == 3 * r * r + 2 * r
        assert len(double_coset_representatives(mu, nu, r)) == 2 * r * r + 3 * r


@pytest.mark.parametrize("r,n", [(2, 3), (3, 2), (3, 3)])
def test_double_coset_count_against_brute_force(r, n):
    comps = enumerate_signed_compositions(n)
    for mu in comps:
        for nu in comps:
            assert double_coset_count(mu, nu, r) == len(oracle.double_cosets(mu, nu, r))


def test_minimal_double_coset_elements_are_minimal():
    r = 2
    mu, nu = SignedComposition((2, -1)), SignedComposition((-1, 2))
    cosets = oracle.double_cosets(mu, nu, r)
    idx = oracle.group_index(r, 3)
    minimal = set()
    for dc in cosets:
        m = min(length(idx.element(i)) for i in dc)
        minimal |= {idx.element(i) for i in dc if length(idx.element(i)) == m}
    assert minimal == set(minimal_double_coset_elements(mu, nu, r))


@pytest.mark.parametrize("r,n", [(2, 3), (3, 3)])
def test_intersection_against_subgroups(r, n):
    comps = enumerate_signed_compositions(n)
    for mu in comps:
        for nu in comps:
            for fam in double_coset_families(mu, nu):
                got = oracle.brute_intersection(mu, nu, fam.d, r)
                assert got == fam.intersection_left
                assert intersection_right(mu, nu, fam.perm) == fam.intersection_right


@pytest.mark.parametrize("r,n", SMALL)
def test_mak_transversal_is_the_ell0_minimal_set(r, n):
    for mu in enumerate_signed_compositions(n):
        mak = sorted(mak_transversal(mu, r), key=GroupElement.sort_key)
        assert oracle.brute_force_mak_transversal(mu, r) == mak


def test_mak_examples():
    assert mak_transversal(SignedComposition((1,)), 3) == [GroupElement.identity(3, 1)]
    assert len(mak_transversal(SignedComposition((-1,)), 4)) == 4
    r = 2
    got = set(mak_transversal(SignedComposition((-2,)), r))
    t1, t2, s1 = GroupElement.t(r, 2, 1), GroupElement.t(r, 2, 2), GroupElement.s(r, 2, 1)
    assert got == {GroupElement.identity(r, 2), t1, s1 * t2, s1 * t2 * t1}


def test_mak_differs_from_distinguished_for_r3():
    mu = SignedComposition((-2,))
    assert set(mak_transversal(mu, 3)) != set(coset_transversal(mu, 3).elements)
