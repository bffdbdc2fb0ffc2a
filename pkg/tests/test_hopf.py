from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclosol.combinat import SignedComposition, enumerate_signed_compositions
from cyclosol.hopf import (
    GradedElement,
    GradedTensor,
    antipode,
    basis_up_to,
    check_antipode,
    check_coassociativity,
    check_counit,
    check_internal_bialgebra,
    check_primitive,
    check_round_trip,
    check_shuffle_bialgebra,
    coproduct,
    counit,
    expand_in_primitives,
    from_primitives,
    group_coproduct,
    internal_product,
    is_unitriangular,
    primitive_generator,
    primitive_word,
    shuffle_product,
    tensor,
    verify_hopf,
)
from cyclosol.poly import X
from cyclosol.wreath import GroupElement, from_word

E = GradedElement.E
ONE = GradedElement.one()
EMPTY = SignedComposition(())


def T(*pairs):
    return GradedTensor(2, {(SignedComposition(a), SignedComposition(b)): c for a, b, c in pairs})


def test_shuffle_is_concatenation():
    assert shuffle_product(E((1,)), E((-1,))) == E((1, -1))
    assert shuffle_product(E((2,)), E((-1, 1))) == E((2, -1, 1))
    assert shuffle_product(ONE, E((3, -1))) == E((3, -1))


def test_coproduct_examples():
    assert coproduct(E((2,))) == T(((), (2,), 1), ((1,), (1,), 1), ((2,), (), 1))
    assert coproduct(E((-1,))) == T(((), (-1,), 1), ((-1,), (), 1))
    assert coproduct(E((1, -1))) == T(((), (1, -1), 1), ((1,), (-1,), 1), ((-1,), (1,), 1), ((1, -1), (), 1))


def test_coproduct_collects_coefficients():
    t = coproduct(E((1, 1)))
    assert t.terms[(SignedComposition((1,)), SignedComposition((1,)))] == 2


def test_counit():
    assert counit(ONE) == 1
    assert counit(E((2,))) == 0


def test_primitive_generators():
    assert primitive_generator(1) == E((1,))
    assert primitive_generator(-1) == E((-1,))
    assert primitive_generator(2) == E((2,)) + E((1, 1)).scale(Fraction(-1, 2))
    assert primitive_generator(-2) == E((-2,)) + E((-1, -1)).scale(Fraction(-1, 2))
    with pytest.raises(ValueError):
        primitive_generator(0)


def test_expansion_in_primitives():
    assert expand_in_primitives(E((2,))) == {(2,): 1, (1, 1): Fraction(1, 2)}
    assert expand_in_primitives(E((1, -1))) == {(1, -1): 1}


@pytest.mark.parametrize("mu", basis_up_to(4))
def test_round_trip(mu):
    assert from_primitives(expand_in_primitives(E(mu))) == E(mu)


def test_antipode_examples():
    assert antipode(ONE) == ONE
    assert antipode(E((1,))) == E((1,)).scale(-1)
    assert antipode(primitive_generator(2)) == primitive_generator(2).scale(-1)
    # S(E_(1,-1)) = S(P_1 P_-1) = P_-1 P_1
    assert antipode(E((1, -1))) == E((-1, 1))


@pytest.mark.parametrize("mu", basis_up_to(3))
def test_antipode_axiom(mu):
    assert check_antipode(mu)


@pytest.mark.parametrize("mu", basis_up_to(4))
def test_coalgebra_axioms(mu):
    assert check_coassociativity(mu)
    assert check_counit(mu)


def test_shuffle_bialgebra():
    basis = basis_up_to(4)
    for mu in basis:
        for nu in basis:
            if mu.n + nu.n <= 4:
                assert check_shuffle_bialgebra(mu, nu)


@pytest.mark.parametrize("k", [1, -1, 2, -2, 3, -3, 4, -4])
def test_primitivity(k):
    assert check_primitive(k)
    p = primitive_generator(k)
    assert coproduct(p) == tensor(p, ONE) + tensor(ONE, p)


@pytest.mark.parametrize("n", range(5))
def test_change_of_basis_unitriangular(n):
    assert is_unitriangular(n)


def test_grading():
    a = E((2, -1)) + E((1,))
    b = E((-2,))
    assert shuffle_product(a, b).degrees() == {5, 3}
    assert coproduct(a).total_degrees() == {3, 1}


def test_internal_product():
    assert internal_product(E((1,)), E((-1,))) == E((-1,))
    assert internal_product(E((2,)), E((-1, 1))) == E((-1, 1))
    assert internal_product(E((1,)), E((2,))).is_zero()
    assert internal_product(E((-1,)), E((-1,))) == GradedElement({SignedComposition((-1,)): X})
    assert internal_product(E((-1,)), E((-1,)), q=3) == E((-1,)).scale(3)


@pytest.mark.parametrize("n", range(4))
def test_internal_bialgebra(n):
    comps = enumerate_signed_compositions(n)
    for mu in comps:
        for nu in comps:
            assert check_internal_bialgebra(mu, nu)


def test_internal_bialgebra_numeric_q():
    comps = enumerate_signed_compositions(3)
    for mu in comps:
        for nu in comps:
            assert check_internal_bialgebra(mu, nu, q=2)


def test_group_coproduct_identity():
    e = GroupElement.identity(2, 2)
    for left, right in group_coproduct(e):
        assert left == GroupElement.identity(2, left.n)
        assert right == GroupElement.identity(2, right.n)


def test_group_coproduct_example():
    r, a, b, c, d = 3, 1, 2, 0, 1
    g = from_word([(2, a), (3, b), (1, c), (4, d)], r)
    got = group_coproduct(g)
    want = [
        ([], [(2, a), (3, b), (1, c), (4, d)]),
        ([(1, c)], [(1, a), (2, b), (3, d)]),
        ([(2, a), (1, c)], [(1, b), (2, d)]),
        ([(2, a), (3, b), (1, c)], [(1, d)]),
        ([(2, a), (3, b), (1, c), (4, d)], []),
    ]
    assert got == [(from_word(x, r), from_word(y, r)) for x, y in want]


def test_json_round_trip():
    a = primitive_generator(-3) + E((2,)).scale(Fraction(5, 7))
    assert GradedElement.from_json(a.to_json()) == a
    t = coproduct(a)
    assert GradedTensor.from_json(t.to_json()) == t


def test_verify_hopf_small():
    assert all(ok for _, ok in verify_hopf(3))


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3]), max_size=3))
def test_primitive_words_expand_to_themselves(word):
    w = tuple(word)
    assert expand_in_primitives(primitive_word(w)) == ({w: 1} if w else {(): 1})
