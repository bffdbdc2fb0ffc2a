import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclosol.wreath import (
    GroupElement,
    act_on_word,
    descent_data,
    enumerate_group,
    from_word,
    group_order,
    inversions,
    length,
    to_word,
)


def elements(r, n):
    return st.tuples(
        st.lists(st.integers(0, r - 1), min_size=n, max_size=n), st.permutations(list(range(1, n + 1)))
    ).map(lambda cp: GroupElement(r, n, tuple(cp[0]), tuple(cp[1])))


@given(elements(3, 4), elements(3, 4), elements(3, 4))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(4, 3))
def test_inverse(g):
    e = GroupElement.identity(4, 3)
    assert g * g.inverse() == e
    assert g.inverse() * g == e


def test_group_order_matches_enumeration():
    for r, n in [(1, 3), (2, 3), (3, 2)]:
        assert len(list(enumerate_group(r, n))) == group_order(r, n)


def test_generator_orders():
    r, n = 3, 3
    e = GroupElement.identity(r, n)
    assert GroupElement.t(r, n, 1) ** 3 == e
    assert GroupElement.s(r, n, 1) ** 2 == e
    s1, s2 = GroupElement.s(r, n, 1), GroupElement.s(r, n, 2)
    assert (s1 * s2) ** 3 == e


def test_t1_s1_normal_form():
    g = GroupElement.t(2, 2, 1) * GroupElement.s(2, 2, 1)
    assert g.colours == (1, 0) and g.perm == (2, 1)
    assert to_word(g) == ((2, 1), (1, 0))


def test_length_is_colour_sum_plus_inversions():
    g = GroupElement(3, 3, (2, 0, 1), (3, 1, 2))
    assert length(g) == 3 + inversions((3, 1, 2))
    assert length(GroupElement.identity(3, 3)) == 0


@given(elements(3, 4))
def test_word_round_trip(g):
    assert from_word(to_word(g), 3) == g


@given(elements(3, 3), elements(3, 3))
def test_action_on_words(g, h):
    base = tuple((i, 0) for i in range(1, 4))
    assert act_on_word(base, g) == to_word(g)
    assert act_on_word(act_on_word(base, g), h) == to_word(g * h)


def test_from_word_rejects_bad_input():
    with pytest.raises(ValueError):
        from_word([(1, 0), (1, 0)], 2)
    with pytest.raises(ValueError):
        from_word([(1, 2)], 2)


def test_mixed_groups_rejected():
    with pytest.raises(ValueError):
        GroupElement.identity(2, 2) * GroupElement.identity(3, 2)


def test_json_round_trip():
    g = GroupElement(3, 3, (2, 0, 1), (3, 1, 2))
    assert GroupElement.from_json(g.to_json()) == g


def test_descent_data():
    d = descent_data(GroupElement.identity(2, 3))
    assert d.colour_set == frozenset() and d.descent_set == frozenset()
    d = descent_data(GroupElement(3, 4, (0, 2, 0, 1), (3, 1, 4, 2)))
    assert d.colour_set == {2, 4}
    assert d.descent_set == {1, 3}


def test_ell0_parity_and_bound():
    from cyclosol.oracle import ell0_lengths, group_index

    for r, n in [(2, 3), (3, 3)]:
        dist = ell0_lengths(r, n)
        idx = group_index(r, n)
        lens = np.array([length(idx.element(i)) for i in range(idx.size)])
        assert (dist >= 0).all()
        assert (lens <= dist).all()
        assert ((dist - lens) % 2 == 0).all()
        # permutations: ell_0 equals the Coxeter length
        for i in range(idx.size):
            g = idx.element(i)
            if g.is_permutation():
                assert dist[i] == inversions(g.perm)
