import pytest

from cyclosol.combinat import SignedComposition, signed_partitions
from cyclosol.rings import POLY, QQ, ModularRing
from cyclosol.poly import X
from cyclosol.reptheory import (
    character_table,
    irreducible_labels,
    is_semisimple,
    nilpotency_report,
    quotient_action,
    radical_basis,
    radical_is_nilpotent,
)
from cyclosol.solalg import algebra

# rows and columns (2), (1,1), (-2), (1,-1), (-1,-1)
C22 = [
    [1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0],
    [1, 0, 4, 0, 0],
    [1, 2, 0, 2, 0],
    [1, 2, 4, 4, 8],
]

# the same table as printed with rows/columns (2),(1^2),(1,-1),(-2),(-1^2)
PRINTED_ORDER = [(2,), (1, 1), (1, -1), (-2,), (-1, -1)]
PRINTED = [
    [1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0],
    [1, 2, 2, 0, 0],
    [1, 0, 0, 4, 0],
    [1, 2, 4, 4, 8],
]


def test_character_table_q2():
    t = character_table(2, 2)
    assert [list(row) for row in t.entries] == C22
    assert t.is_lower_triangular()


def test_character_table_matches_printed_layout():
    t = character_table(2, 2)
    for i, lam in enumerate(PRINTED_ORDER):
        for j, alpha in enumerate(PRINTED_ORDER):
            assert t.entry(lam, alpha) == PRINTED[i][j]


def test_generic_table():
    t = character_table(2, X, POLY)
    assert t.entry((-1, -1), (-1, -1)) == 2 * X**2
    assert t.entry((1, -1), (1, -1)) == X


@pytest.mark.parametrize("n", range(1, 5))
def test_tables_lower_triangular(n):
    assert character_table(n, 3).is_lower_triangular()


def test_radical_q2():
    rb = radical_basis(2, 2)
    assert rb.difference_elements == ((SignedComposition((1, -1)), SignedComposition((-1, 1))),)
    assert rb.degenerate_elements == ()
    assert rb.quotient_dimension == 5


def test_mod2_only_trivial_survives():
    # the q = 2 table read modulo 2
    assert irreducible_labels(2, 2, ModularRing(2)) == [SignedComposition((2,))]
    assert irreducible_labels(2, 0, ModularRing(2)) == [SignedComposition((2,))]
    assert len(radical_basis(2, 2, ModularRing(2))) == 5


def test_mod2_q1():
    labels = irreducible_labels(2, 1, ModularRing(2))
    assert labels == [SignedComposition((2,)), SignedComposition((-2,)), SignedComposition((1, -1))]


def test_semisimple_only_n1_nonzero_q():
    assert is_semisimple(1, 2)
    assert is_semisimple(1, 1)
    assert not is_semisimple(1, 0)
    for n in (2, 3):
        assert not is_semisimple(n, 2)


def test_composite_modulus_rejected():
    with pytest.raises(ValueError):
        radical_basis(2, 1, ModularRing(4))
    with pytest.raises(ValueError):
        irreducible_labels(2, 1, POLY)


@pytest.mark.parametrize("q", [0, 1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_radical_nilpotent(n, q):
    assert radical_is_nilpotent(radical_basis(n, q))


def test_radical_nilpotent_mod_p():
    for p in (2, 3):
        assert radical_is_nilpotent(radical_basis(3, 1, ModularRing(p)))


@pytest.mark.parametrize("n", [2, 3])
def test_quotient_actions_give_table(n):
    q = 3
    alg = algebra(n, QQ, q)
    t = character_table(n, q)
    for lam in signed_partitions(n):
        for alpha in signed_partitions(n):
            assert quotient_action(alg, lam, alpha) == t.entry(lam, alpha)


def test_nilpotency_report_char2():
    rows = {r.lam: r for r in nilpotency_report(2, 1, ModularRing(2))}
    assert all(r.consistent for r in rows.values())
    row = rows[SignedComposition((1, -1))]
    assert row.diagonal == 1 and not row.nilpotent
    assert not row.normalizer_agrees


def test_csv_rows():
    rows = character_table(2, 2).to_csv_rows()
    assert rows[0][1:] == ["(2)", "(1,1)", "(-2)", "(1,-1)", "(-1,-1)"]
    assert rows[5][1:] == ["1", "2", "4", "4", "8"]
