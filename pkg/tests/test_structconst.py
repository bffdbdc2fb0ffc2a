import json

import pytest

from cyclosol.combinat import SignedComposition, enumerate_signed_compositions, signed_partitions
from cyclosol.poly import X, IntPolynomial
from cyclosol.structconst import (
    ConstantCache,
    StructureConstants,
    all_pairs,
    diagonal_constant,
    diagonal_formula,
    discrepancy_report,
    normalizer_formula,
    signed_multiset_stabilizer,
    structure_constants,
    structure_constants_via_cosets,
    structure_constants_via_matrices,
)

MU, NU = SignedComposition((3, -2)), SignedComposition((-2, -2, 1))
EXPECTED = {
    SignedComposition((-2, 1, -2)): 2 * X**2,
    SignedComposition((-2, -1, -1, -1)): X,
    SignedComposition((-1, -2, -1, -1)): X,
    SignedComposition((-1, -1, 1, -1, -1)): X**2,
}


@pytest.mark.parametrize("algo", [structure_constants_via_cosets, structure_constants_via_matrices])
def test_worked_example(algo):
    assert algo(MU, NU).as_dict() == EXPECTED


def test_terms_in_canonical_order():
    sc = structure_constants(MU, NU)
    assert [s.parts for s, _ in sc.terms] == [(-2, 1, -2), (-2, -1, -1, -1), (-1, -2, -1, -1), (-1, -1, 1, -1, -1)]


@pytest.mark.parametrize("n", range(1, 5))
def test_algorithms_agree(n):
    for mu, nu in all_pairs(n):
        assert structure_constants_via_cosets(mu, nu) == structure_constants_via_matrices(mu, nu)


@pytest.mark.parametrize("n", range(1, 5))
def test_identity_and_integrality(n):
    top = SignedComposition((n,))
    for mu in enumerate_signed_compositions(n):
        assert structure_constants(mu, top).as_dict() == {mu: IntPolynomial((1,))}
        assert structure_constants(top, mu).as_dict() == {mu: IntPolynomial((1,))}
        for nu in enumerate_signed_compositions(n):
            for _, p in structure_constants(mu, nu).terms:
                assert p.is_nonnegative_integral()


def test_degree_mismatch():
    with pytest.raises(ValueError):
        structure_constants(SignedComposition((1,)), SignedComposition((2,)))


def test_json_round_trip():
    sc = structure_constants(MU, NU)
    data = json.loads(json.dumps(sc.to_json()))
    assert StructureConstants.from_json(data) == sc
    assert data["terms"][0]["pretty"] == "2x^2"


def test_disk_cache(tmp_path):
    cache = ConstantCache()
    cache.set_directory(str(tmp_path))
    calls = []

    def compute():
        calls.append(1)
        return structure_constants_via_cosets(MU, NU)

    a = cache.get(MU, NU, compute)
    files = list(tmp_path.iterdir())
    assert len(files) == 1 and json.loads(files[0].read_text())["version"]
    fresh = ConstantCache(str(tmp_path))
    b = fresh.get(MU, NU, compute)
    assert a == b and len(calls) == 1


def test_corrupt_cache_file_is_ignored(tmp_path):
    cache = ConstantCache(str(tmp_path))
    cache.get(MU, NU, lambda: structure_constants_via_cosets(MU, NU))
    (f,) = tmp_path.iterdir()
    f.write_text("{not json")
    fresh = ConstantCache(str(tmp_path))
    assert fresh.get(MU, NU, lambda: structure_constants_via_cosets(MU, NU)).as_dict() == EXPECTED


def test_stabilizer_counts():
    assert signed_multiset_stabilizer(SignedComposition((1, -1))) == 1
    assert signed_multiset_stabilizer(SignedComposition((1, 1))) == 2
    assert signed_multiset_stabilizer(SignedComposition((2, 1, 1, -1, -1, -1))) == 12


@pytest.mark.parametrize("n", range(1, 6))
def test_diagonal_formula(n):
    for lam in signed_partitions(n):
        assert diagonal_constant(lam) == diagonal_formula(lam)


def test_normalizer_formula_first_fails_at_1_minus1():
    report = discrepancy_report(3)
    flagged = [d.lam for d in report if d.flagged]
    assert flagged[0] == SignedComposition((1, -1))
    assert normalizer_formula(SignedComposition((1, -1))) == 2 * X
    assert diagonal_constant(SignedComposition((1, -1))) == X
    assert all(d.consistent for d in report)
