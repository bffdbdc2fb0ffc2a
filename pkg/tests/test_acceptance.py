"""Acceptance criteria 1-10.

Each test prints one line "[acceptance k] PASS|FAIL ..." with its wall time
and limit, then asserts both the check and the time limit.  All comparisons
are exact.
"""

import time
from fractions import Fraction

from cyclosol import oracle
from cyclosol.combinat import SignedComposition, enumerate_signed_compositions
from cyclosol.cosets import coset_transversal, double_coset_count, subgroup_order
from cyclosol.hopf import check_internal_bialgebra, verify_hopf
from cyclosol.poly import X
from cyclosol.reptheory import character_table, irreducible_labels, is_semisimple, radical_basis, radical_is_nilpotent
from cyclosol.rings import ModularRing
from cyclosol.solalg import generic_algebra, in_subalgebra, subalgebra_membership
from cyclosol.structconst import (
    discrepancy_report,
    structure_constants_via_cosets,
    structure_constants_via_matrices,
)
from cyclosol.wreath import group_order


def SC(*parts):
    return SignedComposition(parts)


def _report(capsys, number, title, limit, check):
    start = time.perf_counter()
    passed, detail = check()
    elapsed = time.perf_counter() - start
    ok = passed and elapsed < limit
    line = f"[acceptance {number:2d}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s, limit {limit}s)"
    if detail:
        line += f"  {detail}"
    with capsys.disabled():
        print("\n" + line)
    assert passed, detail
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


# --------------------------------------------------------------------------
# 1


WORKED = {
    SC(-2, 1, -2): 2 * X**2,
    SC(-2, -1, -1, -1): X,
    SC(-1, -2, -1, -1): X,
    SC(-1, -1, 1, -1, -1): X**2,
}


def test_criterion_01_worked_product(capsys):
    def check():
        mu, nu = SC(3, -2), SC(-2, -2, 1)
        a = structure_constants_via_cosets(mu, nu).as_dict()
        b = structure_constants_via_matrices(mu, nu).as_dict()
        oracle_ok = all(
            oracle.oracle_product(mu, nu, r) == {s: p.evaluate(r) for s, p in WORKED.items()} for r in (2, 3)
        )
        return a == WORKED and b == WORKED and oracle_ok, f"cosets={a == WORKED} matrices={b == WORKED} oracle r=2,3={oracle_ok}"

    _report(capsys, 1, "worked product E(3,-2)E(-2,-2,1)", 1, check)


# --------------------------------------------------------------------------
# 2

PRINTED_LABELS = [(2,), (1, 1), (1, -1), (-2,), (-1, -1)]
PRINTED_TABLE = [
    [1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0],
    [1, 2, 2, 0, 0],
    [1, 0, 0, 4, 0],
    [1, 2, 4, 4, 8],
]


def test_criterion_02_character_table(capsys):
    def check():
        t = character_table(2, 2)
        bad = [
            (lam, alpha)
            for i, lam in enumerate(PRINTED_LABELS)
            for j, alpha in enumerate(PRINTED_LABELS)
            if t.entry(lam, alpha) != PRINTED_TABLE[i][j]
        ]
        same_labels = sorted(l.parts for l in t.labels) == sorted(PRINTED_LABELS)
        return not bad and same_labels, f"mismatched entries: {bad}" if bad else "5x5 table matches entrywise"

    _report(capsys, 2, "character table C_2(2)", 1, check)


# --------------------------------------------------------------------------
# 3


def test_criterion_03_counting(capsys):
    def check():
        problems = []
        for n in range(1, 11):
            if len(enumerate_signed_compositions(n)) != 2 * 3 ** (n - 1):
                problems.append(f"compositions n={n}")
        for r, n in [(2, 3), (3, 2), (2, 4)]:
            for mu in enumerate_signed_compositions(n):
                if len(coset_transversal(mu, r)) != group_order(r, n) // subgroup_order(mu, r):
                    problems.append(f"transversal {mu} r={r}")
        mu, nu = SC(3, -2), SC(-2, -2, 1)
        for r in (2, 3):
            if double_coset_count(mu, nu, r) != 2 * r * r + 3 * r:
                problems.append(f"double cosets r={r}")
            right = set(coset_transversal(nu, r).elements)
            both = [g for g in coset_transversal(mu, r).elements if g.inverse() in right]
            if len(both) != 3 * r * r + 2 * r:
                problems.append(f"|E_mu cap E_nu^-1| r={r}: {len(both)}")
        return not problems, "; ".join(problems)

    _report(capsys, 3, "counting (compositions, transversals, double cosets)", 10, check)


# --------------------------------------------------------------------------
# 4


def test_criterion_04_oracle_equivalence(capsys):
    def check():
        bad = []
        for r in (2, 3):
            for n in range(1, 5):
                bad += [(r, n, mu, nu) for mu, nu in oracle.verify_products(r, n)]
        disagree = []
        for n in range(1, 6):
            comps = enumerate_signed_compositions(n)
            for mu in comps:
                for nu in comps:
                    if structure_constants_via_cosets(mu, nu) != structure_constants_via_matrices(mu, nu):
                        disagree.append((mu, nu))
        return not bad and not disagree, f"oracle mismatches={len(bad)} algorithm disagreements={len(disagree)}"

    _report(capsys, 4, "oracle equivalence (n<=4, r=2,3) and algorithms agree (n<=5)", 300, check)


# --------------------------------------------------------------------------
# 5


def test_criterion_05_algebra_laws(capsys):
    """Associativity, identity, the filtration spans {|mu|^+ >= i} as
    two-sided ideals, and closure of Sol^+, Sol^+- and Sol^1, as stated."""

    def check():
        assoc = identity = True
        level_ideal = {}
        closed = {"plus": True, "plus-minus": True, "first-part": True}
        corrected_ideal = corrected_first = True
        for n in range(1, 5):
            alg = generic_algebra(n)
            E = {mu: alg.E(mu) for mu in alg.basis}
            prods = {(a, b): E[a] * E[b] for a in alg.basis for b in alg.basis}
            one = alg.identity()
            identity &= all(one * E[m] == E[m] == E[m] * one for m in alg.basis)
            for a in alg.basis:
                for b in alg.basis:
                    ab = prods[(a, b)]
                    for c in alg.basis:
                        bc = prods[(b, c)]
                        if ab * E[c] != E[a] * bc:
                            assoc = False
            for i in range(n + 1):
                ok = True
                ok_corr = True
                for a in alg.basis:
                    for b in alg.basis:
                        if in_subalgebra(a, i) or in_subalgebra(b, i):
                            ok &= subalgebra_membership(prods[(a, b)], i)
                        if in_subalgebra(a, ("ideal", i)) or in_subalgebra(b, ("ideal", i)):
                            ok_corr &= subalgebra_membership(prods[(a, b)], ("ideal", i))
                level_ideal[(n, i)] = ok
                corrected_ideal &= ok_corr
            for which in closed:
                members = [m for m in alg.basis if in_subalgebra(m, which)]
                closed[which] &= all(subalgebra_membership(prods[(a, b)], which) for a in members for b in members)
            neg = [m for m in alg.basis if in_subalgebra(m, "first-part-negative")]
            corrected_first &= all(subalgebra_membership(prods[(a, b)], "first-part-negative") for a in neg for b in neg)
        failing_levels = sorted(k for k, v in level_ideal.items() if not v)
        passed = assoc and identity and not failing_levels and all(closed.values())
        detail = (
            f"associative={assoc} identity={identity} "
            f"level-i ideals fail at (n,i)={failing_levels[:4]}{'...' if len(failing_levels) > 4 else ''} "
            f"closed={closed}; "
            f"spans |mu|^+<=i are ideals={corrected_ideal}, parts 2..k negative closed={corrected_first}"
        )
        return passed, detail

    _report(capsys, 5, "algebra laws (associativity, identity, ideals, subalgebras)", 120, check)


# --------------------------------------------------------------------------
# 6


def test_criterion_06_representation_theory(capsys):
    def check():
        problems = []
        rb = radical_basis(2, 2)
        if rb.difference_elements != ((SC(1, -1), SC(-1, 1)),) or rb.degenerate_elements or rb.quotient_dimension != 5:
            problems.append("radical_basis(2,2)")
        if irreducible_labels(2, 2, ModularRing(2)) != [SC(2)]:
            problems.append("Z/2 irreducibles")
        for q in (0, 1, 2, -1, Fraction(1, 2), 3):
            if is_semisimple(1, q) != (q != 0):
                problems.append(f"Sol_q(1) q={q}")
        for p in (2, 3, 5):
            for q in range(p):
                if is_semisimple(1, q, ModularRing(p)) != (q != 0):
                    problems.append(f"Sol_q(1) q={q} mod {p}")
        for n in (1, 2, 3):
            for q in (0, 1, 2, 3):
                if not radical_is_nilpotent(radical_basis(n, q)):
                    problems.append(f"radical n={n} q={q}")
            for p in (2, 3):
                for q in range(p):
                    if not radical_is_nilpotent(radical_basis(n, q, ModularRing(p))):
                        problems.append(f"radical n={n} q={q} mod {p}")
        return not problems, "; ".join(problems)

    _report(capsys, 6, "representation theory (radical, Z/2, semisimplicity, nilpotency)", 60, check)


# --------------------------------------------------------------------------
# 7


def test_criterion_07_hopf_axioms(capsys):
    def check():
        results = dict(verify_hopf(4, antipode_degree=3, internal_degree=0))
        results.pop("internal bialgebra", None)
        bad = [k for k, v in results.items() if not v]
        return not bad, f"checks={sorted(results)} failed={bad}"

    _report(capsys, 7, "Hopf axioms through degree 4", 120, check)


# --------------------------------------------------------------------------
# 8


def test_criterion_08_internal_bialgebra(capsys):
    def check():
        bad = []
        for n in range(0, 5):
            comps = enumerate_signed_compositions(n)
            bad += [(mu, nu) for mu in comps for nu in comps if not check_internal_bialgebra(mu, nu)]
        group_bad = [
            (mu, r)
            for r in (2, 3)
            for n in range(0, 4)
            for mu in enumerate_signed_compositions(n)
            if not oracle.verify_group_coproduct(mu, r)
        ]
        return not bad and not group_bad, f"internal failures={len(bad)} group coproduct failures={len(group_bad)}"

    _report(capsys, 8, "internal bialgebra (symbolic x) and group-level coproduct", 300, check)


# --------------------------------------------------------------------------
# 9


def test_criterion_09_mak(capsys):
    def check():
        small = oracle.mak_closure_check(2, 2)
        big = oracle.mak_closure_check(3, 3)
        passed = small.closed and small.rank == 6 and not big.closed and big.witness is not None and big.rank == 18
        w = None if big.witness is None else [str(m) for m in big.witness]
        return passed, f"(n,r)=(2,2) closed={small.closed} rank={small.rank}; (3,3) closed={big.closed} rank={big.rank} witness={w}"

    _report(capsys, 9, "Mak representatives closure", 120, check)


# --------------------------------------------------------------------------
# 10


def test_criterion_10_discrepancy_report(capsys):
    def check():
        report = discrepancy_report(5)
        inconsistent = [d.lam for d in report if not d.consistent]
        flagged = [d.lam for d in report if d.flagged]
        exact_flags = all(d.flagged == (d.computed != d.normalizer_formula) for d in report)
        passed = not inconsistent and flagged and flagged[0] == SC(1, -1) and exact_flags
        return passed, f"partitions={len(report)} flagged={len(flagged)} first={flagged[0] if flagged else None} inconsistent={inconsistent}"

    _report(capsys, 10, "diagonal constants vs normalizer formula (n<=5)", 30, check)
