"""Distinguished coset and double coset representatives for the reflection
subgroups G_mu of G(r,1,n), the tableau bijections, the intersection
compositions mu cap d nu, and Mak's alternative coset representatives."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .combinat import ColouredTableau, SignedComposition, _absolute_matrices, generator_set
from .wreath import GroupElement, descent_data, group_order


def _as_sc(mu) -> SignedComposition:
    return mu if isinstance(mu, SignedComposition) else SignedComposition(mu)


def _require_r(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"r must be an integer >= 2, got {r!r}")


def subgroup_order(mu: SignedComposition, r: int) -> int:
    """|G_mu| = prod_{mu_i>0} r^{mu_i} mu_i! * prod_{mu_j<0} (-mu_j)!."""
    out = 1
    for a in mu.parts:
        out *= factorial(abs(a))
        if a > 0:
            out *= r**a
    return out


# --------------------------------------------------------------------------
# Young (parabolic) transversals in S_n


@lru_cache(maxsize=None)
def _young_perms(lam: tuple) -> tuple:
    n = sum(lam)
    out = []

    def rec(k: int, remaining: tuple, acc: list):
        if k == len(lam):
            out.append(tuple(acc))
            return
        for chosen in itertools.combinations(remaining, lam[k]):
            rest = tuple(v for v in remaining if v not in chosen)
            rec(k + 1, rest, acc + list(chosen))

    rec(0, tuple(range(1, n + 1)), [])
    return tuple(out)


def young_transversal(lam: Sequence[int], n: int | None = None, r: int = 1) -> list:
    """Minimal length right coset representatives D_lam of S_lam in S_n:
    the permutations whose one-line notation increases inside each block."""
    lam = tuple(lam.parts) if isinstance(lam, SignedComposition) else tuple(lam)
    if any((not isinstance(a, int)) or a <= 0 for a in lam):
        raise ValueError(f"young_transversal needs a composition with positive parts, got {lam}")
    if n is not None and sum(lam) != n:
        raise ValueError(f"composition {lam} is not a composition of {n}")
    elems = [GroupElement.from_permutation(r, p) for p in _young_perms(lam)]
    return sorted(elems, key=GroupElement.sort_key)


def _in_young(perm: Sequence[int], lam: SignedComposition) -> bool:
    for block in lam.blocks():
        for i in list(block)[:-1]:
            if perm[i - 1] > perm[i]:
                return False
    return True


# --------------------------------------------------------------------------
# right coset transversals E_mu = T_{-mu} x D_{mu+}


@dataclass(frozen=True)
class Transversal:
    subgroup: SignedComposition
    r: int
    elements: tuple

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> list:
        return [g.to_json() for g in self.elements]


def _negative_positions(mu: SignedComposition) -> list:
    return [i for a, block in zip(mu.parts, mu.blocks()) if a < 0 for i in block]


@lru_cache(maxsize=None)
def _coset_transversal(mu: SignedComposition, r: int) -> tuple:
    n = mu.n
    negs = _negative_positions(mu)
    out = []
    for d in _young_perms(mu.plus.parts):
        for vals in itertools.product(range(r), repeat=len(negs)):
            cols = [0] * n
            for i, v in zip(negs, vals):
                cols[i - 1] = v
            out.append(GroupElement(r, n, tuple(cols), d))
    return tuple(sorted(out, key=GroupElement.sort_key))


def coset_transversal(mu, r: int) -> Transversal:
    mu = _as_sc(mu)
    _require_r(r)
    return Transversal(mu, r, _coset_transversal(mu, r))


def satisfies_descent_condition(g: GroupElement, mu: SignedComposition) -> bool:
    """Col(alpha) and Des(w) avoid Pi_mu, i.e. lie in Pi - Pi_mu."""
    gens = generator_set(mu)
    dd = descent_data(g)
    return not (dd.colour_set & gens.t_indices) and not (dd.descent_set & gens.s_indices)


def coset_key(g: GroupElement, mu: SignedComposition) -> tuple:
    """A complete invariant of the right coset G_mu g: per block, the sorted
    (value, colour) pairs, with colours forgotten on positive blocks."""
    key = []
    for a, block in zip(mu.parts, mu.blocks()):
        pairs = sorted((g.perm[i - 1], g.colours[i - 1] if a < 0 else 0) for i in block)
        key.append(tuple(pairs))
    return tuple(key)


def is_transversal(elements: Sequence[GroupElement], mu: SignedComposition, r: int) -> bool:
    keys = {coset_key(g, mu) for g in elements}
    index = group_order(r, mu.n) // subgroup_order(mu, r)
    return len(keys) == len(elements) == index


# --------------------------------------------------------------------------
# tableaux


def tableau_of(g: GroupElement, mu: SignedComposition) -> ColouredTableau:
    """The mu-tableau t^mu g: the node numbered m in t^mu carries m^g."""
    rows = []
    for block in mu.blocks():
        rows.append(tuple((g.perm[m - 1], g.colours[m - 1]) for m in block))
    return ColouredTableau(tuple(mu.plus.parts), tuple(rows), g.r)


def element_of_tableau(t: ColouredTableau, mu: SignedComposition) -> GroupElement:
    """Inverse of tableau_of for row standard tableaux."""
    perm, cols = [], []
    for row in t.entries:
        for v, c in row:
            perm.append(v)
            cols.append(c)
    return GroupElement(t.r, len(perm), tuple(cols), tuple(perm))


def row_semistandard_tableaux(mu: SignedComposition, nu: SignedComposition, r: int) -> list:
    """Row semistandard mu-tableaux of type nu.  Colours on a node of row i
    with value j are forced to 0 unless mu_i < 0 and nu_j < 0; equal values
    in a row carry weakly decreasing colours (weakly increasing in the
    order a z^i < a z^j for i > j)."""
    mu, nu = _as_sc(mu), _as_sc(nu)
    out = []
    for m in _absolute_matrices(mu.plus.parts, nu.plus.parts):
        per_row_choices = []
        for i, row in enumerate(m):
            cell_choices = []
            for j, cnt in enumerate(row):
                if cnt == 0:
                    continue
                if mu[i] < 0 and nu[j] < 0:
                    opts = [
                        tuple(sorted(c, reverse=True))
                        for c in itertools.combinations_with_replacement(range(r), cnt)
                    ]
                else:
                    opts = [(0,) * cnt]
                cell_choices.append([tuple((j + 1, c) for c in cs) for cs in opts])
            per_row_choices.append([sum(p, ()) for p in itertools.product(*cell_choices)])
        for rows in itertools.product(*per_row_choices):
            out.append(ColouredTableau(tuple(mu.plus.parts), tuple(rows), r))
    return out


def star_tableau(t: ColouredTableau) -> ColouredTableau:
    """T*: renumber nodes 1..n in the order (value, row, column), keep colours."""
    nodes = sorted(
        ((v, i, k) for i, row in enumerate(t.entries) for k, (v, _) in enumerate(row)),
    )
    number = {(i, k): idx + 1 for idx, (_, i, k) in enumerate(nodes)}
    rows = tuple(tuple((number[(i, k)], c) for k, (_, c) in enumerate(row)) for i, row in enumerate(t.entries))
    return ColouredTableau(t.shape, rows, t.r)


def double_coset_representatives(mu, nu, r: int) -> list:
    """E_{mu nu}: one element per (G_mu, G_nu) double coset, d_{T*} for T a row
    semistandard mu-tableau of type nu."""
    mu, nu = _as_sc(mu), _as_sc(nu)
    _require_r(r)
    if mu.n != nu.n:
        raise ValueError("degree mismatch")
    reps = [element_of_tableau(star_tableau(t), mu) for t in row_semistandard_tableaux(mu, nu, r)]
    return sorted(reps, key=GroupElement.sort_key)


# --------------------------------------------------------------------------
# double cosets


@dataclass(frozen=True)
class DoubleCosetFamily:
    """The minimal double coset elements T_{-mu cap d(-nu)} d for one d."""

    mu: SignedComposition
    nu: SignedComposition
    perm: tuple
    intersection_left: SignedComposition
    torus_order_exponent: int
    negative_runs: tuple

    @property
    def d(self) -> GroupElement:
        return GroupElement.from_permutation(1, self.perm)

    @property
    def intersection_right(self) -> SignedComposition:
        return intersection_right(self.mu, self.nu, self.perm)

    @property
    def wt(self) -> int:
        return self.torus_order_exponent

    def double_coset_count(self, r: int) -> int:
        """Number of (G_mu, G_nu) double cosets with permutation part d."""
        out = 1
        for m in self.negative_runs:
            out *= comb(r + m - 1, m)
        return out

    def to_json(self) -> dict:
        return {
            "d": list(self.perm),
            "mu_cap_d_nu": self.intersection_left.to_json(),
            "mu_d_cap_nu": self.intersection_right.to_json(),
            "wt": self.torus_order_exponent,
        }


def _runs(labels: Sequence[tuple]) -> list:
    """Maximal runs of equal consecutive labels as (label, length)."""
    out = []
    for lab in labels:
        if out and out[-1][0] == lab:
            out[-1][1] += 1
        else:
            out.append([lab, 1])
    return [(lab, m) for lab, m in out]


def _runs_to_composition(runs, sign_left, sign_right) -> SignedComposition:
    return SignedComposition.trusted(
        tuple(m if (sign_left[a] > 0 and sign_right[b] > 0) else -m for (a, b), m in runs)
    )


@lru_cache(maxsize=None)
def double_coset_permutations(mu_plus: tuple, nu_plus: tuple) -> tuple:
    """D_{mu+ nu+} = {d in D_{mu+} : d^{-1} in D_{nu+}} as one-line tuples."""
    nu_sc = SignedComposition(nu_plus)
    out = []
    for d in _young_perms(mu_plus):
        inv = [0] * len(d)
        for i, v in enumerate(d):
            inv[v - 1] = i + 1
        if _in_young(inv, nu_sc):
            out.append(d)
    return tuple(out)


def intersection_left(mu: SignedComposition, nu: SignedComposition, d: Sequence[int]) -> SignedComposition:
    """mu cap d nu via row co-membership in t^mu and t^nu d^{-1}."""
    arow, brow = mu.row_of(), nu.row_of()
    labels = [(arow[j], brow[d[j] - 1]) for j in range(mu.n)]
    return _runs_to_composition(_runs(labels), mu.parts, nu.parts)


def intersection_right(mu: SignedComposition, nu: SignedComposition, d: Sequence[int]) -> SignedComposition:
    """mu d cap nu: position i labelled by (mu-row of i^{d^{-1}}, nu-row of i)."""
    arow, brow = mu.row_of(), nu.row_of()
    inv = [0] * mu.n
    for i, v in enumerate(d):
        inv[v - 1] = i + 1
    labels = [(arow[inv[i] - 1], brow[i]) for i in range(mu.n)]
    return _runs_to_composition(_runs(labels), mu.parts, nu.parts)


def _family(mu: SignedComposition, nu: SignedComposition, d: tuple) -> DoubleCosetFamily:
    arow, brow = mu.row_of(), nu.row_of()
    labels = [(arow[j], brow[d[j] - 1]) for j in range(mu.n)]
    runs = _runs(labels)
    neg_runs = tuple(m for (a, b), m in runs if mu[a] < 0 and nu[b] < 0)
    return DoubleCosetFamily(
        mu=mu,
        nu=nu,
        perm=d,
        intersection_left=_runs_to_composition(runs, mu.parts, nu.parts),
        torus_order_exponent=sum(neg_runs),
        negative_runs=neg_runs,
    )


@lru_cache(maxsize=8192)
def _families(mu: SignedComposition, nu: SignedComposition) -> tuple:
    return tuple(_family(mu, nu, d) for d in double_coset_permutations(mu.plus.parts, nu.plus.parts))


def double_coset_families(mu, nu) -> list:
    mu, nu = _as_sc(mu), _as_sc(nu)
    if mu.n != nu.n:
        raise ValueError(f"degree mismatch: |mu|={mu.n}, |nu|={nu.n}")
    return list(_families(mu, nu))


def double_coset_count(mu, nu, r: int) -> int:
    return sum(f.double_coset_count(r) for f in double_coset_families(mu, nu))


def minimal_double_coset_elements(mu, nu, r: int) -> list:
    """E_mu cap E_nu^{-1} = disjoint union over d of T_{-mu cap d(-nu)} d."""
    mu, nu = _as_sc(mu), _as_sc(nu)
    _require_r(r)
    arow, brow = mu.row_of(), nu.row_of()
    out = []
    for fam in double_coset_families(mu, nu):
        d = fam.perm
        free = [j for j in range(mu.n) if mu[arow[j]] < 0 and nu[brow[d[j] - 1]] < 0]
        for vals in itertools.product(range(r), repeat=len(free)):
            cols = [0] * mu.n
            for j, v in zip(free, vals):
                cols[j] = v
            out.append(GroupElement(r, mu.n, tuple(cols), d))
    return sorted(out, key=GroupElement.sort_key)


# --------------------------------------------------------------------------
# Mak's representatives


def mak_transversal(mu, r: int, check: bool = True) -> list:
    """Product over negative blocks j (last block first) and, inside each,
    over i from the block end down to its start, of
    {1} u {s_a ... s_{i-1} t_i^k : 1 <= k < r} (a = first position of the block),
    followed by D_{mu+}.  The result is checked to be a transversal."""
    mu = _as_sc(mu)
    _require_r(r)
    n = mu.n
    ident = GroupElement.identity(r, n)
    factors = []
    for a, block in reversed(list(zip(mu.parts, mu.blocks()))):
        if a > 0:
            continue
        start = block.start
        for i in reversed(block):
            chain = ident
            for k in range(start, i):
                chain = chain * GroupElement.s(r, n, k)
            opts = [ident] + [chain * GroupElement.t(r, n, i, k) for k in range(1, r)]
            factors.append(opts)
    elems = []
    young = [GroupElement.from_permutation(r, p) for p in _young_perms(mu.plus.parts)]
    for combo in itertools.product(*factors):
        g = ident
        for f in combo:
            g = g * f
        for d in young:
            elems.append(g * d)
    if check and not is_transversal(elems, mu, r):
        raise AssertionError(f"Mak representatives for {mu} at r={r} are not a transversal")
    return sorted(elems, key=GroupElement.sort_key)

