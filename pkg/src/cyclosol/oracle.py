"""Brute-force ground truth in the group algebra QQ G(r,1,n).

The group is materialized once per (r, n) and indexed; left and right
multiplication by a fixed element are computed as index maps with numpy
(integer arrays only), so sums of group elements become integer vectors.
Span membership uses exact fraction-free elimination.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

import numpy as np

from .combinat import SignedComposition, canonical_key, enumerate_signed_compositions, sign_compatible_splits
from .cosets import coset_transversal, mak_transversal, young_transversal
from .hopf import group_coproduct
from .linalg import modular_pivot_rows, sparse_inverse
from .wreath import GroupElement, group_order

DEFAULT_BOUND = 200_000


class BoundExceeded(ValueError):
    pass


def _check_bound(r: int, n: int, bound: int) -> None:
    size = group_order(r, n)
    if size > bound:
        raise BoundExceeded(f"|G({r},1,{n})| = {size} exceeds the oracle bound {bound}")


def _sc(mu) -> SignedComposition:
    return mu if isinstance(mu, SignedComposition) else SignedComposition(mu)


class GroupIndex:
    """All r^n n! elements of G(r,1,n) with vectorized multiplication maps."""

    def __init__(self, r: int, n: int, bound: int = DEFAULT_BOUND):
        _check_bound(r, n, bound)
        self.r, self.n = r, n
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
        cols = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int64).reshape(-1, n)
        self.n_colours = len(cols)
        self.size = len(perms) * len(cols)
        self.P = np.repeat(perms, len(cols), axis=0)
        self.A = np.tile(cols, (len(perms), 1))
        self._pw = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._cw = r ** np.arange(n - 1, -1, -1, dtype=np.int64)
        lookup = np.full(max(n**n, 1), -1, dtype=np.int64)
        lookup[perms @ self._pw] = np.arange(len(perms))
        self._perm_lookup = lookup

    def encode(self, P: np.ndarray, A: np.ndarray) -> np.ndarray:
        return self._perm_lookup[P @ self._pw] * self.n_colours + A @ self._cw

    def index(self, g: GroupElement) -> int:
        if g.r != self.r or g.n != self.n:
            raise ValueError("element from another group")
        p = np.array([v - 1 for v in g.perm], dtype=np.int64)
        a = np.array(g.colours, dtype=np.int64)
        return int(self._perm_lookup[p @ self._pw] * self.n_colours + a @ self._cw) if self.n else 0

    def element(self, idx: int) -> GroupElement:
        return GroupElement(self.r, self.n, tuple(int(c) for c in self.A[idx]), tuple(int(v) + 1 for v in self.P[idx]))

    def left_map(self, g: GroupElement) -> np.ndarray:
        """m[b] = index of g * element(b)."""
        if self.n == 0:
            return np.zeros(1, dtype=np.int64)
        w = np.array([v - 1 for v in g.perm], dtype=np.int64)
        a = np.array(g.colours, dtype=np.int64)
        newA = (a[None, :] + self.A[:, w]) % self.r
        newP = self.P[:, w]
        return self.encode(newP, newA)

    def right_map(self, h: GroupElement) -> np.ndarray:
        """m[b] = index of element(b) * h."""
        if self.n == 0:
            return np.zeros(1, dtype=np.int64)
        v = np.array([x - 1 for x in h.perm], dtype=np.int64)
        b = np.array(h.colours, dtype=np.int64)
        newA = (self.A + b[self.P]) % self.r
        newP = v[self.P]
        return self.encode(newP, newA)

    def coset_indices(self, mu: SignedComposition) -> np.ndarray:
        """Indices of the elements t^alpha d with d increasing inside the
        blocks of mu and alpha supported on the negative blocks, built as
        arrays without materializing GroupElement objects."""
        from .cosets import _young_perms

        n, r = self.n, self.r
        if n == 0:
            return np.zeros(1, dtype=np.int64)
        perms = np.array(_young_perms(mu.plus.parts), dtype=np.int64).reshape(-1, n) - 1
        negs = [i - 1 for a, block in zip(mu.parts, mu.blocks()) if a < 0 for i in block]
        combos = np.array(list(itertools.product(range(r), repeat=len(negs))), dtype=np.int64).reshape(r ** len(negs), len(negs))
        cols = np.zeros((len(combos), n), dtype=np.int64)
        cols[:, negs] = combos
        perm_part = self._perm_lookup[perms @ self._pw] * self.n_colours
        return (perm_part[:, None] + (cols @ self._cw)[None, :]).ravel()

    def vector(self, elements) -> np.ndarray:
        vec = np.zeros(self.size, dtype=np.int64)
        for g in elements:
            vec[self.index(g)] += 1
        return vec

    def all_elements(self):
        return [self.element(i) for i in range(self.size)]


@lru_cache(maxsize=16)
def group_index(r: int, n: int, bound: int = DEFAULT_BOUND) -> GroupIndex:
    return GroupIndex(r, n, bound)


# --------------------------------------------------------------------------
# sparse group-algebra elements (for small identities)


class GroupAlgebraElement:
    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms: Mapping | None = None):
        self.r, self.n = r, n
        out: dict = {}
        for g, c in (terms or {}).items():
            if g.r != r or g.n != n:
                raise ValueError("inconsistent (r, n) in group algebra element")
            out[g] = out.get(g, 0) + Fraction(c)
        self.terms = {g: c for g, c in out.items() if c != 0}

    @classmethod
    def from_elements(cls, r: int, n: int, elements) -> "GroupAlgebraElement":
        return cls(r, n, Counter(elements))

    def __add__(self, other):
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement(self.r, self.n, out)

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement(self.r, self.n, {g: c * other for g, c in self.terms.items()})
        out: dict = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                k = g * h
                out[k] = out.get(k, 0) + c * d
        return GroupAlgebraElement(self.r, self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.r, self.n, self.terms) == (other.r, other.n, other.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_vector(self, index: GroupIndex) -> list:
        vec = [Fraction(0)] * index.size
        for g, c in self.terms.items():
            vec[index.index(g)] += c
        return vec


def expand_E(mu, r: int, bound: int = DEFAULT_BOUND) -> GroupAlgebraElement:
    mu = _sc(mu)
    _check_bound(r, mu.n, bound)
    return GroupAlgebraElement.from_elements(r, mu.n, coset_transversal(mu, r).elements)


def F(i: int, r: int, n: int) -> GroupAlgebraElement:
    """F_i = sum_k t_i^k."""
    return GroupAlgebraElement.from_elements(r, n, [GroupElement.t(r, n, i, k) for k in range(r)])


def D(lam, r: int) -> GroupAlgebraElement:
    lam = tuple(_sc(lam).parts)
    n = sum(lam)
    return GroupAlgebraElement.from_elements(r, n, young_transversal(lam, n, r))


def F_minus(mu, r: int) -> GroupAlgebraElement:
    """F_{-mu} = product of F_i over positions i in the negative blocks of mu."""
    mu = _sc(mu)
    out = GroupAlgebraElement.from_elements(r, mu.n, [GroupElement.identity(r, mu.n)])
    for a, block in zip(mu.parts, mu.blocks()):
        if a < 0:
            for i in block:
                out = out * F(i, r, mu.n)
    return out


def check_factorization(mu, r: int) -> bool:
    """E_mu = F_{-mu} D_{mu+} in the group algebra."""
    mu = _sc(mu)
    return expand_E(mu, r) == F_minus(mu, r) * D(mu.plus, r)


# --------------------------------------------------------------------------
# span solving


def _distinct_rows(B: np.ndarray) -> np.ndarray:
    """Index of the first occurrence of each distinct row of B."""
    small = B.min(initial=0) >= -128 and B.max(initial=0) <= 127
    rows = np.ascontiguousarray(B.astype(np.int8) if small else B)
    keys = rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()
    _, first = np.unique(keys, return_index=True)
    return np.sort(first)


class SpanSolver:
    """Coordinates with respect to the columns of an integer matrix B (N x D).

    D rows that are independent modulo a large prime are chosen (which
    certifies full column rank over QQ); the D x D block they form is
    inverted exactly, and every solution is re-checked against all N rows.
    If the rows are not independent mod p, ``rank`` is the mod-p rank, a
    lower bound for the rational rank."""

    def __init__(self, B: np.ndarray):
        self.B = B
        N, Dn = B.shape
        first = _distinct_rows(B)
        uniq = B[first]
        pivcols = modular_pivot_rows(uniq) if len(uniq) else []
        self.rank = len(pivcols)
        if self.rank < Dn:
            self.pivots = None
            return
        self.pivots = [int(first[c]) for c in pivcols]
        block = [[int(x) for x in B[p]] for p in self.pivots]
        inv = sparse_inverse(block)
        den = 1
        for row in inv:
            for x in row:
                den = den * x.denominator // np.gcd(den, x.denominator)
        self.den = int(den)
        self.adj = np.array([[int(x * den) for x in row] for row in inv], dtype=object)

    @property
    def full_rank(self) -> bool:
        return self.pivots is not None

    def solve(self, Y: np.ndarray):
        """Return (C, ok): C exact (object array of Fractions/ints), ok iff B C = Y."""
        if not self.full_rank:
            raise ValueError("basis is not linearly independent")
        sub = np.array(Y[self.pivots], dtype=object)
        num = self.adj.dot(sub)
        C = np.empty(num.shape, dtype=object)
        integral = True
        for idx, v in np.ndenumerate(num):
            q = Fraction(int(v), self.den)
            if q.denominator != 1:
                integral = False
            C[idx] = q
        if integral:
            Ci = np.array([[int(x) for x in row] for row in C.reshape(C.shape[0], -1)], dtype=object).reshape(C.shape)
            maxc = max((abs(int(x)) for x in Ci.flat), default=0)
            if maxc * max(1, self.B.shape[1]) < 2**62:
                ok = np.array_equal(self.B.dot(Ci.astype(np.int64)), Y)
            else:
                ok = np.array_equal(self.B.astype(object).dot(Ci), Y.astype(object))
            return Ci, ok
        # rational coordinates: check with exact arithmetic
        lhs = self.B.astype(object).dot(C)
        return C, bool(np.all(lhs == Y.astype(object)))


def _accumulate(index: GroupIndex, elements, B: np.ndarray) -> np.ndarray:
    """(sum of elements) * (each column of B), via left-multiplication maps."""
    Y = np.zeros_like(B)
    for g in elements:
        Y[index.left_map(g)] += B
    return Y


class EBasis:
    """The vectors {E_sigma} for all signed compositions of n, in canonical order."""

    def __init__(self, r: int, n: int, bound: int = DEFAULT_BOUND, mak: bool = False):
        self.r, self.n = r, n
        self.index = group_index(r, n, bound)
        self.mak = mak
        self.labels = enumerate_signed_compositions(n)
        self._sets: dict = {}
        cols = []
        for sigma in self.labels:
            if mak:
                cols.append(self.index.vector(self.elements(sigma)))
            else:
                vec = np.zeros(self.index.size, dtype=np.int64)
                np.add.at(vec, self.index.coset_indices(sigma), 1)
                cols.append(vec)
        self.B = np.stack(cols, axis=1)
        self.solver = SpanSolver(self.B)

    def elements(self, sigma: SignedComposition) -> list:
        els = self._sets.get(sigma)
        if els is None:
            els = mak_transversal(sigma, self.r) if self.mak else list(coset_transversal(sigma, self.r).elements)
            self._sets[sigma] = els
        return els

    @property
    def rank(self) -> int:
        return self.solver.rank

    def products_from(self, mu: SignedComposition):
        """E_mu * E_nu for every nu, as coordinate columns.  Returns (C, ok)."""
        Y = _accumulate(self.index, self.elements(mu), self.B)
        return self.solver.solve(Y)


@lru_cache(maxsize=16)
def e_basis(r: int, n: int, bound: int = DEFAULT_BOUND, mak: bool = False) -> EBasis:
    return EBasis(r, n, bound, mak)


class OutsideSpan(ArithmeticError):
    pass


def oracle_product(mu, nu, r: int, bound: int = DEFAULT_BOUND) -> dict:
    mu, nu = _sc(mu), _sc(nu)
    if mu.n != nu.n:
        raise ValueError("degree mismatch")
    if r < 2:
        raise ValueError("r must be >= 2")
    basis = e_basis(r, mu.n, bound)
    j = basis.labels.index(nu)
    Y = _accumulate(basis.index, basis.elements(mu), basis.B[:, [j]])
    C, ok = basis.solver.solve(Y)
    if not ok:
        raise OutsideSpan(f"E{mu} E{nu} is not in the span of the E basis at r={r}")
    return {s: C[i, 0] for i, s in enumerate(basis.labels) if C[i, 0] != 0}


def oracle_products_all(r: int, n: int, bound: int = DEFAULT_BOUND) -> dict:
    """{(mu, nu): {sigma: coefficient}} for all pairs of degree n."""
    basis = e_basis(r, n, bound)
    out = {}
    for mu in basis.labels:
        C, ok = basis.products_from(mu)
        if not ok:
            raise OutsideSpan(f"a product E{mu} E_nu left the span at r={r}, n={n}")
        for j, nu in enumerate(basis.labels):
            out[(mu, nu)] = {s: C[i, j] for i, s in enumerate(basis.labels) if C[i, j] != 0}
    return out


def rank_of_E(r: int, n: int, bound: int = DEFAULT_BOUND) -> int:
    return e_basis(r, n, bound).rank


# --------------------------------------------------------------------------
# Mak's representatives


@dataclass(frozen=True)
class MakReport:
    n: int
    r: int
    closed: bool
    rank: int
    witness: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "closed": self.closed,
            "rank": self.rank,
            "witness": None if self.witness is None else [m.to_json() for m in self.witness],
        }


def mak_closure_check(n: int, r: int, bound: int = DEFAULT_BOUND) -> MakReport:
    basis = e_basis(r, n, bound, mak=True)
    if not basis.solver.full_rank:
        return MakReport(n, r, False, basis.rank, None)
    for mu in basis.labels:
        Y = _accumulate(basis.index, basis.elements(mu), basis.B)
        C, _ = basis.solver.solve(Y)
        for j, nu in enumerate(basis.labels):
            col = basis.B.astype(object).dot(C[:, j])
            if not np.all(col == Y[:, j].astype(object)):
                return MakReport(n, r, False, basis.rank, (mu, nu))
    return MakReport(n, r, True, basis.rank, None)


# --------------------------------------------------------------------------
# coproduct on the group level


def verify_group_coproduct(mu, r: int, bound: int = DEFAULT_BOUND) -> bool:
    """sum over e in E_mu of Delta(e) equals sum over sign-compatible splits
    of E_{bar c'} (x) E_{bar c''}, as multisets of pairs of group elements."""
    mu = _sc(mu)
    _check_bound(r, mu.n, bound)
    lhs: Counter = Counter()
    for e in coset_transversal(mu, r).elements:
        lhs.update(group_coproduct(e))
    rhs: Counter = Counter()
    for c1, c2 in sign_compatible_splits(mu):
        a, b = c1.bar(), c2.bar()
        for x in coset_transversal(a, r).elements if a.n else [GroupElement.identity(r, 0)]:
            for y in coset_transversal(b, r).elements if b.n else [GroupElement.identity(r, 0)]:
                rhs[(x, y)] += 1
    return lhs == rhs


# --------------------------------------------------------------------------
# raw enumeration checks


def subgroup_indices(mu, r: int, bound: int = DEFAULT_BOUND) -> frozenset:
    """G_mu generated by Pi_mu, by breadth-first closure."""
    from .combinat import generator_set

    mu = _sc(mu)
    idx = group_index(r, mu.n, bound)
    gens = generator_set(mu)
    gen_elems = [GroupElement.t(r, mu.n, i) for i in sorted(gens.t_indices)]
    gen_elems += [GroupElement.s(r, mu.n, i) for i in sorted(gens.s_indices)]
    maps = [idx.right_map(g) for g in gen_elems]
    start = idx.index(GroupElement.identity(r, mu.n))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for m in maps:
                y = int(m[x])
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def brute_force_transversal(mu, r: int, bound: int = DEFAULT_BOUND) -> Optional[list]:
    """Minimal length element of each right coset G_mu g, by raw enumeration.
    Returns None if some coset has no unique minimum."""
    from .wreath import length

    mu = _sc(mu)
    idx = group_index(r, mu.n, bound)
    sub = [idx.element(i) for i in sorted(subgroup_indices(mu, r, bound))]
    seen = np.zeros(idx.size, dtype=bool)
    lengths = np.array([length(idx.element(i)) for i in range(idx.size)])
    left_maps = np.stack([idx.left_map(h) for h in sub])  # coset of b: left_maps[:, b]
    reps = []
    for b in range(idx.size):
        if seen[b]:
            continue
        coset = np.unique(left_maps[:, b])
        seen[coset] = True
        ls = lengths[coset]
        m = ls.min()
        winners = coset[ls == m]
        if len(winners) != 1:
            return None
        reps.append(idx.element(int(winners[0])))
    return sorted(reps, key=GroupElement.sort_key)


def ell0_lengths(r: int, n: int, bound: int = DEFAULT_BOUND) -> np.ndarray:
    """Word length over {t_1, s_1, ..., s_{n-1}} (positive words only), for
    every element index, by breadth-first search from the identity."""
    idx = group_index(r, n, bound)
    gens = [GroupElement.t(r, n, 1)] + [GroupElement.s(r, n, i) for i in range(1, n)] if n else []
    maps = [idx.right_map(g) for g in gens]
    dist = np.full(idx.size, -1, dtype=np.int64)
    start = idx.index(GroupElement.identity(r, n))
    dist[start] = 0
    frontier = np.array([start], dtype=np.int64)
    k = 0
    while len(frontier):
        k += 1
        nxt = np.unique(np.concatenate([m[frontier] for m in maps])) if maps else frontier[:0]
        nxt = nxt[dist[nxt] < 0]
        dist[nxt] = k
        frontier = nxt
    return dist


def brute_force_mak_transversal(mu, r: int, bound: int = DEFAULT_BOUND) -> Optional[list]:
    """The ell_0-minimal element of each right coset G_mu g, or None if some
    coset has several minima."""
    mu = _sc(mu)
    idx = group_index(r, mu.n, bound)
    dist = ell0_lengths(r, mu.n, bound)
    sub = [idx.element(i) for i in sorted(subgroup_indices(mu, r, bound))]
    left_maps = np.stack([idx.left_map(h) for h in sub])
    seen = np.zeros(idx.size, dtype=bool)
    reps = []
    for b in range(idx.size):
        if seen[b]:
            continue
        coset = np.unique(left_maps[:, b])
        seen[coset] = True
        ds = dist[coset]
        winners = coset[ds == ds.min()]
        if len(winners) != 1:
            return None
        reps.append(idx.element(int(winners[0])))
    return sorted(reps, key=GroupElement.sort_key)


def double_cosets(mu, nu, r: int, bound: int = DEFAULT_BOUND) -> list:
    """The (G_mu, G_nu) double cosets as frozensets of element indices."""
    mu, nu = _sc(mu), _sc(nu)
    idx = group_index(r, mu.n, bound)
    left = [idx.left_map(idx.element(i)) for i in sorted(subgroup_indices(mu, r, bound))]
    right = [idx.right_map(idx.element(i)) for i in sorted(subgroup_indices(nu, r, bound))]
    seen = np.zeros(idx.size, dtype=bool)
    out = []
    for b in range(idx.size):
        if seen[b]:
            continue
        one_sided = np.unique(np.array([m[b] for m in left]))
        both = np.unique(np.concatenate([m[one_sided] for m in right]))
        seen[both] = True
        out.append(frozenset(int(x) for x in both))
    return out


def brute_intersection(mu, nu, d: GroupElement, r: int, bound: int = DEFAULT_BOUND) -> Optional[SignedComposition]:
    """The sigma with G_sigma = G_mu cap d G_nu d^{-1}, found by comparing raw
    subgroups; None if the intersection is not a standard reflection subgroup."""
    mu, nu = _sc(mu), _sc(nu)
    idx = group_index(r, mu.n, bound)
    d = d.with_r(r)
    dinv = d.inverse()
    gmu = subgroup_indices(mu, r, bound)
    conj = frozenset(idx.index(d * idx.element(i) * dinv) for i in subgroup_indices(nu, r, bound))
    inter = gmu & conj
    for sigma in enumerate_signed_compositions(mu.n):
        if subgroup_indices(sigma, r, bound) == inter:
            return sigma
    return None


def solomon_descent_product(lam, kappa) -> dict:
    """D_lam D_kappa in QQ S_n written in the basis {D_sigma}, by raw
    multiplication of permutations (r = 1) and triangular solving."""
    from .cosets import young_transversal as yt
    from .combinat import compositions

    lam, kappa = tuple(_sc(lam).parts), tuple(_sc(kappa).parts)
    n = sum(lam)
    prod = Counter()
    for x in yt(lam, n, 1):
        for y in yt(kappa, n, 1):
            prod[(x * y).perm] += 1
    comps = sorted(compositions(n), key=lambda c: canonical_key(SignedComposition(c)))
    sets = {c: {g.perm for g in yt(c, n, 1)} for c in comps}
    basis_rows = [[1 if p in sets[c] else 0 for c in comps] for p in itertools.permutations(range(1, n + 1))]
    B = np.array(basis_rows, dtype=np.int64)
    solver = SpanSolver(B)
    y = np.array([[prod.get(p, 0)] for p in itertools.permutations(range(1, n + 1))], dtype=np.int64)
    C, ok = solver.solve(y)
    if not ok:
        raise OutsideSpan("descent product outside the span")
    return {SignedComposition(c): C[i, 0] for i, c in enumerate(comps) if C[i, 0] != 0}


def verify_products(r: int, n: int, bound: int = DEFAULT_BOUND) -> list:
    """Compare all oracle products at (r, n) with both structure-constant
    algorithms evaluated at x = r; returns the list of mismatching pairs."""
    from .structconst import structure_constants_via_cosets, structure_constants_via_matrices

    bad = []
    for (mu, nu), coeffs in oracle_products_all(r, n, bound).items():
        a = {s: p.evaluate(r) for s, p in structure_constants_via_cosets(mu, nu).terms}
        b = {s: p.evaluate(r) for s, p in structure_constants_via_matrices(mu, nu).terms}
        a = {s: v for s, v in a.items() if v}
        b = {s: v for s, v in b.items() if v}
        if not (coeffs == a == b):
            bad.append((mu, nu))
    return bad
