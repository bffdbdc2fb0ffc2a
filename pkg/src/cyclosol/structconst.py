"""Structure-constant polynomials d_{mu nu sigma}(x) with
E_mu E_nu = sum_sigma d_{mu nu sigma}(x) E_sigma.

Two independent algorithms:

* ``cosets``: one term x^{wt} per d in D_{mu+ nu+}, landing on mu cap d nu;
* ``matrices``: one term x^{wt(M)} per sign-constrained matrix M with row
  sums mu^+ and column sums nu^+, landing on comp(M).
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Mapping, Optional

from .combinat import (
    SignedComposition,
    canonical_key,
    enumerate_signed_compositions,
    enumerate_struct_matrices,
    signed_partitions,
)
from .cosets import double_coset_families
from .poly import IntPolynomial

CACHE_VERSION = 1
COSET_ALGORITHM_MAX_N = 6


@dataclass(frozen=True)
class StructureConstants:
    mu: SignedComposition
    nu: SignedComposition
    terms: tuple  # ((sigma, IntPolynomial), ...) in canonical order of sigma

    @classmethod
    def from_map(cls, mu, nu, terms: Mapping) -> "StructureConstants":
        items = sorted(((s, p) for s, p in terms.items() if not p.is_zero()), key=lambda sp: canonical_key(sp[0]))
        return cls(mu, nu, tuple(items))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __getitem__(self, sigma) -> IntPolynomial:
        sigma = sigma if isinstance(sigma, SignedComposition) else SignedComposition(sigma)
        return self.as_dict().get(sigma, IntPolynomial())

    def evaluate(self, q) -> dict:
        return {s: p.evaluate(q) for s, p in self.terms}

    def to_json(self) -> dict:
        return {
            "mu": self.mu.to_json(),
            "nu": self.nu.to_json(),
            "terms": [{"sigma": s.to_json(), "poly": p.to_json(), "pretty": p.pretty()} for s, p in self.terms],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StructureConstants":
        terms = {SignedComposition(t["sigma"]): IntPolynomial.from_json(t["poly"]) for t in data["terms"]}
        return cls.from_map(SignedComposition(data["mu"]), SignedComposition(data["nu"]), terms)


def _check(mu, nu):
    mu = mu if isinstance(mu, SignedComposition) else SignedComposition(mu)
    nu = nu if isinstance(nu, SignedComposition) else SignedComposition(nu)
    if mu.n != nu.n:
        raise ValueError(f"degree mismatch: |mu|={mu.n}, |nu|={nu.n}")
    return mu, nu


def _collect(mu, nu, pairs) -> StructureConstants:
    # pairs: iterable of (sigma, exponent)
    counts: dict = defaultdict(Counter)
    for sigma, k in pairs:
        counts[sigma][k] += 1
    terms = {}
    for sigma, c in counts.items():
        coeffs = [0] * (max(c) + 1)
        for k, m in c.items():
            coeffs[k] = m
        terms[sigma] = IntPolynomial(coeffs)
    return StructureConstants.from_map(mu, nu, terms)


def structure_constants_via_cosets(mu, nu) -> StructureConstants:
    mu, nu = _check(mu, nu)
    return _collect(mu, nu, ((f.intersection_left, f.wt) for f in double_coset_families(mu, nu)))


def structure_constants_via_matrices(mu, nu) -> StructureConstants:
    mu, nu = _check(mu, nu)
    return _collect(mu, nu, ((m.comp, m.wt) for m in enumerate_struct_matrices(mu, nu)))


# --------------------------------------------------------------------------
# memoized front end with optional disk cache


class ConstantCache:
    """Thread-safe in-memory memo plus an optional JSON file per (n, mu, nu)."""

    def __init__(self, directory: Optional[str] = None):
        self._lock = threading.Lock()
        self._mem: dict = {}
        self.directory = directory

    def set_directory(self, directory: Optional[str]) -> None:
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.directory = directory

    def clear(self) -> None:
        with self._lock:
            self._mem.clear()

    def _path(self, mu: SignedComposition, nu: SignedComposition) -> str:
        key = json.dumps([mu.n, mu.to_json(), nu.to_json()], separators=(",", ":"))
        digest = hashlib.sha256(key.encode()).hexdigest()
        return os.path.join(self.directory, f"{digest}.json")

    def get(self, mu, nu, compute) -> StructureConstants:
        key = (mu, nu)
        with self._lock:
            hit = self._mem.get(key)
        if hit is not None:
            return hit
        value = None
        if self.directory:
            value = self._load(mu, nu)
        if value is None:
            value = compute()
            if self.directory:
                self._store(value)
        with self._lock:
            # first writer wins, so every reader sees the same object
            value = self._mem.setdefault(key, value)
        return value

    def _load(self, mu, nu) -> Optional[StructureConstants]:
        path = self._path(mu, nu)
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return None
        if data.get("version") != CACHE_VERSION:
            return None
        sc = StructureConstants.from_json(data["constants"])
        if sc.mu != mu or sc.nu != nu:
            return None
        return sc

    def _store(self, sc: StructureConstants) -> None:
        path = self._path(sc.mu, sc.nu)
        tmp = f"{path}.{os.getpid()}.{threading.get_ident()}.tmp"
        with open(tmp, "w") as fh:
            json.dump({"version": CACHE_VERSION, "constants": sc.to_json()}, fh, sort_keys=True)
        os.replace(tmp, path)


CACHE = ConstantCache()


def structure_constants(mu, nu, method: str = "auto") -> StructureConstants:
    mu, nu = _check(mu, nu)
    if method == "cosets":
        return structure_constants_via_cosets(mu, nu)
    if method == "matrices":
        return structure_constants_via_matrices(mu, nu)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if mu.n <= COSET_ALGORITHM_MAX_N:
        return CACHE.get(mu, nu, lambda: structure_constants_via_cosets(mu, nu))
    return CACHE.get(mu, nu, lambda: structure_constants_via_matrices(mu, nu))


def constant(mu, nu, sigma) -> IntPolynomial:
    """d_{mu nu sigma}(x)."""
    return structure_constants(mu, nu)[sigma]


# --------------------------------------------------------------------------
# the diagonal constants d_{lambda lambda lambda}


def signed_multiset_stabilizer(lam: SignedComposition) -> int:
    """s(lambda): product over distinct signed part values of (multiplicity)!."""
    out = 1
    for m in Counter(lam.parts).values():
        out *= factorial(m)
    return out


def normalizer_index(lam: SignedComposition) -> int:
    """[N(S_{lambda+}) : S_{lambda+}]: permutations of equal-size parts, signs ignored."""
    out = 1
    for m in Counter(abs(a) for a in lam.parts).values():
        out *= factorial(m)
    return out


def diagonal_constant(lam, method: str = "auto") -> IntPolynomial:
    lam = lam if isinstance(lam, SignedComposition) else SignedComposition(lam)
    return structure_constants(lam, lam, method)[lam]


def diagonal_formula(lam: SignedComposition) -> IntPolynomial:
    return IntPolynomial.monomial(lam.neg_size, signed_multiset_stabilizer(lam))


def normalizer_formula(lam: SignedComposition) -> IntPolynomial:
    return IntPolynomial.monomial(lam.neg_size, normalizer_index(lam))


@dataclass(frozen=True)
class DiagonalDiscrepancy:
    lam: SignedComposition
    computed: IntPolynomial
    stabilizer_formula: IntPolynomial
    normalizer_formula: IntPolynomial

    @property
    def flagged(self) -> bool:
        return self.computed != self.normalizer_formula

    @property
    def consistent(self) -> bool:
        return self.computed == self.stabilizer_formula

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "computed": self.computed.to_json(),
            "stabilizer_formula": self.stabilizer_formula.to_json(),
            "normalizer_formula": self.normalizer_formula.to_json(),
            "flagged": self.flagged,
        }


def discrepancy_report(max_n: int) -> list:
    """For each signed partition with 1 <= n <= max_n: d_{lll}(x) from both
    general algorithms (they must agree), the closed form x^{|l|^-} s(l), and
    the normalizer-index formula; ``flagged`` marks where the latter differs."""
    out = []
    for n in range(1, max_n + 1):
        for lam in signed_partitions(n):
            a = diagonal_constant(lam, "cosets")
            b = diagonal_constant(lam, "matrices")
            if a != b:
                raise AssertionError(f"algorithms disagree on d_lll for {lam}: {a} vs {b}")
            out.append(DiagonalDiscrepancy(lam, a, diagonal_formula(lam), normalizer_formula(lam)))
    return out


def all_pairs(n: int):
    comps = enumerate_signed_compositions(n)
    for mu in comps:
        for nu in comps:
            yield mu, nu
