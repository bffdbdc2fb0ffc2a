"""One-dimensional irreducible modules, character tables and radicals of Sol_q(n).

Labels are signed partitions lambda; E_alpha acts on I(lambda) by the scalar
d_{lambda alpha lambda}(q).  Everything is computed from the structure
constants, without any matrix-algebra decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import SignedComposition, canonical_key, enumerate_signed_compositions, equivalent, signed_partitions
from .linalg import nilpotency_index
from .rings import POLY, QQ, CoefficientRing, ModularRing
from .solalg import AlgebraElement, SolomonAlgebra, algebra
from .structconst import normalizer_index, structure_constants


def _ring_and_q(q, ring: CoefficientRing | None, allow_generic: bool = False):
    if ring is None:
        ring = POLY if getattr(q, "coefficients", None) is not None else QQ
    if ring == POLY:
        if not allow_generic:
            raise ValueError("a field is required (QQ or Z/p with p prime)")
    elif not ring.is_field_like():
        m = getattr(ring, "m", None)
        raise ValueError(f"composite modulus {m} rejected: a field is required")
    return ring, ring.coerce(q)


def _value(lam, alpha, ring, q):
    return ring.evaluate(structure_constants(lam, alpha)[lam], q)


def diagonal_value(lam: SignedComposition, q, ring: CoefficientRing):
    return _value(lam, lam, ring, ring.coerce(q))


def irreducible_labels(n: int, q, ring: CoefficientRing | None = None) -> list:
    ring, q = _ring_and_q(q, ring)
    return [lam for lam in signed_partitions(n) if not ring.is_zero(_value(lam, lam, ring, q))]


@dataclass(frozen=True)
class CharacterTable:
    n: int
    ring: CoefficientRing
    q: object
    labels: tuple
    entries: tuple

    def entry(self, lam, alpha):
        lam = lam if isinstance(lam, SignedComposition) else SignedComposition(lam)
        alpha = alpha if isinstance(alpha, SignedComposition) else SignedComposition(alpha)
        return self.entries[self.labels.index(lam)][self.labels.index(alpha)]

    def as_label_dict(self) -> dict:
        return {(a, b): self.entries[i][j] for i, a in enumerate(self.labels) for j, b in enumerate(self.labels)}

    def is_lower_triangular(self) -> bool:
        return all(
            self.ring.is_zero(self.entries[i][j]) for i in range(len(self.labels)) for j in range(i + 1, len(self.labels))
        )

    def diagonal(self) -> list:
        return [self.entries[i][i] for i in range(len(self.labels))]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": self.ring.name(),
            "q": self.ring.to_json(self.q),
            "labels": [lam.to_json() for lam in self.labels],
            "entries": [[self.ring.to_json(x) for x in row] for row in self.entries],
        }

    def to_csv_rows(self) -> list:
        def cell(x):
            return x.pretty() if hasattr(x, "pretty") else str(x)

        head = ["lambda\\alpha"] + [str(lam) for lam in self.labels]
        return [head] + [[str(lam)] + [cell(x) for x in row] for lam, row in zip(self.labels, self.entries)]


def character_table(n: int, q, ring: CoefficientRing | None = None) -> CharacterTable:
    """Entry (lambda, alpha) = d_{lambda alpha lambda}(q), labels in canonical
    order.  The polynomial ring with q = x gives the generic table."""
    ring, q = _ring_and_q(q, ring, allow_generic=True)
    labels = tuple(signed_partitions(n))
    entries = tuple(tuple(_value(lam, alpha, ring, q) for alpha in labels) for lam in labels)
    return CharacterTable(n, ring, q, labels, entries)


@dataclass(frozen=True)
class RadicalBasis:
    n: int
    ring: CoefficientRing
    q: object
    difference_elements: tuple  # (lambda, mu): E_lambda - E_mu
    degenerate_elements: tuple  # lambda: E_lambda with d_{lll}(q) = 0

    def __len__(self) -> int:
        return len(self.difference_elements) + len(self.degenerate_elements)

    @property
    def quotient_dimension(self) -> int:
        return 2 * 3 ** (self.n - 1) - len(self) if self.n else 1 - len(self)

    def elements(self) -> list:
        alg = algebra(self.n, self.ring, self.q)
        out = [alg.E(lam) - alg.E(mu) for lam, mu in self.difference_elements]
        out += [alg.E(lam) for lam in self.degenerate_elements]
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ring": self.ring.name(),
            "q": self.ring.to_json(self.q),
            "differences": [[lam.to_json(), mu.to_json()] for lam, mu in self.difference_elements],
            "degenerate": [lam.to_json() for lam in self.degenerate_elements],
            "quotient_dimension": self.quotient_dimension,
        }


def radical_basis(n: int, q, ring: CoefficientRing | None = None) -> RadicalBasis:
    ring, q = _ring_and_q(q, ring)
    comps = enumerate_signed_compositions(n)
    diffs = []
    degenerate = []
    for lam in signed_partitions(n):
        for mu in comps:
            if mu != lam and equivalent(lam, mu):
                diffs.append((lam, mu))
        if ring.is_zero(_value(lam, lam, ring, q)):
            degenerate.append(lam)
    return RadicalBasis(n, ring, q, tuple(diffs), tuple(degenerate))


def is_semisimple(n: int, q, ring: CoefficientRing | None = None) -> bool:
    return len(radical_basis(n, q, ring)) == 0


# --------------------------------------------------------------------------
# diagnostics


def quotient_action(alg: SolomonAlgebra, lam: SignedComposition, alpha: SignedComposition):
    """Scalar by which E_alpha acts (on the right) on the one-dimensional
    quotient S_lam / S_{>lam} of the canonical-order filtration.  Raises if
    E_lam E_alpha leaves S_lam, i.e. if the filtration is not by right ideals."""
    prod = alg.E(lam) * alg.E(alpha)
    key = canonical_key(lam)
    for sigma in prod.coeffs:
        if sigma != lam and canonical_key(sigma) <= key:
            raise AssertionError(f"E{lam}E{alpha} has a term E{sigma} outside the filtration piece")
    return prod.coefficient(lam)


@dataclass(frozen=True)
class NilpotencyRow:
    lam: SignedComposition
    diagonal: object
    normalizer_value: object
    nilpotent: bool

    @property
    def consistent(self) -> bool:
        """d_{lll}(q) = 0 exactly when E_lam is nilpotent."""
        return self.nilpotent == (self.diagonal == 0 or _is_zero_poly(self.diagonal))

    @property
    def normalizer_agrees(self) -> bool:
        return (self.normalizer_value == 0) == self.nilpotent


def _is_zero_poly(v) -> bool:
    return hasattr(v, "is_zero") and v.is_zero()


def nilpotency_report(n: int, q, ring: CoefficientRing | None = None) -> list:
    """Per signed partition: d_{lll}(q), the normalizer-index formula
    q^{|l|^-}[N:S] evaluated in the ring, and whether E_lam is nilpotent."""
    ring, q = _ring_and_q(q, ring)
    alg = algebra(n, ring, q)
    rows = []
    for lam in signed_partitions(n):
        d = _value(lam, lam, ring, q)
        qpow = ring.one
        for _ in range(lam.neg_size):
            qpow = ring.mul(qpow, q)
        norm = ring.mul(qpow, ring.coerce(normalizer_index(lam)))
        m = alg.regular_representation(alg.E(lam))
        rows.append(NilpotencyRow(lam, d, norm, nilpotency_index(m, ring) is not None))
    return rows


def radical_is_nilpotent(rb: RadicalBasis) -> bool:
    alg = algebra(rb.n, rb.ring, rb.q)
    for a in rb.elements():
        if nilpotency_index(alg.regular_representation(a), rb.ring) is None:
            return False
    return True


def field_for(mod: int | None) -> CoefficientRing:
    return QQ if mod is None else ModularRing(mod)


__all__ = [
    "AlgebraElement",
    "CharacterTable",
    "RadicalBasis",
    "character_table",
    "irreducible_labels",
    "radical_basis",
    "is_semisimple",
    "quotient_action",
    "nilpotency_report",
    "radical_is_nilpotent",
]
