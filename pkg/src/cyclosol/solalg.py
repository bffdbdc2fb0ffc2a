"""Arithmetic in Sol_q(n), the free R-module on {E_mu : mu a signed
composition of n} with E_mu E_nu = sum_sigma d_{mu nu sigma}(q) E_sigma."""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Mapping

from .combinat import SignedComposition, canonical_key, enumerate_signed_compositions
from .linalg import mat_mul, nilpotency_index
from .poly import IntPolynomial
from .rings import POLY, QQ, CoefficientRing, RingMismatch
from .structconst import structure_constants


def _sc(mu) -> SignedComposition:
    return mu if isinstance(mu, SignedComposition) else SignedComposition(mu)


class SolomonAlgebra:
    """Sol_q(n) over ``ring`` at parameter ``q`` (a ring element; the
    polynomial ring with q = x gives the generic algebra Sol_x(n))."""

    def __init__(self, n: int, ring: CoefficientRing = POLY, q=None):
        if n < 0:
            raise ValueError("n must be non-negative")
        if q is None:
            if ring != POLY:
                raise ValueError("q is required unless the ring is QQ[x]")
            q = IntPolynomial.x()
        self.n = n
        self.ring = ring
        self.q = ring.coerce(q)
        self.basis = tuple(enumerate_signed_compositions(n))
        self.index = {mu: i for i, mu in enumerate(self.basis)}
        self._lock = threading.Lock()
        self._products: dict = {}

    def _key(self):
        return (self.n, self.ring, self.q)

    def __eq__(self, other):
        return isinstance(other, SolomonAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Sol_q({self.n}) over {self.ring.name()} at q={self.q}"

    @property
    def dimension(self) -> int:
        return len(self.basis)

    # elements
    def E(self, mu) -> "AlgebraElement":
        mu = _sc(mu)
        if mu.n != self.n:
            raise ValueError(f"{mu} is not a signed composition of {self.n}")
        return AlgebraElement(self, {mu: self.ring.one})

    def element(self, coeffs: Mapping) -> "AlgebraElement":
        out = {}
        for mu, c in coeffs.items():
            mu = _sc(mu)
            if mu.n != self.n:
                raise ValueError(f"{mu} is not a signed composition of {self.n}")
            out[mu] = self.ring.add(out.get(mu, self.ring.zero), self.ring.coerce(c))
        return AlgebraElement(self, out)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def identity(self) -> "AlgebraElement":
        return self.E(SignedComposition((self.n,)) if self.n else SignedComposition(()))

    # products of basis elements
    def basis_product(self, mu: SignedComposition, nu: SignedComposition) -> dict:
        key = (mu, nu)
        with self._lock:
            hit = self._products.get(key)
        if hit is not None:
            return hit
        sc = structure_constants(mu, nu)
        ev = {}
        for sigma, poly in sc.terms:
            v = self.ring.evaluate(poly, self.q)
            if not self.ring.is_zero(v):
                ev[sigma] = v
        with self._lock:
            self._products.setdefault(key, ev)
        return ev

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        self._check(a)
        self._check(b)
        ring = self.ring
        out: dict = {}
        for mu, ca in a.coeffs.items():
            for nu, cb in b.coeffs.items():
                cab = ring.mul(ca, cb)
                if ring.is_zero(cab):
                    continue
                for sigma, d in self.basis_product(mu, nu).items():
                    out[sigma] = ring.add(out.get(sigma, ring.zero), ring.mul(cab, d))
        return AlgebraElement(self, out)

    def _check(self, a: "AlgebraElement") -> None:
        if a.parent != self:
            if a.parent.n != self.n:
                raise ValueError(f"degree mismatch: {a.parent.n} vs {self.n}")
            raise RingMismatch(f"element of {a.parent!r} used in {self!r}")

    def coordinates(self, a: "AlgebraElement") -> list:
        return [a.coeffs.get(mu, self.ring.zero) for mu in self.basis]

    def regular_representation(self, a: "AlgebraElement") -> list:
        """Matrix of x -> a x; column j holds the coordinates of a E_{basis[j]}."""
        cols = [self.coordinates(self.multiply(a, self.E(mu))) for mu in self.basis]
        dim = len(self.basis)
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]


class AlgebraElement:
    """Finitely supported map SignedComposition -> ring value, in the E-basis."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: SolomonAlgebra, coeffs: Mapping):
        ring = parent.ring
        self.parent = parent
        self.coeffs = {mu: c for mu, c in coeffs.items() if not ring.is_zero(c)}

    @property
    def n(self) -> int:
        return self.parent.n

    @property
    def ring(self) -> CoefficientRing:
        return self.parent.ring

    def support(self) -> list:
        return sorted(self.coeffs, key=canonical_key)

    def coefficient(self, mu):
        return self.coeffs.get(_sc(mu), self.ring.zero)

    def items(self):
        return [(mu, self.coeffs[mu]) for mu in self.support()]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: "AlgebraElement") -> None:
        self.parent._check(other)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        ring = self.ring
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = ring.add(out.get(mu, ring.zero), c)
        return AlgebraElement(self.parent, out)

    def __neg__(self):
        return AlgebraElement(self.parent, {mu: self.ring.neg(c) for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        ring = self.ring
        c = ring.coerce(c)
        return AlgebraElement(self.parent, {mu: ring.mul(c, v) for mu, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.parent.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.parent.identity()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.parent == other.parent and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.parent, frozenset(self.coeffs.items())))

    def __repr__(self):
        return self.pretty()

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for mu, c in self.items():
            cs = c.pretty() if isinstance(c, IntPolynomial) else str(c)
            if cs == "1":
                pieces.append(f"E{mu}")
            else:
                if isinstance(c, IntPolynomial) and len([x for x in c.coefficients if x]) > 1:
                    cs = f"({cs})"
                pieces.append(f"{cs}*E{mu}")
        return " + ".join(pieces)

    def to_json(self) -> dict:
        ring = self.ring
        return {
            "n": self.n,
            "ring": ring.name(),
            "q": ring.to_json(self.parent.q),
            "terms": [{"mu": mu.to_json(), "coeff": ring.to_json(c)} for mu, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraElement":
        from .rings import ring_from_name

        ring = ring_from_name(data.get("ring", "QQ"))
        alg = algebra(int(data["n"]), ring, ring.from_json(data["q"]))
        return alg.element({SignedComposition(t["mu"]): ring.from_json(t["coeff"]) for t in data["terms"]})


@lru_cache(maxsize=128)
def algebra(n: int, ring: CoefficientRing = POLY, q=None) -> SolomonAlgebra:
    """Shared SolomonAlgebra instances (they carry the evaluated-constant memo)."""
    return SolomonAlgebra(n, ring, q)


def algebra_multiply(a: AlgebraElement, b: AlgebraElement, q=None) -> AlgebraElement:
    """a*b in Sol_q(n).  ``q`` defaults to the elements' own parameter; if
    given it must belong to their coefficient ring."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    if a.ring != b.ring:
        raise RingMismatch(f"cannot multiply elements over {a.ring.name()} and {b.ring.name()}")
    if q is None:
        return a * b
    alg = algebra(a.n, a.ring, a.ring.coerce(q))
    return alg.element(a.coeffs) * alg.element(b.coeffs)


def regular_representation(a: AlgebraElement, q=None) -> list:
    if q is not None and a.ring.coerce(q) != a.parent.q:
        a = algebra(a.n, a.ring, a.ring.coerce(q)).element(a.coeffs)
    return a.parent.regular_representation(a)


def is_nilpotent(a: AlgebraElement) -> bool:
    m = regular_representation(a)
    return nilpotency_index(m, a.ring) is not None


def check_homomorphism(a: AlgebraElement, b: AlgebraElement) -> bool:
    ring = a.ring
    return regular_representation(a * b) == mat_mul(regular_representation(a), regular_representation(b), ring)


# --------------------------------------------------------------------------
# ideals and subalgebras


def filtration_level(mu: SignedComposition) -> int:
    return mu.pos_size


def in_subalgebra(mu: SignedComposition, which) -> bool:
    if which == "plus":
        return all(a > 0 for a in mu.parts)
    if which == "plus-minus":
        return all(a > 0 for a in mu.parts) or all(a < 0 for a in mu.parts)
    if which == "first-part":
        return all(a > 0 for a in mu.parts[1:])
    if which == "first-part-negative":
        return all(a < 0 for a in mu.parts[1:])
    kind, i = _level(which)
    if kind == "level":
        return filtration_level(mu) >= i
    if kind == "ideal":
        return filtration_level(mu) <= i
    raise ValueError(f"unknown subalgebra {which!r}")


def _level(which):
    if isinstance(which, int) and not isinstance(which, bool):
        return "level", which
    if isinstance(which, tuple) and len(which) == 2 and which[0] in ("level", "ideal"):
        return which[0], int(which[1])
    if isinstance(which, str):
        for kind in ("level", "ideal"):
            if which.startswith(kind + "-"):
                try:
                    return kind, int(which[len(kind) + 1 :])
                except ValueError:
                    break
    return None, None


def subalgebra_membership(a: AlgebraElement, which) -> bool:
    """Support-based membership.  ``which`` is one of

    * 'plus': compositions only; 'plus-minus': all parts of one sign;
    * 'first-part': parts after the first are positive;
    * 'first-part-negative': parts after the first are negative;
    * a level i given as an int, ('level', i) or 'level-i': |sigma|^+ >= i;
    * ('ideal', i) or 'ideal-i': |sigma|^+ <= i.

    Products only lower |sigma|^+, so the 'ideal-i' spans are the two-sided
    ideals; 'level-i' spans contain the identity for i <= n and are not.
    Likewise 'first-part' is not closed (E(-1,1)^2 involves E(-1,-1)),
    while 'first-part-negative' is."""
    return all(in_subalgebra(mu, which) for mu in a.coeffs)


def positive_projection(a: AlgebraElement) -> AlgebraElement:
    """E_mu -> E_{mu+}.  At q = 1 this is the quotient map onto Solomon's
    descent algebra of S_n (it is not an algebra map for other q)."""
    ring = a.ring
    out: dict = {}
    for mu, c in a.coeffs.items():
        p = mu.plus
        out[p] = ring.add(out.get(p, ring.zero), c)
    return AlgebraElement(a.parent, out)


def generic_algebra(n: int) -> SolomonAlgebra:
    return algebra(n, POLY, IntPolynomial.x())


def rational_algebra(n: int, q) -> SolomonAlgebra:
    return algebra(n, QQ, QQ.coerce(q))
