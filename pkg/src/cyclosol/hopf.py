"""The graded Hopf algebra Sol(r) = sum_n Sol(G_{r,n}).

Elements are finite sums of basis elements E_mu over all degrees, with
rational coefficients (or polynomials in x when the internal product is
taken generically).  The product is concatenation of signed compositions
("shuffle product"), the coproduct is
    Delta(E_mu) = sum over sign-compatible splits mu = c' + c'' of E_{bar c'} (x) E_{bar c''},
and the antipode is computed through the free generators P_{+-k}.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Iterable, Mapping

from .combinat import (
    SignedComposition,
    canonical_key,
    compositions,
    enumerate_signed_compositions,
    sign_compatible_splits,
)
from .linalg import rank
from .poly import IntPolynomial
from .structconst import structure_constants
from .wreath import GroupElement, from_word, to_word

EMPTY = SignedComposition(())


def _sc(mu) -> SignedComposition:
    return mu if isinstance(mu, SignedComposition) else SignedComposition(mu)


def _coerce_coeff(c):
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, IntPolynomial)):
        return c
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


def _is_zero(c) -> bool:
    return c == 0


def _fmt(c) -> str:
    if isinstance(c, IntPolynomial):
        return f"({c.pretty()})"
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def _coeff_json(c):
    if isinstance(c, IntPolynomial):
        return c.to_json()
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GradedElement:
    """Finitely supported map SignedComposition -> coefficient; the degree of
    a term is the size of its composition."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        out = {}
        for mu, c in (terms or {}).items():
            mu = _sc(mu)
            c = _coerce_coeff(c)
            out[mu] = out.get(mu, 0) + c
        self.terms = {mu: c for mu, c in out.items() if not _is_zero(c)}

    @classmethod
    def E(cls, mu) -> "GradedElement":
        return cls({_sc(mu): 1})

    @classmethod
    def one(cls) -> "GradedElement":
        return cls({EMPTY: 1})

    @classmethod
    def zero(cls) -> "GradedElement":
        return cls()

    def degrees(self) -> set:
        return {mu.n for mu in self.terms}

    def component(self, n: int) -> "GradedElement":
        return GradedElement({mu: c for mu, c in self.terms.items() if mu.n == n})

    def max_degree(self) -> int:
        return max((mu.n for mu in self.terms), default=0)

    def coefficient(self, mu):
        return self.terms.get(_sc(mu), 0)

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].n, canonical_key(kv[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GradedElement") -> "GradedElement":
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return GradedElement(out)

    def __neg__(self) -> "GradedElement":
        return GradedElement({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return self + (-other)

    def scale(self, c) -> "GradedElement":
        c = _coerce_coeff(c)
        return GradedElement({mu: c * v for mu, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GradedElement):
            return shuffle_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{_fmt(c)}*E{mu}" if c != 1 else f"E{mu}" for mu, c in self.items())

    def to_json(self) -> dict:
        return {"terms": [{"mu": mu.to_json(), "coeff": _coeff_json(c)} for mu, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "GradedElement":
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            terms[SignedComposition(t["mu"])] = IntPolynomial.from_json(c) if isinstance(c, list) else Fraction(c)
        return cls(terms)


class GradedTensor:
    """Finitely supported map (mu_1, ..., mu_k) -> coefficient in Sol(r)^{(x) k}."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping | None = None):
        self.arity = arity
        out = {}
        for key, c in (terms or {}).items():
            key = tuple(_sc(mu) for mu in key)
            if len(key) != arity:
                raise ValueError("tensor key of the wrong arity")
            out[key] = out.get(key, 0) + _coerce_coeff(c)
        self.terms = {k: c for k, c in out.items() if not _is_zero(c)}

    def __add__(self, other: "GradedTensor") -> "GradedTensor":
        if other.arity != self.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return GradedTensor(self.arity, out)

    def __sub__(self, other: "GradedTensor") -> "GradedTensor":
        return self + GradedTensor(other.arity, {k: -c for k, c in other.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def items(self) -> list:
        return sorted(
            self.terms.items(), key=lambda kv: tuple((mu.n, canonical_key(mu)) for mu in kv[0])
        )

    def total_degrees(self) -> set:
        return {sum(mu.n for mu in k) for k in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, c in self.items():
            body = " (x) ".join(f"E{mu}" for mu in k)
            pieces.append(body if c == 1 else f"{_fmt(c)}*{body}")
        return " + ".join(pieces)

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [{"factors": [mu.to_json() for mu in k], "coeff": _coeff_json(c)} for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GradedTensor":
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            key = tuple(SignedComposition(mu) for mu in t["factors"])
            terms[key] = IntPolynomial.from_json(c) if isinstance(c, list) else Fraction(c)
        return cls(int(data["arity"]), terms)

    def apply(self, position: int, fn) -> "GradedTensor":
        """Apply a linear map GradedElement -> GradedElement (or GradedTensor)
        to one tensor factor."""
        out: dict = {}
        arity = None
        for key, c in self.terms.items():
            img = fn(GradedElement.E(key[position]))
            if isinstance(img, GradedElement):
                parts = [((mu,), v) for mu, v in img.terms.items()]
            else:
                parts = list(img.terms.items())
            for sub, v in parts:
                newkey = key[:position] + tuple(sub) + key[position + 1 :]
                arity = len(newkey)
                out[newkey] = out.get(newkey, 0) + c * v
        return GradedTensor(arity if arity is not None else self.arity, out)


def tensor(*elements: GradedElement) -> GradedTensor:
    out = {}
    for combo in iproduct(*(e.terms.items() for e in elements)):
        key = tuple(mu for mu, _ in combo)
        c = 1
        for _, v in combo:
            c = c * v
        out[key] = out.get(key, 0) + c
    return GradedTensor(len(elements), out)


# --------------------------------------------------------------------------
# product, coproduct, counit


def shuffle_product(a: GradedElement, b: GradedElement) -> GradedElement:
    out: dict = {}
    for mu, c in a.terms.items():
        for nu, d in b.terms.items():
            key = mu.concat(nu)
            out[key] = out.get(key, 0) + c * d
    return GradedElement(out)


def tensor_shuffle(s: GradedTensor, t: GradedTensor) -> GradedTensor:
    """Componentwise concatenation product on tensors."""
    if s.arity != t.arity:
        raise ValueError("arity mismatch")
    out: dict = {}
    for k1, c in s.terms.items():
        for k2, d in t.terms.items():
            key = tuple(a.concat(b) for a, b in zip(k1, k2))
            out[key] = out.get(key, 0) + c * d
    return GradedTensor(s.arity, out)


def _basis_coproduct(mu: SignedComposition) -> dict:
    out: dict = {}
    for c1, c2 in sign_compatible_splits(mu):
        key = (c1.bar(), c2.bar())
        out[key] = out.get(key, 0) + 1
    return out


def coproduct(a: GradedElement) -> GradedTensor:
    out: dict = {}
    for mu, c in a.terms.items():
        for key, m in _basis_coproduct(mu).items():
            out[key] = out.get(key, 0) + c * m
    return GradedTensor(2, out)


def counit(a: GradedElement):
    return a.coefficient(EMPTY)


def multiplication(t: GradedTensor) -> GradedElement:
    """m: a (x) b -> a * b on a 2-tensor."""
    if t.arity != 2:
        raise ValueError("multiplication needs a 2-tensor")
    out: dict = {}
    for (mu, nu), c in t.terms.items():
        key = mu.concat(nu)
        out[key] = out.get(key, 0) + c
    return GradedElement(out)


# --------------------------------------------------------------------------
# primitives and the change of basis E <-> P


def _sign(k: int) -> int:
    if k == 0:
        raise ValueError("k must be non-zero")
    return 1 if k > 0 else -1


def primitive_generator(k: int) -> GradedElement:
    """P_k = sum over compositions alpha of |k| of (-1)^{l-1}/l * E_{sign(k) alpha}."""
    s = _sign(k)
    terms = {}
    for alpha in compositions(abs(k)):
        l = len(alpha)
        terms[SignedComposition(s * a for a in alpha)] = Fraction((-1) ** (l - 1), l)
    return GradedElement(terms)


def primitive_word(word: Iterable[int]) -> GradedElement:
    out = GradedElement.one()
    for k in word:
        out = shuffle_product(out, primitive_generator(k))
    return out


def _exp_expansion(k: int) -> dict:
    """E_{(k)} = sum over compositions alpha of |k| of 1/l! * P_{sign(k) alpha}."""
    s = _sign(k)
    return {tuple(s * a for a in alpha): Fraction(1, factorial(len(alpha))) for alpha in compositions(abs(k))}


def expand_in_primitives(a: GradedElement, max_degree: int | None = None) -> dict:
    """Coordinates of ``a`` in the basis of P-words P_{w_1} * ... * P_{w_m}.
    Words are tuples of non-zero integers."""
    if max_degree is not None and a.max_degree() > max_degree:
        raise ValueError(f"element has terms above degree {max_degree}")
    out: dict = {}
    for mu, c in a.terms.items():
        partial = {(): Fraction(1)}
        for part in mu.parts:
            nxt: dict = {}
            exp = _exp_expansion(part)
            for w, v in partial.items():
                for w2, v2 in exp.items():
                    key = w + w2
                    nxt[key] = nxt.get(key, 0) + v * v2
            partial = nxt
        for w, v in partial.items():
            out[w] = out.get(w, 0) + c * v
    return {w: v for w, v in out.items() if v != 0}


def from_primitives(words: Mapping) -> GradedElement:
    out = GradedElement()
    for w, c in words.items():
        out = out + primitive_word(w).scale(c)
    return out


def antipode(a: GradedElement) -> GradedElement:
    """S(P_{w_1} ... P_{w_m}) = (-1)^m P_{w_m} ... P_{w_1}, extended linearly."""
    coords = expand_in_primitives(a)
    flipped: dict = {}
    for w, c in coords.items():
        key = tuple(reversed(w))
        flipped[key] = flipped.get(key, 0) + (-1) ** len(w) * c
    return from_primitives(flipped)


def primitive_matrix(n: int) -> tuple:
    """Rows: P-words of degree n (indexed like signed compositions); columns:
    E-basis coordinates.  Returned with the basis list."""
    basis = enumerate_signed_compositions(n)
    rows = []
    for w in basis:
        p = primitive_word(w.parts)
        rows.append([p.coefficient(mu) for mu in basis])
    return basis, rows


def refines(fine: SignedComposition, coarse: SignedComposition) -> bool:
    """fine is obtained from coarse by splitting parts into same-sign pieces."""
    i = 0
    for a in coarse.parts:
        total = 0
        while total < abs(a):
            if i >= len(fine.parts) or (fine[i] > 0) != (a > 0):
                return False
            total += abs(fine[i])
            i += 1
        if total != abs(a):
            return False
    return i == len(fine.parts)


def is_unitriangular(n: int) -> bool:
    """P_w = E_w + (terms E_v with v a proper refinement of w), and the
    transition matrix has full rank."""
    basis, rows = primitive_matrix(n)
    for w, row in zip(basis, rows):
        for mu, c in zip(basis, row):
            if mu == w:
                if c != 1:
                    return False
            elif c != 0 and not refines(mu, w):
                return False
    return rank(rows) == len(basis)


# --------------------------------------------------------------------------
# internal product


def _specialize(poly: IntPolynomial, q):
    if q is None:
        return poly
    return poly.evaluate(q)


def internal_product(a: GradedElement, b: GradedElement, q=None) -> GradedElement:
    """Degreewise product in Sol_q(n); terms of different degrees multiply to
    zero.  ``q=None`` means the generic parameter x (polynomial coefficients)."""
    out: dict = {}
    for mu, c in a.terms.items():
        for nu, d in b.terms.items():
            if mu.n != nu.n:
                continue
            cd = c * d
            for sigma, poly in structure_constants(mu, nu).terms:
                v = _specialize(poly, q)
                out[sigma] = out.get(sigma, 0) + cd * v
    return GradedElement(out)


def tensor_internal_product(s: GradedTensor, t: GradedTensor, q=None) -> GradedTensor:
    if s.arity != t.arity:
        raise ValueError("arity mismatch")
    out: dict = {}
    for k1, c in s.terms.items():
        for k2, d in t.terms.items():
            if any(a.n != b.n for a, b in zip(k1, k2)):
                continue
            factors = [internal_product(GradedElement.E(a), GradedElement.E(b), q) for a, b in zip(k1, k2)]
            for combo in iproduct(*(f.terms.items() for f in factors)):
                key = tuple(mu for mu, _ in combo)
                v = c * d
                for _, x in combo:
                    v = v * x
                out[key] = out.get(key, 0) + v
    return GradedTensor(s.arity, out)


# --------------------------------------------------------------------------
# the coproduct on coloured permutations


def group_coproduct(g: GroupElement) -> list:
    """Delta(g) = sum_m g_(m) (x) g'_(m): the letters of the word of g with
    values <= m (kept in order) and the remaining letters shifted down by m."""
    word = to_word(g)
    out = []
    for m in range(g.n + 1):
        left = [(v, c) for v, c in word if v <= m]
        right = [(v - m, c) for v, c in word if v > m]
        out.append((from_word(left, g.r), from_word(right, g.r)))
    return out


# --------------------------------------------------------------------------
# axiom checks


def basis_up_to(max_degree: int) -> list:
    return [mu for n in range(max_degree + 1) for mu in enumerate_signed_compositions(n)]


def check_coassociativity(mu) -> bool:
    d = coproduct(GradedElement.E(mu))
    left = d.apply(0, coproduct)
    right = d.apply(1, coproduct)
    return left == right


def check_counit(mu) -> bool:
    a = GradedElement.E(mu)
    d = coproduct(a)
    left = GradedElement()
    right = GradedElement()
    for (m1, m2), c in d.terms.items():
        left = left + GradedElement.E(m2).scale(c * counit(GradedElement.E(m1)))
        right = right + GradedElement.E(m1).scale(c * counit(GradedElement.E(m2)))
    return left == a and right == a


def check_shuffle_bialgebra(mu, nu) -> bool:
    a, b = GradedElement.E(mu), GradedElement.E(nu)
    return coproduct(shuffle_product(a, b)) == tensor_shuffle(coproduct(a), coproduct(b))


def check_primitive(k: int) -> bool:
    p = primitive_generator(k)
    one = GradedElement.one()
    return coproduct(p) == tensor(p, one) + tensor(one, p)


def check_antipode(mu) -> bool:
    a = GradedElement.E(mu)
    d = coproduct(a)
    unit = GradedElement.one().scale(counit(a))
    return multiplication(d.apply(0, antipode)) == unit and multiplication(d.apply(1, antipode)) == unit


def check_round_trip(mu) -> bool:
    a = GradedElement.E(mu)
    return from_primitives(expand_in_primitives(a)) == a


def check_internal_bialgebra(mu, nu, q=None) -> bool:
    a, b = GradedElement.E(mu), GradedElement.E(nu)
    lhs = coproduct(internal_product(a, b, q))
    rhs = tensor_internal_product(coproduct(a), coproduct(b), q)
    return lhs == rhs


def verify_hopf(max_degree: int = 4, antipode_degree: int | None = None, internal_degree: int | None = None) -> list:
    """Run the axiom suite; returns [(name, passed)]."""
    if antipode_degree is None:
        antipode_degree = min(max_degree, 3)
    if internal_degree is None:
        internal_degree = max_degree
    basis = basis_up_to(max_degree)
    results = []
    results.append(("coassociativity", all(check_coassociativity(mu) for mu in basis)))
    results.append(("counit", all(check_counit(mu) for mu in basis)))
    results.append(
        (
            "shuffle bialgebra",
            all(check_shuffle_bialgebra(mu, nu) for mu in basis for nu in basis if mu.n + nu.n <= max_degree),
        )
    )
    results.append(
        ("primitivity", all(check_primitive(s * k) for k in range(1, max_degree + 1) for s in (1, -1)))
    )
    results.append(("antipode", all(check_antipode(mu) for mu in basis_up_to(antipode_degree))))
    results.append(("E-P round trip", all(check_round_trip(mu) for mu in basis)))
    results.append(("E-P unitriangular", all(is_unitriangular(n) for n in range(max_degree + 1))))
    results.append(
        (
            "internal bialgebra",
            all(
                check_internal_bialgebra(mu, nu)
                for n in range(internal_degree + 1)
                for mu in enumerate_signed_compositions(n)
                for nu in enumerate_signed_compositions(n)
            ),
        )
    )
    return results
