"""Coefficient rings for Sol_q(n): ZZ, QQ, Z/mZ and QQ[x].

Values are plain Python objects (int, Fraction, int mod m, IntPolynomial);
the ring object knows how to coerce, combine and serialize them.  Mixing
rings is an error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .poly import IntPolynomial


class RingMismatch(TypeError):
    pass


class CoefficientRing:
    kind = "abstract"

    def coerce(self, value) -> Any:
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        return self._norm(a + b)

    def sub(self, a, b):
        return self._norm(a - b)

    def mul(self, a, b):
        return self._norm(a * b)

    def neg(self, a):
        return self._norm(-a)

    def _norm(self, v):
        return v

    def is_zero(self, a) -> bool:
        return a == 0

    def is_field_like(self) -> bool:
        return False

    def evaluate(self, poly: IntPolynomial, q):
        """poly(q) computed in this ring (Horner)."""
        acc = self.zero
        for c in reversed(poly.coefficients):
            acc = self.add(self.mul(acc, q), self.coerce(c))
        return acc

    def to_json(self, value):
        return value

    def from_json(self, data):
        return self.coerce(data)

    def name(self) -> str:
        return self.kind

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        return ()

    def __repr__(self):
        return self.name()


def _reject_bool(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not ring elements")


class IntegerRing(CoefficientRing):
    kind = "ZZ"

    def coerce(self, value):
        _reject_bool(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value.numerator)
        raise RingMismatch(f"{value!r} is not an integer")


class RationalField(CoefficientRing):
    kind = "QQ"

    def coerce(self, value):
        _reject_bool(value)
        if isinstance(value, (int, Fraction)):
            return _tidy(Fraction(value))
        if isinstance(value, str):
            return _tidy(Fraction(value))
        raise RingMismatch(f"{value!r} is not a rational number")

    def _norm(self, v):
        return _tidy(v)

    def is_field_like(self) -> bool:
        return True

    def to_json(self, value):
        value = _tidy(value)
        return value if isinstance(value, int) else f"{value.numerator}/{value.denominator}"


def _tidy(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    k = 2
    while k * k <= m:
        if m % k == 0:
            return False
        k += 1
    return True


class ModularRing(CoefficientRing):
    """Z/mZ with m >= 2 (composite moduli allowed)."""

    kind = "Zmod"

    def __init__(self, m: int):
        if isinstance(m, bool) or not isinstance(m, int) or m < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
        self.m = m

    def _key(self):
        return (self.m,)

    def coerce(self, value):
        _reject_bool(value)
        if isinstance(value, int):
            return value % self.m
        if isinstance(value, Fraction):
            den = value.denominator % self.m
            try:
                inv = pow(den, -1, self.m)
            except ValueError:
                raise RingMismatch(f"{value} has no image in Z/{self.m}") from None
            return (value.numerator * inv) % self.m
        raise RingMismatch(f"{value!r} is not an element of Z/{self.m}")

    def _norm(self, v):
        return v % self.m

    def is_field_like(self) -> bool:
        return _is_prime(self.m)

    def name(self) -> str:
        return f"Z/{self.m}"


class PolynomialRing(CoefficientRing):
    """QQ[x]; the home of the generic parameter x."""

    kind = "QQ[x]"

    def coerce(self, value):
        _reject_bool(value)
        if isinstance(value, IntPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return IntPolynomial.const(value)
        raise RingMismatch(f"{value!r} is not a polynomial")

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def evaluate(self, poly: IntPolynomial, q):
        return poly.compose(q)

    def to_json(self, value):
        return value.to_json()

    def from_json(self, data):
        if isinstance(data, list):
            return IntPolynomial.from_json(data)
        return self.coerce(data)


ZZ = IntegerRing()
QQ = RationalField()
POLY = PolynomialRing()
X = IntPolynomial.x()


def Zmod(m: int) -> ModularRing:
    return ModularRing(m)


def ring_from_name(name: str) -> CoefficientRing:
    if name == "ZZ":
        return ZZ
    if name == "QQ":
        return QQ
    if name == "QQ[x]":
        return POLY
    if name.startswith("Z/"):
        return ModularRing(int(name[2:]))
    raise ValueError(f"unknown ring {name!r}")


def parse_q(text: str, mod: int | None = None):
    """Parse a CLI parameter: an integer, a rational p/q, or ``x``.
    Returns (ring, q)."""
    text = text.strip()
    if text == "x":
        if mod is not None:
            raise ValueError("symbolic q cannot be combined with --mod")
        return POLY, X
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse q={text!r}; expected an integer, p/q or x") from None
    if mod is not None:
        ring = ModularRing(mod)
        return ring, ring.coerce(value)
    return QQ, QQ.coerce(value)
