"""Dense univariate polynomials in ``x`` with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _normalize(c: Number) -> Number:
    # keep integers as ints so JSON output and equality stay tidy
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class IntPolynomial:
    """Immutable polynomial stored as ascending coefficients, trailing zeros stripped.

    The name reflects its main use (structure constants have non-negative
    integer coefficients) but rational coefficients are allowed.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coefficients: Iterable[Number] = ()):
        cs = []
        for c in coefficients:
            if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise TypeError(f"polynomial coefficient must be int or Fraction, got {c!r}")
            cs.append(_normalize(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)
        self._hash = None

    # constructors
    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def coefficients(self) -> tuple:
        return self._c

    @property
    def degree(self) -> float:
        return len(self._c) - 1 if self._c else -math.inf

    def is_zero(self) -> bool:
        return not self._c

    def coefficient(self, k: int) -> Number:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self._c or not o._c:
            return IntPolynomial()
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPolynomial", self._c))
        return self._hash

    def __call__(self, value):
        return self.evaluate(value)

    def evaluate(self, value, one=None):
        """Horner evaluation.  ``value`` may be any object supporting + and *
        with ints (numbers, other polynomials, ring elements)."""
        acc = 0 if one is None else one * 0
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    def compose(self, other: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self._c):
            acc = acc * other + c
        return acc

    def is_nonnegative_integral(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self._c)

    def to_json(self) -> list:
        return [c if isinstance(c, int) else f"{c.numerator}/{c.denominator}" for c in self._c]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPolynomial":
        return cls(Fraction(c) if isinstance(c, str) else c for c in data)

    def pretty(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                coeff = "" if a == 1 else str(a)
                if coeff and isinstance(a, Fraction):
                    coeff = f"({coeff})"
                body = coeff + ("x" if k == 1 else f"x^{k}")
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    def __str__(self):
        return self.pretty()

    def __repr__(self):
        return f"IntPolynomial({list(self._c)!r})"


X = IntPolynomial.x()
ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
