"""Arithmetic in the wreath product G(r,1,n) = (Z/rZ) wr S_n.

An element is stored in normal form t^alpha w: a colour vector alpha in
[0, r)^n and a permutation w in one-line notation, acting on the right
(``i^w = perm[i-1]``).  Products use t_i w = w t_{i^w}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class GroupElement:
    r: int
    n: int
    colours: tuple
    perm: tuple

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise ValueError("need r >= 1 and n >= 0")
        if len(self.colours) != self.n or len(self.perm) != self.n:
            raise ValueError("colour vector and permutation must have length n")
        if any(not 0 <= a < self.r for a in self.colours):
            raise ValueError(f"colours must lie in [0, {self.r})")
        if sorted(self.perm) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {self.perm}")

    @classmethod
    def make(cls, r: int, colours: Sequence[int], perm: Sequence[int]) -> "GroupElement":
        return cls(r, len(perm), tuple(c % r for c in colours), tuple(perm))

    @classmethod
    def identity(cls, r: int, n: int) -> "GroupElement":
        return cls(r, n, (0,) * n, tuple(range(1, n + 1)))

    @classmethod
    def t(cls, r: int, n: int, i: int, k: int = 1) -> "GroupElement":
        """t_i^k."""
        if not 1 <= i <= n:
            raise ValueError("t index out of range")
        cols = [0] * n
        cols[i - 1] = k % r
        return cls(r, n, tuple(cols), tuple(range(1, n + 1)))

    @classmethod
    def s(cls, r: int, n: int, i: int) -> "GroupElement":
        """The simple transposition s_i = (i, i+1)."""
        if not 1 <= i <= n - 1:
            raise ValueError("s index out of range")
        p = list(range(1, n + 1))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls(r, n, (0,) * n, tuple(p))

    @classmethod
    def from_permutation(cls, r: int, perm: Sequence[int]) -> "GroupElement":
        return cls(r, len(perm), (0,) * len(perm), tuple(perm))

    def with_r(self, r: int) -> "GroupElement":
        return GroupElement(r, self.n, self.colours, self.perm)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def inverse(self) -> "GroupElement":
        cols = [0] * self.n
        perm = [0] * self.n
        for i, (a, wi) in enumerate(zip(self.colours, self.perm)):
            cols[wi - 1] = (-a) % self.r
            perm[wi - 1] = i + 1
        return GroupElement(self.r, self.n, tuple(cols), tuple(perm))

    def __pow__(self, k: int) -> "GroupElement":
        base = self if k >= 0 else self.inverse()
        out = GroupElement.identity(self.r, self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_permutation(self) -> bool:
        return not any(self.colours)

    def permutation_part(self) -> "GroupElement":
        return GroupElement(self.r, self.n, (0,) * self.n, self.perm)

    def sort_key(self) -> tuple:
        return (length(self), self.colours, self.perm)

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "colours": list(self.colours), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupElement":
        return cls(int(data["r"]), int(data["n"]), tuple(data["colours"]), tuple(data["perm"]))

    def __str__(self) -> str:
        return " ".join(f"{v}z{c}" if c else str(v) for v, c in to_word(self)) or "()"


def _check_compatible(g: GroupElement, h: GroupElement) -> None:
    if g.r != h.r or g.n != h.n:
        raise ValueError(f"cannot multiply elements of G({g.r},1,{g.n}) and G({h.r},1,{h.n})")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """(t^a w)(t^b v) = t^c (wv) with c_i = a_i + b_{i^w} and i^{wv} = (i^w)^v."""
    _check_compatible(g, h)
    r = g.r
    hc, hp = h.colours, h.perm
    cols = tuple((a + hc[wi - 1]) % r for a, wi in zip(g.colours, g.perm))
    perm = tuple(hp[wi - 1] for wi in g.perm)
    return GroupElement(r, g.n, cols, perm)


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def length(g: GroupElement) -> int:
    """Pi-length l(t^a w) = sum(a) + inv(w)."""
    return sum(g.colours) + inversions(g.perm)


@dataclass(frozen=True)
class DescentData:
    colour_set: frozenset
    descent_set: frozenset


def descent_data(g: GroupElement) -> DescentData:
    col = frozenset(i + 1 for i, a in enumerate(g.colours) if a > 0)
    des = frozenset(i + 1 for i in range(g.n - 1) if g.perm[i] > g.perm[i + 1])
    return DescentData(col, des)


def to_word(g: GroupElement) -> tuple:
    """The word (1,0)(2,0)...(n,0) acted on by g: position i holds
    zeta^{alpha_i} * i^w, i.e. the pair (i^w, alpha_i)."""
    return tuple(zip(g.perm, g.colours))


def from_word(word: Iterable[Sequence[int]], r: int) -> GroupElement:
    pairs = [tuple(p) for p in word]
    if any(len(p) != 2 for p in pairs):
        raise ValueError("word entries must be (value, colour) pairs")
    values = tuple(v for v, _ in pairs)
    colours = tuple(c for _, c in pairs)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError("word values must be a permutation of 1..n")
    if any(not 0 <= c < r for c in colours):
        raise ValueError(f"word colours must lie in [0, {r})")
    return GroupElement(r, len(values), colours, values)


def act_on_word(word: Sequence[tuple], g: GroupElement) -> tuple:
    """Right action of g on a word over n_zeta, built letter by letter:
    (m z^i)^g = m^w z^{i + alpha_m}.  Positions are then re-read in order,
    so this is the brute-force reference for ``to_word``."""
    r = g.r
    return tuple((g.perm[m - 1], (c + g.colours[m - 1]) % r) for m, c in word)


def group_order(r: int, n: int) -> int:
    out = r**n
    for k in range(2, n + 1):
        out *= k
    return out


def enumerate_group(r: int, n: int) -> Iterator[GroupElement]:
    """All r^n n! elements, permutations in lex order, colours lex within."""
    for perm in itertools.permutations(range(1, n + 1)):
        for cols in itertools.product(range(r), repeat=n):
            yield GroupElement(r, n, cols, perm)


def permutations_of(n: int) -> Iterator[tuple]:
    return itertools.permutations(range(1, n + 1))
