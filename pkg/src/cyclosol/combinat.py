"""Signed compositions, pseudo signed compositions, coloured tableaux and the
integer matrices N(mu, nu) used by the structure-constant and coproduct code."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


def _check_int(a) -> int:
    if isinstance(a, bool) or not isinstance(a, int):
        raise TypeError(f"parts must be integers, got {a!r}")
    return a


class SignedComposition:
    """A sequence of non-zero integers; ``n`` is the sum of absolute values.

    Immutable and hashable; derived statistics are computed once."""

    __slots__ = ("parts", "n", "pos_size", "_hash", "_rows")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(_check_int(a) for a in parts)
        if 0 in ps:
            raise ValueError(f"signed composition has a zero part: {ps}")
        self._setup(ps)

    def _setup(self, ps: tuple) -> None:
        object.__setattr__(self, "parts", ps)
        object.__setattr__(self, "n", sum(a if a > 0 else -a for a in ps))
        object.__setattr__(self, "pos_size", sum(a for a in ps if a > 0))
        object.__setattr__(self, "_hash", hash(ps))
        object.__setattr__(self, "_rows", None)

    @classmethod
    def trusted(cls, parts: tuple) -> "SignedComposition":
        """Construct without validation (internal hot paths only)."""
        obj = cls.__new__(cls)
        obj._setup(parts)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("SignedComposition is immutable")

    def __eq__(self, other):
        if isinstance(other, SignedComposition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (SignedComposition, (self.parts,))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def plus(self) -> "SignedComposition":
        """mu^+, the composition of absolute values."""
        return SignedComposition.trusted(tuple(abs(a) for a in self.parts))

    def __neg__(self) -> "SignedComposition":
        return SignedComposition.trusted(tuple(-a for a in self.parts))

    @property
    def neg_size(self) -> int:
        """|mu|^-, the sum of the absolute values of the negative parts."""
        return self.n - self.pos_size

    @property
    def pi_size(self) -> int:
        """|Pi_mu| = (n - l(mu)) + |mu|^+."""
        return self.n - len(self.parts) + self.pos_size

    def partial_sums(self) -> tuple:
        """(bar mu_0, ..., bar mu_k) with bar mu_0 = 0."""
        return (0,) + tuple(itertools.accumulate(abs(a) for a in self.parts))

    def is_composition(self) -> bool:
        return all(a > 0 for a in self.parts)

    def row_of(self) -> tuple:
        """rows[j] = index of the block containing position j+1 (0-based blocks)."""
        if self._rows is None:
            out = []
            for i, a in enumerate(self.parts):
                out.extend([i] * abs(a))
            object.__setattr__(self, "_rows", tuple(out))
        return self._rows

    def blocks(self) -> list:
        """Position ranges (1-based, inclusive start, exclusive stop) of the blocks."""
        ps = self.partial_sums()
        return [range(ps[i] + 1, ps[i + 1] + 1) for i in range(len(self.parts))]

    def concat(self, other: "SignedComposition") -> "SignedComposition":
        return SignedComposition.trusted(self.parts + other.parts)

    def sort_key(self) -> tuple:
        return canonical_key(self)

    def to_json(self) -> list:
        return list(self.parts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "SignedComposition":
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "SignedComposition":
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.replace(" ", "").split(",")]
        except ValueError:
            raise ValueError(f"malformed signed composition: {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"

    def __repr__(self) -> str:
        return f"SC{self}"


def canonical_key(mu: SignedComposition) -> tuple:
    """Sort key for the canonical total order: |Pi_mu| descending, then parts
    left to right with larger absolute value first and positive before negative."""
    return (-mu.pi_size, tuple((-abs(a), -a) for a in mu.parts))


def canonical_sorted(items: Iterable[SignedComposition]) -> list:
    return sorted(items, key=canonical_key)


def compositions(n: int) -> Iterator[tuple]:
    """Ordinary compositions of n (tuples of positive ints)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _signed_compositions(n: int) -> tuple:
    out = []
    for comp in compositions(n):
        for signs in itertools.product((1, -1), repeat=len(comp)):
            out.append(SignedComposition(a * s for a, s in zip(comp, signs)))
    return tuple(canonical_sorted(out))


def enumerate_signed_compositions(n: int) -> list:
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_signed_compositions(n))


def signed_partition_of(mu: SignedComposition) -> SignedComposition:
    return SignedComposition(sorted(mu.parts, reverse=True))


def is_signed_partition(mu: SignedComposition) -> bool:
    return list(mu.parts) == sorted(mu.parts, reverse=True)


def signed_partitions(n: int) -> list:
    return [mu for mu in enumerate_signed_compositions(n) if is_signed_partition(mu)]


def equivalent(lam: SignedComposition, mu: SignedComposition) -> bool:
    """lam ~ mu: same multiset of parts."""
    return sorted(lam.parts) == sorted(mu.parts)


# --------------------------------------------------------------------------
# generator sets


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    t_indices: frozenset
    s_indices: frozenset

    def __post_init__(self):
        if not all(1 <= i <= self.n for i in self.t_indices):
            raise ValueError("t index out of range")
        if not all(1 <= i <= self.n - 1 for i in self.s_indices):
            raise ValueError("s index out of range")

    def __len__(self) -> int:
        return len(self.t_indices) + len(self.s_indices)

    def __sub__(self, other: "GeneratorSet") -> "GeneratorSet":
        return GeneratorSet(self.n, self.t_indices - other.t_indices, self.s_indices - other.s_indices)

    def issubset(self, other: "GeneratorSet") -> bool:
        return self.t_indices <= other.t_indices and self.s_indices <= other.s_indices

    @classmethod
    def full(cls, n: int) -> "GeneratorSet":
        return cls(n, frozenset(range(1, n + 1)), frozenset(range(1, n)))


def generator_set(mu: SignedComposition) -> GeneratorSet:
    t, s = set(), set()
    for a, block in zip(mu.parts, mu.blocks()):
        s.update(list(block)[:-1])
        if a > 0:
            t.update(block)
    return GeneratorSet(mu.n, frozenset(t), frozenset(s))


# --------------------------------------------------------------------------
# pseudo signed compositions and coproduct splits


@dataclass(frozen=True)
class PseudoSignedComposition:
    parts: tuple

    def __init__(self, parts: Iterable[int] = ()):
        object.__setattr__(self, "parts", tuple(_check_int(a) for a in parts))

    @property
    def n(self) -> int:
        return sum(abs(a) for a in self.parts)

    def bar(self) -> SignedComposition:
        return SignedComposition.trusted(tuple(a for a in self.parts if a != 0))

    def to_json(self) -> list:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.parts) + ")"

    __repr__ = __str__


def _part_splits(a: int) -> list:
    step = 1 if a > 0 else -1
    return [c for c in range(0, a + step, step)]


def sign_compatible_splits(mu: SignedComposition) -> list:
    """All (c', c'') with c' + c'' = mu componentwise and c'_i * c''_i >= 0.

    Order: the first component varies fastest, then the second, and so on."""
    choices = [_part_splits(a) for a in mu.parts]
    out = []
    for rev in itertools.product(*reversed(choices)):
        c1 = tuple(reversed(rev))
        c2 = tuple(a - c for a, c in zip(mu.parts, c1))
        out.append((PseudoSignedComposition(c1), PseudoSignedComposition(c2)))
    return out


# --------------------------------------------------------------------------
# coloured tableaux


def precedes_key(entry: tuple) -> tuple:
    """Key for the order a z^i < b z^j iff a < b, or a = b and i > j."""
    value, colour = entry
    return (value, -colour)


@dataclass(frozen=True)
class ColouredTableau:
    """A filling of the rows of the composition ``shape`` by (value, colour) pairs."""

    shape: tuple
    entries: tuple
    r: int

    def __post_init__(self):
        if tuple(len(row) for row in self.entries) != tuple(self.shape):
            raise ValueError("entries do not match shape")
        for row in self.entries:
            for v, c in row:
                if v < 1 or not 0 <= c < self.r:
                    raise ValueError(f"bad entry {(v, c)}")

    def _colour_ok(self, mu: SignedComposition) -> bool:
        return all(c == 0 for a, row in zip(mu.parts, self.entries) if a > 0 for _, c in row)

    def is_row_standard(self, mu: SignedComposition) -> bool:
        if tuple(mu.plus.parts) != tuple(self.shape):
            return False
        values = sorted(v for row in self.entries for v, _ in row)
        if values != list(range(1, mu.n + 1)):
            return False
        if not self._colour_ok(mu):
            return False
        return all(
            precedes_key(row[k]) < precedes_key(row[k + 1]) for row in self.entries for k in range(len(row) - 1)
        )

    def is_row_semistandard(self, mu: SignedComposition) -> bool:
        if tuple(mu.plus.parts) != tuple(self.shape):
            return False
        if not self._colour_ok(mu):
            return False
        return all(
            precedes_key(row[k]) <= precedes_key(row[k + 1]) for row in self.entries for k in range(len(row) - 1)
        )

    def has_type(self, nu: SignedComposition) -> bool:
        """|nu_j| nodes carry the value j, and only colour 0 when nu_j > 0."""
        counts = [0] * len(nu)
        for row in self.entries:
            for v, c in row:
                if v > len(nu):
                    return False
                counts[v - 1] += 1
                if nu[v - 1] > 0 and c != 0:
                    return False
        return counts == [abs(a) for a in nu.parts]

    def to_json(self) -> list:
        return [[list(e) for e in row] for row in self.entries]


# --------------------------------------------------------------------------
# the matrices N(mu, nu)


@dataclass(frozen=True)
class StructMatrix:
    """Signed integer matrix with row(M) = mu^+ and col(M) = nu^+."""

    entries: tuple
    row_signs: tuple
    col_signs: tuple

    @property
    def wt(self) -> int:
        return -sum(
            m
            for i, row in enumerate(self.entries)
            if self.row_signs[i] < 0
            for j, m in enumerate(row)
            if self.col_signs[j] < 0
        )

    @property
    def comp(self) -> SignedComposition:
        return SignedComposition.trusted(tuple(m for row in self.entries for m in row if m != 0))

    @property
    def row_sums(self) -> tuple:
        return tuple(sum(abs(m) for m in row) for row in self.entries)

    @property
    def col_sums(self) -> tuple:
        return tuple(sum(abs(row[j]) for row in self.entries) for j in range(len(self.col_signs)))

    def is_valid(self, mu: SignedComposition, nu: SignedComposition) -> bool:
        if self.row_sums != mu.plus.parts or self.col_sums != nu.plus.parts:
            return False
        for i, row in enumerate(self.entries):
            for j, m in enumerate(row):
                if mu[i] < 0 or nu[j] < 0:
                    if m > 0:
                        return False
                elif m < 0:
                    return False
        return True

    def to_json(self) -> list:
        return [list(row) for row in self.entries]


@lru_cache(maxsize=4096)
def _absolute_matrices(rows: tuple, cols: tuple) -> tuple:
    return tuple(_iter_absolute_matrices(rows, cols))


def _iter_absolute_matrices(rows: tuple, cols: tuple) -> Iterator[tuple]:
    """Non-negative integer matrices with the given row and column sums,
    row-major backtracking, larger values tried first."""
    k, l = len(rows), len(cols)
    cells = [[0] * l for _ in range(k)]
    colrem = list(cols)

    def fill(i: int, j: int, rowrem: int):
        if i == k:
            if not any(colrem):
                yield tuple(tuple(row) for row in cells)
            return
        if j == l - 1:
            v = rowrem
            if v > colrem[j]:
                return
            cells[i][j] = v
            colrem[j] -= v
            nxt = rows[i + 1] if i + 1 < k else 0
            yield from fill(i + 1, 0, nxt)
            colrem[j] += v
            return
        # what the remaining columns in this row can absorb
        rest = sum(colrem[j + 1 :])
        for v in range(min(rowrem, colrem[j]), max(0, rowrem - rest) - 1, -1):
            cells[i][j] = v
            colrem[j] -= v
            yield from fill(i, j + 1, rowrem - v)
            colrem[j] += v

    if k == 0 or l == 0:
        if not rows and not cols:
            yield ()
        return
    yield from fill(0, 0, rows[0])


def enumerate_struct_matrices(mu: SignedComposition, nu: SignedComposition) -> list:
    if mu.n != nu.n:
        raise ValueError(f"degree mismatch: |mu|={mu.n}, |nu|={nu.n}")
    rs = tuple(1 if a > 0 else -1 for a in mu.parts)
    cs = tuple(1 if b > 0 else -1 for b in nu.parts)
    out = []
    for absm in _absolute_matrices(mu.plus.parts, nu.plus.parts):
        entries = tuple(
            tuple(m if (rs[i] > 0 and cs[j] > 0) else -m for j, m in enumerate(row)) for i, row in enumerate(absm)
        )
        out.append(StructMatrix(entries, rs, cs))
    return out
