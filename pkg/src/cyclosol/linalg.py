"""Small exact linear algebra: matrices over a CoefficientRing, and
fraction-free (Bareiss) elimination over the integers/rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rings import CoefficientRing


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence], ring: CoefficientRing) -> list:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    zero = ring.zero
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = zero
            for t in range(k):
                x = ai[t]
                if ring.is_zero(x):
                    continue
                y = b[t][j]
                if ring.is_zero(y):
                    continue
                acc = ring.add(acc, ring.mul(x, y))
            row.append(acc)
        out.append(row)
    return out


def is_zero_matrix(a, ring: CoefficientRing) -> bool:
    return all(ring.is_zero(x) for row in a for x in row)


def identity_matrix(n: int, ring: CoefficientRing) -> list:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def nilpotency_index(a, ring: CoefficientRing):
    """Smallest k <= dim with a^k = 0, or None if a is not nilpotent."""
    n = len(a)
    power = a
    for k in range(1, n + 1):
        if is_zero_matrix(power, ring):
            return k
        power = mat_mul(power, a, ring)
    return None


def _integerize(rows) -> list:
    """Scale each row of a rational matrix to integers (row space unchanged)."""
    out = []
    for row in rows:
        if all(isinstance(x, int) for x in row):
            out.append([int(x) for x in row])
            continue
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def bareiss_echelon(rows: Sequence[Sequence[int]]):
    """Fraction-free row echelon form of an integer matrix.

    Returns (rank, pivot_columns, row_order) where row_order[i] is the
    original index of the row that became the i-th pivot row."""
    a = [list(r) for r in _integerize(rows)]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    order = list(range(nrows))
    pivots = []
    prev = 1
    k = 0
    for col in range(ncols):
        if k == nrows:
            break
        piv = next((i for i in range(k, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[k], a[piv] = a[piv], a[k]
        order[k], order[piv] = order[piv], order[k]
        akk = a[k][col]
        rowk = a[k]
        for i in range(k + 1, nrows):
            ai = a[i]
            aic = ai[col]
            if aic == 0:
                if akk != prev:
                    for j in range(col + 1, ncols):
                        ai[j] = ai[j] * akk // prev
                continue
            for j in range(col + 1, ncols):
                ai[j] = (ai[j] * akk - aic * rowk[j]) // prev
            ai[col] = 0
        prev = akk
        pivots.append(col)
        k += 1
    return k, pivots, order[:k]


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return bareiss_echelon(rows)[0]


def solve_square(a: Sequence[Sequence], b: Sequence) -> list:
    """Solve a x = b exactly for an invertible square matrix (Gauss-Jordan over QQ)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def inverse(a: Sequence[Sequence]) -> list:
    """Exact inverse over QQ (Gauss-Jordan)."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


MODULAR_PRIME = 2_147_483_647


def modular_pivot_rows(B, p: int = MODULAR_PRIME) -> list:
    """Indices of a maximal set of rows of the integer matrix B that are
    independent modulo p, chosen greedily in row order.  Rows independent
    mod p are independent over QQ, so a full set certifies full column rank."""
    import numpy as np

    M = np.ascontiguousarray(np.asarray(B, dtype=np.int64).T % p)  # columns of M are rows of B
    nrows, ncols = M.shape
    pivots = []
    k = 0
    for col in range(ncols):
        if k == nrows:
            break
        nz = np.nonzero(M[k:, col])[0]
        if len(nz) == 0:
            continue
        piv = k + int(nz[0])
        if piv != k:
            M[[k, piv]] = M[[piv, k]]
        inv = pow(int(M[k, col]), p - 2, p)
        M[k] = (M[k] * inv) % p
        below = np.nonzero(M[k + 1 :, col])[0] + k + 1
        if len(below):
            f = M[below, col][:, None]
            M[below] = (M[below] - (f * M[k][None, :]) % p) % p
        pivots.append(col)
        k += 1
    return pivots


def sparse_inverse(a: Sequence[Sequence]) -> list:
    """Exact inverse over QQ by Gauss-Jordan on sparse rows; intended for
    sparse integer matrices such as 0/1 incidence blocks.  Entries stay
    Python ints while unit pivots are available (sparsest row first)."""
    n = len(a)
    rows = []
    for i, row in enumerate(a):
        d = {j: x for j, x in enumerate(row) if x}
        d[n + i] = 1
        rows.append(d)
    for col in range(n):
        cands = [i for i in range(col, n) if rows[i].get(col)]
        if not cands:
            raise ValueError("singular matrix")
        units = [i for i in cands if rows[i][col] in (1, -1)]
        piv = min(units or cands, key=lambda i: len(rows[i]))
        rows[col], rows[piv] = rows[piv], rows[col]
        prow = rows[col]
        lead = prow[col]
        if lead == -1:
            for j in prow:
                prow[j] = -prow[j]
        elif lead != 1:
            inv = Fraction(1) / lead
            for j in prow:
                prow[j] = prow[j] * inv
        for i in range(n):
            if i == col:
                continue
            r = rows[i]
            f = r.get(col)
            if not f:
                continue
            for j, v in prow.items():
                nv = r.get(j, 0) - f * v
                if nv:
                    r[j] = nv
                else:
                    del r[j]
    return [[Fraction(rows[i].get(n + j, 0)) for j in range(n)] for i in range(n)]
