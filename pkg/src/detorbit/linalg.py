"""Exact linear algebra over the rationals.

Matrices are plain sequences of rows; entries may be ``int`` or
``Fraction``.  Nothing here ever rounds: rank uses fraction-free (Bareiss)
elimination on an integer copy of the matrix, and kernels come from a
reduced row echelon form computed with ``Fraction`` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]
Rows = Sequence[Sequence[int | Fraction]]


def as_matrix(rows: Rows) -> list[list[Fraction]]:
    """Copy ``rows`` into a fresh list-of-lists of ``Fraction``."""
    out = [[Fraction(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def transpose(rows: Rows) -> list[list[Fraction]]:
    m = as_matrix(rows)
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def mat_mul(a: Rows, b: Rows) -> list[list[Fraction]]:
    a, b = as_matrix(a), as_matrix(b)
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    bt = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Rows, v: Sequence[int | Fraction]) -> Vector:
    return tuple(sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _integer_rows(rows: Rows) -> list[list[int]]:
    # Scaling a row by a nonzero constant leaves the rank unchanged.
    out = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        out.append([int(x * den) for x in fr])
    return out


def rank(rows: Rows) -> int:
    """Exact rank over Q, by Bareiss fraction-free elimination.

    >>> rank([[1, 2], [2, 4]])
    1
    """
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        # smallest nonzero pivot keeps intermediate integers short
        piv = None
        for i in range(r, nrows):
            if m[i][c] and (piv is None or abs(m[i][c]) < abs(m[piv][c])):
                piv = i
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            for j in range(c + 1, ncols):
                mi[j] = (p * mi[j] - f * mr[j]) // prev
            mi[c] = 0
        prev = p
        r += 1
    return r


def rref(rows: Rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = as_matrix(rows)
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n given by an independent basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise ValueError("basis vector has wrong length")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        v = tuple(Fraction(x) for x in v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector has wrong length")
        if not any(v):
            return True
        return rank(list(self.basis) + [v]) == self.dim


def kernel(rows: Rows, ncols: int | None = None) -> Subspace:
    """Basis of the right nullspace ``{v : m v = 0}``.

    ``ncols`` is only needed when ``rows`` is empty.
    """
    m = as_matrix(rows)
    if ncols is None:
        if not m:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(m[0])
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(tuple(v))
    return Subspace(ncols, tuple(basis))


def span_dim(vectors: Sequence[Sequence[int | Fraction]]) -> int:
    """Dimension of the span of ``vectors``; 0 for the empty list."""
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors must share one length")
    return rank(vectors)


def span(vectors: Sequence[Sequence[int | Fraction]], ambient_dim: int) -> Subspace:
    red, _ = rref(vectors) if vectors else ([], [])
    return Subspace(ambient_dim, tuple(tuple(r) for r in red))


def det(rows: Rows) -> Fraction:
    """Determinant by Fraction Gaussian elimination."""
    m = as_matrix(rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("det needs a square matrix")
    sign = 1
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * d
