"""The symmetry group of det3 and diagonal one-parameter curves.

A :class:`StabElement` is the map ``p -> U T(p) V`` on 3x3 matrices, where
``T`` is transposition when ``transpose_first`` is set and the identity
otherwise, and ``det U = det V = 1``.  All such maps fix det3.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formmatrix import FormMatrix, flatten, generic_matrix, reshape
from .forms import Form
from .linalg import det, identity, mat_mul, transpose

Mat3 = tuple[tuple[Fraction, ...], ...]


def _mat3(m) -> Mat3:
    rows = tuple(tuple(Fraction(v) for v in r) for r in m)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    return rows


@dataclass(frozen=True)
class StabElement:
    u: Mat3
    v: Mat3
    transpose_first: bool = False

    def __post_init__(self):
        object.__setattr__(self, "u", _mat3(self.u))
        object.__setattr__(self, "v", _mat3(self.v))
        if det(self.u) != 1 or det(self.v) != 1:
            raise ValueError("U and V must have determinant exactly 1")

    @classmethod
    def identity(cls) -> "StabElement":
        return cls(identity(3), identity(3), False)

    @classmethod
    def transposition(cls) -> "StabElement":
        return cls(identity(3), identity(3), True)

    def apply(self, p: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
        """Image of a 3x3 matrix ``p``."""
        q = transpose(p) if self.transpose_first else p
        return mat_mul(mat_mul(self.u, q), self.v)

    def __matmul__(self, other: "StabElement") -> "StabElement":
        return compose_stab(self, other)


def compose_stab(h1: StabElement, h2: StabElement) -> StabElement:
    """The element ``h1 o h2`` (apply ``h2`` first)."""
    if not h1.transpose_first:
        return StabElement(mat_mul(h1.u, h2.u), mat_mul(h2.v, h1.v), h2.transpose_first)
    # (U2 q V2)^T = V2^T q^T U2^T
    return StabElement(mat_mul(h1.u, transpose(h2.v)), mat_mul(transpose(h2.u), h1.v),
                       not h2.transpose_first)


def stab_to_endo(h: StabElement) -> tuple[tuple[Fraction, ...], ...]:
    """9x9 matrix of ``h`` in the row-major coordinates x1..x9."""
    cols = []
    for k in range(9):
        e = [0] * 9
        e[k] = 1
        cols.append(flatten(h.apply(reshape(e))))
    return tuple(tuple(col[r] for col in cols) for r in range(9))


def transposition_endo() -> tuple[tuple[Fraction, ...], ...]:
    return stab_to_endo(StabElement.transposition())


def act_left(h: StabElement, a: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    """``h o a`` as a 9x9 matrix."""
    return tuple(tuple(r) for r in mat_mul(stab_to_endo(h), a))


def random_sl3(seed) -> Mat3:
    """A product of 4 to 8 integer shears; determinant exactly 1.

    ``seed`` may be an int, a string or a ``random.Random`` instance.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    m = identity(3)
    for _ in range(rng.randint(4, 8)):
        i, j = rng.sample(range(3), 2)
        shear = identity(3)
        shear[i][j] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        m = mat_mul(m, shear)
    return _mat3(m)


def random_stab(rng: random.Random, transpose_first: bool | None = None) -> StabElement:
    if transpose_first is None:
        transpose_first = rng.random() < 0.5
    return StabElement(random_sl3(rng), random_sl3(rng), transpose_first)


@dataclass(frozen=True)
class DiagonalCurve:
    """``t -> diag(t^left) . m . diag(t^right)``."""

    left_exponents: tuple[int, int, int]
    right_exponents: tuple[int, int, int] = (0, 0, 0)


def one_param_min_exponent(c: DiagonalCurve, m: FormMatrix) -> int | float:
    """Smallest power of ``t`` over the nonzero entries of the transformed matrix.

    Returns ``math.inf`` for the zero matrix.  The curve tends to 0 iff the
    result is at least 1.
    """
    if m.degree != 1:
        raise ValueError("expected a matrix of linear forms")
    exps = [c.left_exponents[i] + c.right_exponents[j]
            for i in range(3) for j in range(3) if not m[i, j].is_zero()]
    return min(exps, default=math.inf)


# Zero patterns of the three compression spaces; True marks a free slot.
COMPRESSION_PATTERNS = {
    "b1": ((1, 1, 1), (1, 1, 1), (0, 0, 0)),
    "b2": ((1, 1, 0), (1, 1, 0), (1, 1, 0)),
    "b3": ((1, 1, 1), (1, 0, 0), (1, 0, 0)),
}

DESTABILIZING_CURVES = {
    "b1": DiagonalCurve((1, 1, -2), (0, 0, 0)),
    "b2": DiagonalCurve((0, 0, 0), (1, 1, -2)),
    "b3": DiagonalCurve((2, -1, -1), (2, -1, -1)),
}


def compression_pattern(name: str) -> FormMatrix:
    """The generic matrix x1..x9 with the forced-zero slots of ``name`` cleared."""
    mask = COMPRESSION_PATTERNS[name]
    g = generic_matrix()
    return FormMatrix.build(lambda i, j: g[i, j] if mask[i][j] else Form.zero(1))
