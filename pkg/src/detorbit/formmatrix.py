"""3x3 matrices whose entries are forms of a common degree.

An endomorphism ``a`` of the space of 3x3 matrices (a 9x9 scalar matrix) is
the same thing as a 3x3 matrix of linear forms: entry ``(r, c)`` is the
linear form given by row ``3 r + c`` of ``a``.  Evaluating that matrix at a
point ``p`` gives ``a p`` reshaped to 3x3, and its determinant is
``compose_linear(det3, a)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .forms import NVARS, Form, compose_linear, x
from .linalg import det as scalar_det

N = 3


class FormMatrix:
    """Immutable 3x3 matrix of forms, all of one degree."""

    __slots__ = ("entries", "degree")

    def __init__(self, entries: Sequence[Sequence[Form]], degree: int | None = None):
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("a FormMatrix is 3x3")
        degs = {f.degree for r in rows for f in r}
        if len(degs) != 1:
            raise ValueError(f"entries have mixed degrees {sorted(degs)}")
        d = degs.pop()
        if degree is not None and degree != d:
            raise ValueError(f"entries have degree {d}, expected {degree}")
        self.entries = rows
        self.degree = d

    @classmethod
    def build(cls, fn: Callable[[int, int], Form]) -> "FormMatrix":
        return cls([[fn(i, j) for j in range(N)] for i in range(N)])

    @classmethod
    def zero(cls, degree: int = 1) -> "FormMatrix":
        return cls.build(lambda i, j: Form.zero(degree))

    @classmethod
    def constant(cls, rows: Sequence[Sequence[int | Fraction]]) -> "FormMatrix":
        return cls.build(lambda i, j: Form.constant(rows[i][j]))

    @classmethod
    def scalar(cls, f: Form) -> "FormMatrix":
        """``f`` times the identity."""
        return cls.build(lambda i, j: f if i == j else Form.zero(f.degree))

    def __getitem__(self, ij: tuple[int, int]) -> Form:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(_short(f) for f in r) for r in self.entries)
        return f"FormMatrix[{rows}]"

    def __add__(self, other: "FormMatrix") -> "FormMatrix":
        return FormMatrix.build(lambda i, j: self[i, j] + other[i, j])

    def __neg__(self) -> "FormMatrix":
        return FormMatrix.build(lambda i, j: -self[i, j])

    def __sub__(self, other: "FormMatrix") -> "FormMatrix":
        return self + (-other)

    def __matmul__(self, other: "FormMatrix") -> "FormMatrix":
        return fm_mul(self, other)

    def scale(self, c) -> "FormMatrix":
        return FormMatrix.build(lambda i, j: self[i, j] * c)

    def map(self, fn: Callable[[Form], Form]) -> "FormMatrix":
        return FormMatrix.build(lambda i, j: fn(self[i, j]))

    @property
    def T(self) -> "FormMatrix":
        return FormMatrix.build(lambda i, j: self[j, i])

    def is_zero(self) -> bool:
        return all(f.is_zero() for r in self.entries for f in r)


def _short(f: Form) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.items():
        mon = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
        if not mon:
            parts.append(str(c))
        elif c == 1:
            parts.append(mon)
        elif c == -1:
            parts.append("-" + mon)
        else:
            parts.append(f"{c}*{mon}")
    return "+".join(parts).replace("+-", "-")


def _det2(a: Form, b: Form, c: Form, d: Form) -> Form:
    return a * d - b * c


def fm_det(m: FormMatrix) -> Form:
    """Symbolic determinant, by cofactor expansion along the first row."""
    e = m.entries
    return (e[0][0] * _det2(e[1][1], e[1][2], e[2][1], e[2][2])
            - e[0][1] * _det2(e[1][0], e[1][2], e[2][0], e[2][2])
            + e[0][2] * _det2(e[1][0], e[1][1], e[2][0], e[2][1]))


def fm_adjugate(m: FormMatrix) -> FormMatrix:
    """Transposed cofactor matrix; nine 2x2 minors, no division."""
    e = m.entries

    def cofactor(i: int, j: int) -> Form:
        rows = [r for r in range(N) if r != i]
        cols = [c for c in range(N) if c != j]
        minor = _det2(e[rows[0]][cols[0]], e[rows[0]][cols[1]],
                      e[rows[1]][cols[0]], e[rows[1]][cols[1]])
        return minor if (i + j) % 2 == 0 else -minor

    return FormMatrix.build(lambda i, j: cofactor(j, i))


def fm_mul(a: FormMatrix, b: FormMatrix) -> FormMatrix:
    deg = a.degree + b.degree

    def entry(i: int, j: int) -> Form:
        total = Form.zero(deg)
        for k in range(N):
            total = total + a[i, k] * b[k, j]
        return total

    return FormMatrix.build(entry)


def fm_trace(a: FormMatrix) -> Form:
    return a[0, 0] + a[1, 1] + a[2, 2]


def fm_eval(m: FormMatrix, p: Sequence[int | Fraction]) -> list[list[Fraction]]:
    """Evaluate every entry at the point ``p`` (9 coordinates)."""
    return [[m[i, j].evaluate(p) for j in range(N)] for i in range(N)]


def fm_compose(m: FormMatrix, a: Sequence[Sequence[int | Fraction]]) -> FormMatrix:
    """Entry-wise ``compose_linear``: the map ``p -> m(a p)``."""
    return m.map(lambda f: compose_linear(f, a))


def generic_matrix() -> FormMatrix:
    """The matrix with entries x1..x9, row-major."""
    return FormMatrix.build(lambda i, j: x(N * i + j + 1))


def generic_skew() -> FormMatrix:
    """Rows (0, x1, -x2), (-x1, 0, x3), (x2, -x3, 0)."""
    z = Form.zero(1)
    return FormMatrix([
        [z, x(1), -x(2)],
        [-x(1), z, x(3)],
        [x(2), -x(3), z],
    ])


def endo_to_fm(a: Sequence[Sequence[int | Fraction]]) -> FormMatrix:
    if len(a) != NVARS or any(len(r) != NVARS for r in a):
        raise ValueError("an endomorphism is a 9x9 matrix")
    return FormMatrix.build(lambda i, j: Form.linear(a[N * i + j]))


def fm_to_endo(m: FormMatrix) -> tuple[tuple[Fraction, ...], ...]:
    if m.degree != 1:
        raise ValueError(f"fm_to_endo needs linear entries, got degree {m.degree}")
    rows = []
    for i in range(N):
        for j in range(N):
            f = m[i, j]
            rows.append(tuple(f.coeff(_e(k)) for k in range(NVARS)))
    return tuple(rows)


def _e(k: int) -> tuple[int, ...]:
    e = [0] * NVARS
    e[k] = 1
    return tuple(e)


# numeric 3x3 helpers

def adjugate3(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Adjugate of a 3x3 scalar matrix by explicit cofactors."""
    def minor(i, j):
        r = [k for k in range(N) if k != i]
        c = [k for k in range(N) if k != j]
        return m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]

    return [[(-1) ** (i + j) * minor(j, i) for j in range(N)] for i in range(N)]


def det3x3(m: Sequence[Sequence[Fraction]]) -> Fraction:
    return scalar_det(m)


def reshape(p: Sequence[Fraction]) -> list[list[Fraction]]:
    """9-vector to 3x3, row-major."""
    return [[Fraction(p[N * i + j]) for j in range(N)] for i in range(N)]


def flatten(m: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for row in m for v in row)
