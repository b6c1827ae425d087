"""Homogeneous forms in the nine coordinates x1..x9 of 3x3 matrices.

The coordinates fill a 3x3 matrix row-major::

    x1 x2 x3
    x4 x5 x6
    x7 x8 x9

A :class:`Form` is a sparse map from exponent 9-tuples to ``Fraction``
coefficients, with a fixed degree.  Zero coefficients are never stored, so
``len(form)`` is the number of monomials.

Coefficient vectors use graded reverse-lexicographic order with
x1 > x2 > ... > x9, listed from largest to smallest monomial.  For a fixed
degree this is the ascending sort of the *reversed* exponent tuples.

An endomorphism of the 9-dimensional space is a 9x9 matrix ``a``.
``compose_linear(f, a)`` substitutes ``x_i -> sum_j a[i][j] x_j``, i.e. it
returns ``f o a`` with ``(f o a)(x) = f(a x)``.  With this convention
``compose_linear(compose_linear(f, a), b) == compose_linear(f, a @ b)``.
"""

from __future__ import annotations

import re
from operator import add as _add
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

NVARS = 9

Exponent = tuple[int, ...]


def _unit(i: int, k: int = 1) -> Exponent:
    e = [0] * NVARS
    e[i] = k
    return tuple(e)


@lru_cache(maxsize=None)
def monomials(degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of total ``degree``, in canonical (grevlex) order."""
    out = []
    for combo in combinations_with_replacement(range(NVARS), degree):
        e = [0] * NVARS
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lambda e: e[::-1])
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(degree))}


def num_monomials(degree: int) -> int:
    return comb(degree + NVARS - 1, NVARS - 1)


class Form:
    """Immutable homogeneous polynomial in x1..x9 with rational coefficients."""

    __slots__ = ("degree", "_terms", "_hash")

    def __init__(self, degree: int, terms: Mapping[Exponent, int | Fraction] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != NVARS or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
            if sum(e) != degree:
                raise ValueError(f"monomial {e} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.degree = degree
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, degree: int, terms: dict[Exponent, Fraction]) -> "Form":
        # trusted constructor: terms already clean
        f = object.__new__(cls)
        f.degree = degree
        f._terms = terms
        f._hash = None
        return f

    # constructors

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls._raw(degree, {})

    @classmethod
    def constant(cls, c: int | Fraction) -> "Form":
        return cls(0, {(0,) * NVARS: c})

    @classmethod
    def var(cls, i: int) -> "Form":
        """The coordinate x_i, with ``i`` counted from 1."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index {i} out of range 1..{NVARS}")
        return cls._raw(1, {_unit(i - 1): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence[int | Fraction]) -> "Form":
        """The linear form sum_j coeffs[j] * x_{j+1}."""
        if len(coeffs) != NVARS:
            raise ValueError("a linear form needs 9 coefficients")
        return cls(1, {_unit(j): c for j, c in enumerate(coeffs) if c})

    @classmethod
    def from_coeff_vector(cls, degree: int, vec: Sequence[int | Fraction]) -> "Form":
        mons = monomials(degree)
        if len(vec) != len(mons):
            raise ValueError("coefficient vector has wrong length")
        return cls(degree, {e: c for e, c in zip(mons, vec) if c})

    # access

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Form):
            return self.degree == other.degree and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Form({self.degree}, {to_string(self)!r})"

    def __str__(self) -> str:
        return to_string(self)

    # arithmetic

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"cannot add forms of degree {self.degree} and {other.degree}")
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Form._raw(self.degree, out)

    def __neg__(self) -> "Form":
        return Form._raw(self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int | Fraction) -> "Form":
        c = Fraction(c)
        if not c:
            return Form.zero(self.degree)
        return Form._raw(self.degree, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Form):
            return NotImplemented
        t1, t2 = self._terms, other._terms
        integral = all(c.denominator == 1 for c in t1.values()) and \
            all(c.denominator == 1 for c in t2.values())
        if integral:
            # int arithmetic is several times faster than Fraction
            t1 = {e: c.numerator for e, c in t1.items()}
            t2 = {e: c.numerator for e, c in t2.items()}
        acc = {}
        get = acc.get
        for e1, c1 in t1.items():
            for e2, c2 in t2.items():
                e = tuple(map(_add, e1, e2))
                acc[e] = get(e, 0) + c1 * c2
        return Form._raw(self.degree + other.degree,
                         {e: Fraction(c) for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Form":
        result = Form.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, point: Sequence[int | Fraction]) -> Fraction:
        if len(point) != NVARS:
            raise ValueError("a point has 9 coordinates")
        p = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(p, e):
                if k:
                    v *= x ** k
            total += v
        return total


def add(f: Form, g: Form) -> Form:
    return f + g


def scale(c: int | Fraction, f: Form) -> Form:
    return f.scale(c)


def multiply(f: Form, g: Form) -> Form:
    return f * g


def partial_derivative(f: Form, i: int) -> Form:
    """d f / d x_i with ``i`` counted from 1."""
    if f.degree < 1:
        raise ValueError("cannot differentiate a form of degree 0")
    if not 1 <= i <= NVARS:
        raise ValueError(f"variable index {i} out of range 1..{NVARS}")
    k = i - 1
    out = {}
    for e, c in f.items():
        if e[k]:
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = c * e[k]
    return Form._raw(f.degree - 1, out)


def gradient(f: Form) -> list[Form]:
    return [partial_derivative(f, i) for i in range(1, NVARS + 1)]


def compose_linear(f: Form, a: Sequence[Sequence[int | Fraction]]) -> Form:
    """Return ``f o a``: substitute x_i by the i-th row of ``a`` applied to x."""
    if len(a) != NVARS or any(len(row) != NVARS for row in a):
        raise ValueError("an endomorphism is a 9x9 matrix")
    images = [Form.linear(row) for row in a]
    # powers of each substituted variable, built lazily
    powers: list[list[Form]] = [[Form.constant(1)] for _ in range(NVARS)]

    def power(i: int, k: int) -> Form:
        ps = powers[i]
        while len(ps) <= k:
            ps.append(ps[-1] * images[i])
        return ps[k]

    result = Form.zero(f.degree)
    for e, c in f.items():
        term = Form.constant(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return result


def coeff_vector(f: Form) -> tuple[Fraction, ...]:
    return tuple(f.coeff(e) for e in monomials(f.degree))


def proj_equal(f: Form, g: Form) -> bool:
    """True iff ``f = c g`` for some nonzero rational ``c``."""
    if f.degree != g.degree:
        raise ValueError("projective comparison needs equal degrees")
    if f.is_zero() or g.is_zero():
        raise ValueError("projective comparison of the zero form")
    if f._terms.keys() != g._terms.keys():
        return False
    e0 = next(iter(f._terms))
    ratio = f._terms[e0] / g._terms[e0]
    return all(f._terms[e] == ratio * g._terms[e] for e in f._terms)


def x(i: int) -> Form:
    return Form.var(i)


def det3() -> Form:
    """Determinant of the generic 3x3 matrix with entries x1..x9 (row-major)."""
    return (x(1) * x(5) * x(9) + x(2) * x(6) * x(7) + x(3) * x(4) * x(8)
            - x(3) * x(5) * x(7) - x(2) * x(4) * x(9) - x(1) * x(6) * x(8))


def p1() -> Form:
    """Determinant of the generic traceless matrix (x9 replaced by -x1-x5)."""
    z = -x(1) - x(5)
    return (x(1) * x(5) * z + x(2) * x(6) * x(7) + x(3) * x(4) * x(8)
            - x(3) * x(5) * x(7) - x(2) * x(4) * z - x(1) * x(6) * x(8))


def p2() -> Form:
    """x4 x1^2 + x5 x2^2 + x6 x3^2 + x7 x1 x2 + x8 x2 x3 + x9 x1 x3."""
    return (x(4) * x(1) ** 2 + x(5) * x(2) ** 2 + x(6) * x(3) ** 2
            + x(7) * x(1) * x(2) + x(8) * x(2) * x(3) + x(9) * x(1) * x(3))


def canonical_forms() -> tuple[Form, Form, Form]:
    return det3(), p1(), p2()


# text serialization

_TERM_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?((?:\s+x[1-9](?:\^\d+)?)*)\s*$")
_VAR_RE = re.compile(r"x([1-9])(?:\^(\d+))?")


def to_string(f: Form) -> str:
    """One term per line, ``num/den x1^e1 ... x9^e9`` with zero exponents omitted.

    A leading ``# degree d`` line records the degree so that the zero form
    round-trips too.
    """
    lines = [f"# degree {f.degree}"]
    index = monomial_index(f.degree)
    for e in sorted(f._terms, key=index.__getitem__):
        c = f._terms[e]
        mons = " ".join(f"x{i + 1}^{k}" for i, k in enumerate(e) if k)
        lines.append(f"{c.numerator}/{c.denominator}" + (f" {mons}" if mons else ""))
    return "\n".join(lines) + "\n"


def from_string(text: str, degree: int | None = None) -> Form:
    """Parse the format written by :func:`to_string`.

    Bare variables (``x3`` for ``x3^1``) and integer coefficients are accepted.
    """
    terms: dict[Exponent, Fraction] = {}
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*degree\s+(\d+)\s*$", line)
            if m:
                declared = int(m.group(1))
            continue
        m = _TERM_RE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: cannot parse term {raw!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"line {lineno}: zero denominator")
        c = Fraction(int(m.group(1)), den)
        e = [0] * NVARS
        for vm in _VAR_RE.finditer(m.group(3)):
            e[int(vm.group(1)) - 1] += int(vm.group(2) or 1)
        e = tuple(e)
        terms[e] = terms.get(e, Fraction(0)) + c
    degrees = {sum(e) for e in terms}
    if degree is None:
        degree = declared
    if degree is None:
        if len(degrees) != 1:
            raise ValueError("cannot infer degree; add a '# degree d' line")
        degree = degrees.pop()
    if declared is not None and declared != degree:
        raise ValueError(f"declared degree {declared} disagrees with requested {degree}")
    return Form(degree, terms)


def sum_forms(forms: Iterable[Form], degree: int) -> Form:
    total = Form.zero(degree)
    for f in forms:
        total = total + f
    return total
