"""Degenerations into the boundary and the two tangent-space computations."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Mapping

from .formmatrix import (FormMatrix, endo_to_fm, fm_adjugate, fm_compose, fm_det,
                         fm_mul, fm_to_endo, fm_trace, generic_skew)
from .forms import NVARS, Form, coeff_vector, x
from .linalg import Subspace, identity, kernel, span_dim, transpose


class IndeterminateLimit(ValueError):
    """The family is identically zero, so it has no projective limit."""


class CurveForm:
    """A polynomial family ``sum_k t^k F_k`` of forms of one degree."""

    __slots__ = ("degree", "coefficients")

    def __init__(self, degree: int, coefficients: Mapping[int, Form]):
        clean = {}
        for k, f in coefficients.items():
            if k < 0:
                raise ValueError("t-exponents are nonnegative")
            if f.degree != degree:
                raise ValueError("all coefficients must share the curve's degree")
            if not f.is_zero():
                clean[k] = f
        self.degree = degree
        self.coefficients = dict(sorted(clean.items()))

    def __getitem__(self, k: int) -> Form:
        return self.coefficients.get(k, Form.zero(self.degree))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveForm):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"CurveForm(degree={self.degree}, support={self.support})"

    @property
    def support(self) -> list[int]:
        return list(self.coefficients)

    def shift(self, k: int) -> "CurveForm":
        """Multiply the family by ``t^k``."""
        return CurveForm(self.degree, {e + k: f for e, f in self.coefficients.items()})

    def reparameterize(self, c) -> "CurveForm":
        """Substitute ``t -> c t``."""
        c = Fraction(c)
        if not c:
            raise ValueError("reparameterization needs a nonzero factor")
        return CurveForm(self.degree, {e: f.scale(c ** e) for e, f in self.coefficients.items()})

    def at(self, t) -> Form:
        t = Fraction(t)
        total = Form.zero(self.degree)
        for e, f in self.coefficients.items():
            total = total + f.scale(t ** e)
        return total


def pencil_det(a: FormMatrix, s: FormMatrix) -> CurveForm:
    """``det(A + t S)`` collected by powers of ``t``.

    Multilinearity in rows: each of the 8 ways of drawing every row from
    ``A`` or ``S`` contributes its determinant at ``t^(rows from S)``.
    """
    if a.degree != 1 or s.degree != 1:
        raise ValueError("pencil_det expects matrices of linear forms")
    coeffs = {k: Form.zero(3) for k in range(4)}
    for choice in product((0, 1), repeat=3):
        m = FormMatrix([s.entries[i] if pick else a.entries[i] for i, pick in enumerate(choice)])
        coeffs[sum(choice)] = coeffs[sum(choice)] + fm_det(m)
    return CurveForm(3, coeffs)


def curve_limit(c: CurveForm) -> Form:
    """Leading coefficient at the smallest power of ``t``."""
    if not c.coefficients:
        raise IndeterminateLimit("identically zero family has no limit")
    return c.coefficients[min(c.coefficients)]


def skew_pencil() -> tuple[FormMatrix, FormMatrix]:
    """Skew ``A`` and symmetric ``S`` such that ``det(A + t S)`` degenerates to P2."""
    a = generic_skew()
    s = FormMatrix([
        [x(6).scale(2), x(8), x(9)],
        [x(8), x(5).scale(2), x(7)],
        [x(9), x(7), x(4).scale(2)],
    ])
    return a, s


def _unit_endo(k: int, l: int):
    m = [[0] * NVARS for _ in range(NVARS)]
    m[k][l] = 1
    return m


def _flat(endo) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for row in endo for v in row)


def blowup_center_system(b: FormMatrix) -> list[list[Fraction]]:
    """165x81 matrix of ``c -> Tr(adj(b) c)``; column ``9 k + l`` is ``c[k][l]``."""
    if b.degree != 1:
        raise ValueError("expected a matrix of linear forms")
    if not fm_det(b).is_zero():
        raise ValueError("b must have identically vanishing determinant")
    adj = fm_adjugate(b)
    cols = [coeff_vector(fm_trace(fm_mul(adj, endo_to_fm(_unit_endo(k, l)))))
            for k in range(NVARS) for l in range(NVARS)]
    return transpose(cols)


def blowup_center_tangent_space(b: FormMatrix) -> Subspace:
    """Affine space of ``c`` with ``det(b(p) + t c(p)) = O(t^2)`` for all ``p``."""
    return kernel(blowup_center_system(b))


def blowup_center_tangent_dim(b: FormMatrix) -> int:
    """Projective dimension (affine kernel dimension minus one)."""
    return blowup_center_tangent_space(b).dim - 1


def traceless_basis() -> list[list[list[int]]]:
    basis = []
    for i in range(3):
        for j in range(3):
            if i != j:
                m = [[0] * 3 for _ in range(3)]
                m[i][j] = 1
                basis.append(m)
    for i in range(2):
        m = [[0] * 3 for _ in range(3)]
        m[i][i], m[i + 1][i + 1] = 1, -1
        basis.append(m)
    return basis


def orbit_tangent_generators(b: FormMatrix) -> list[tuple[Fraction, ...]]:
    """97 vectors of length 81 spanning the tangent space of the orbit of ``b``.

    ``M b`` and ``b N`` for ``M, N`` in a traceless basis (8 + 8), and
    ``b o c`` for the 81 elementary endomorphisms ``c``.
    """
    if b.degree != 1:
        raise ValueError("expected a matrix of linear forms")
    gens = []
    for m in traceless_basis():
        gens.append(_flat(fm_to_endo(fm_mul(FormMatrix.constant(m), b))))
    for n in traceless_basis():
        gens.append(_flat(fm_to_endo(fm_mul(b, FormMatrix.constant(n)))))
    for k in range(NVARS):
        for l in range(NVARS):
            gens.append(_flat(fm_to_endo(fm_compose(b, _unit_endo(k, l)))))
    return gens


def orbit_tangent_dim(b: FormMatrix) -> int:
    """Projective dimension of the span of :func:`orbit_tangent_generators`."""
    return span_dim(orbit_tangent_generators(b)) - 1


def traceless_witness():
    """Identity on x1..x8 with x9 sent to -x1 - x5; a singular endomorphism."""
    a = identity(NVARS)
    a[8] = [Fraction(0)] * NVARS
    a[8][0] = a[8][4] = Fraction(-1)
    return tuple(tuple(r) for r in a)
