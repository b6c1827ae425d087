"""Numerical invariants that separate the orbits in play.

* ``nu(p)``: dimension of the span of the nine first partials of a cubic.
* ``stab_lie_dim(p)``: dimension of ``{a : d/dt p(x + t a x) |_{t=0} = 0}``,
  the Lie algebra of the stabilizer.  It is the kernel of a 165x81 matrix
  whose rows follow the canonical monomial order and whose column
  ``9 i + j`` (0-based) corresponds to the entry ``a[i][j]``.
* ``tau``: a trace of products of matrix values and adjugates, invariant
  under ``p -> U p V``; ``tau_sym`` adds the transposed term so the result
  is invariant under the whole symmetry group of det3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formmatrix import adjugate3, reshape
from .forms import NVARS, Form, coeff_vector, gradient, num_monomials, x
from .group import transposition_endo
from .linalg import Subspace, kernel, mat_mul, mat_vec, rank, transpose

Point = Sequence[int | Fraction]

WITNESS_ATTEMPTS = 32
WITNESS_RANGE = 5


def nu(p: Form) -> int:
    if p.degree != 3:
        raise ValueError("nu is defined on cubic forms")
    return rank([coeff_vector(d) for d in gradient(p)])


def stabilizer_system(p: Form) -> list[list[Fraction]]:
    """The 165x81 matrix of ``a -> sum_i (dp/dx_i) (a x)_i``."""
    if p.degree != 3:
        raise ValueError("expected a cubic form")
    grad = gradient(p)
    cols = []
    for i in range(NVARS):
        for j in range(NVARS):
            cols.append(coeff_vector(grad[i] * x(j + 1)))
    assert len(cols[0]) == num_monomials(3)
    return transpose(cols)


def stabilizer_algebra(p: Form) -> Subspace:
    if p.is_zero():
        raise ValueError("the zero form has no meaningful stabilizer")
    return kernel(stabilizer_system(p))


def stab_lie_dim(p: Form) -> int:
    if p.is_zero():
        raise ValueError("the zero form has no meaningful stabilizer")
    return 81 - rank(stabilizer_system(p))


def orbit_dim(p: Form) -> int:
    """Dimension of the projective orbit: 80 minus the stabilizer dimension."""
    return 80 - stab_lie_dim(p)


@dataclass(frozen=True)
class InvariantProfile:
    nu: int
    stab_lie_dim: int
    orbit_dim: int

    def __post_init__(self):
        if self.orbit_dim != 80 - self.stab_lie_dim:
            raise ValueError("orbit_dim must equal 80 - stab_lie_dim")
        if not 0 <= self.nu <= 9:
            raise ValueError("nu lies in 0..9")


def profile(p: Form) -> InvariantProfile:
    s = stab_lie_dim(p)
    return InvariantProfile(nu=nu(p), stab_lie_dim=s, orbit_dim=80 - s)


def _value(a, p: Point) -> list[list[Fraction]]:
    # a(p) as a 3x3 matrix
    return reshape(mat_vec(a, p))


def tau(a, p1: Point, p2: Point, p3: Point) -> Fraction:
    """Tr( a(p1) adj(a(p2)) a(p3) adj(a(p1 + p2 + p3)) )."""
    s = [Fraction(u) + v + w for u, v, w in zip(p1, p2, p3)]
    m = mat_mul(_value(a, p1), adjugate3(_value(a, p2)))
    m = mat_mul(m, _value(a, p3))
    m = mat_mul(m, adjugate3(_value(a, s)))
    return m[0][0] + m[1][1] + m[2][2]


def tau_sym(a, points: Sequence[Point]) -> Fraction:
    """``tau(a) + tau(T a)`` with ``T`` the transposition."""
    ta = mat_mul(transposition_endo(), a)
    return tau(a, *points) + tau(ta, *points)


def random_points(rng: random.Random, k: int = 3, bound: int = WITNESS_RANGE):
    return tuple(tuple(rng.randint(-bound, bound) for _ in range(NVARS)) for _ in range(k))


def semistable_witness(a, seed) -> tuple[bool, tuple | None]:
    """Look for points where ``tau_sym(a)`` is nonzero.

    A hit proves that ``[a]`` is semistable.  A miss after the fixed number
    of attempts proves nothing.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(WITNESS_ATTEMPTS):
        pts = random_points(rng)
        if tau_sym(a, pts) != 0:
            return True, pts
    return False, None
