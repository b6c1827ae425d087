import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import settings, strategies as st

from detorbit.forms import NVARS, Form, monomials

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SYMS = sp.symbols("x1:10")

small_ints = st.integers(min_value=-3, max_value=3)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_fractions = fractions.filter(bool)


@st.composite
def forms(draw, degree=None, max_terms=4):
    d = draw(st.integers(1, 3)) if degree is None else degree
    mons = monomials(d)
    idx = draw(st.lists(st.integers(0, len(mons) - 1), max_size=max_terms, unique=True))
    return Form(d, {mons[i]: draw(fractions) for i in idx})


@st.composite
def endos(draw, density=0.3):
    rows = []
    for _ in range(NVARS):
        rows.append([draw(small_ints) if draw(st.floats(0, 1)) < density else 0
                     for _ in range(NVARS)])
    return rows


def random_form(rng: random.Random, degree: int, nterms: int = 4) -> Form:
    mons = monomials(degree)
    return Form(degree, {rng.choice(mons): Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                         for _ in range(nterms)})


def random_endo(rng: random.Random, bound: int = 2, density: float = 0.4):
    return [[rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(NVARS)]
            for _ in range(NVARS)]


def to_sympy(f: Form):
    """Independent conversion used as a symbolic oracle."""
    expr = sp.Integer(0)
    for e, c in f.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(SYMS, e):
            term *= s ** k
        expr += term
    return sp.expand(expr)


@pytest.fixture
def rng():
    return random.Random(20240601)


PRIME = 2**61 - 1


def rank_mod_p(rows, p=PRIME):
    """Rank over GF(p) of an integer/rational matrix; an oracle independent of detorbit.linalg.

    Never exceeds the rank over Q, and equals it unless p divides some minor.
    """
    m = [[(Fraction(v).numerator * pow(Fraction(v).denominator, -1, p)) % p for v in r]
         for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def derivative_at_zero(g):
    """Exact g'(0) for a polynomial g of degree <= 3, from g(0..3)."""
    v = [g(t) for t in range(4)]
    return Fraction(-11, 6) * v[0] + 3 * v[1] - Fraction(3, 2) * v[2] + Fraction(1, 3) * v[3]


def det3x3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
