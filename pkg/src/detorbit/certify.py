"""Registry of named checks and the JSON certification report.

Every check is deterministic for a given seed: each one draws from its own
``random.Random`` seeded with ``"<seed>/<check_id>"``, so adding or
removing checks never perturbs the others.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .boundary import (blowup_center_tangent_space, curve_limit, orbit_tangent_generators,
                       pencil_det, skew_pencil, traceless_witness)
from .formmatrix import (FormMatrix, fm_adjugate, fm_det, fm_mul, fm_to_endo, fm_trace,
                         generic_skew)
from .forms import Form, canonical_forms, compose_linear, proj_equal
from .group import (COMPRESSION_PATTERNS, DESTABILIZING_CURVES, StabElement, act_left,
                    compression_pattern, one_param_min_exponent, random_stab,
                    stab_to_endo)
from .invariants import nu, orbit_dim, random_points, semistable_witness, stab_lie_dim, tau_sym
from .linalg import rank, span_dim

DEFAULT_SEED = 0
DEFAULT_TRIALS = 25

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckResult:
    check_id: str
    lemma: str
    status: str
    observed: str
    expected: str
    witness: dict | None = None


@dataclass
class Context:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    det3: Form = field(default_factory=lambda: canonical_forms()[0])

    def rng(self, check_id: str) -> random.Random:
        return random.Random(f"{self.seed}/{check_id}")


def _s(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, int):
        return f"{v}/1"
    return str(v)


def _ser(obj):
    """Exact, JSON-friendly copy of nested tuples/lists of scalars."""
    if isinstance(obj, (list, tuple)):
        return [_ser(v) for v in obj]
    if isinstance(obj, (Fraction, int)) and not isinstance(obj, bool):
        return _s(Fraction(obj))
    return obj


def _stab_witness(h: StabElement) -> dict:
    return {"u": _ser(h.u), "v": _ser(h.v), "transpose_first": h.transpose_first}


def _equal(observed, expected, witness=None):
    observed, expected = str(observed), str(expected)
    return (PASS if observed == expected else FAIL), observed, expected, witness


def _count(ok: int, n: int, witness=None):
    return _equal(f"{ok}/{n}", f"{n}/{n}", witness)


def _random_int_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3):
    return [[Fraction(rng.randint(-bound, bound)) for _ in range(cols)] for _ in range(rows)]


def random_singular_endo(rng: random.Random, bound: int = 3):
    """A random 9x9 integer matrix with one row a combination of the others."""
    a = _random_int_matrix(rng, 9, 9, bound)
    k = rng.randrange(9)
    weights = [rng.randint(-2, 2) for _ in range(9)]
    a[k] = [sum(w * a[i][j] for i, w in enumerate(weights) if i != k) for j in range(9)]
    return a


def random_linear_fm(rng: random.Random, bound: int = 3) -> FormMatrix:
    return FormMatrix.build(
        lambda i, j: Form.linear([rng.randint(-bound, bound) for _ in range(9)]))


# checks -------------------------------------------------------------------

def _stab_dim_det3(ctx):
    return _equal(stab_lie_dim(ctx.det3), 16)


def _orbit_dim_det3(ctx):
    return _equal(orbit_dim(ctx.det3), 64)


def _orbit_dim_p1(ctx):
    return _equal(orbit_dim(canonical_forms()[1]), 63)


def _orbit_dim_p2(ctx):
    return _equal(orbit_dim(canonical_forms()[2]), 63)


def _generators_fix_det3(ctx, check_id="stab.generators.fix_det3"):
    rng = ctx.rng(check_id)
    n = max(ctx.trials, 1)
    ok, bad = 0, None
    for k in range(n):
        h = random_stab(rng, transpose_first=bool(k % 2))
        if compose_linear(ctx.det3, stab_to_endo(h)) == ctx.det3:
            ok += 1
        elif bad is None:
            bad = _stab_witness(h)
    return _count(ok, n, {"first_failure": bad} if bad else None)


def _p1_in_phi_z(ctx):
    a0 = traceless_witness()
    same = compose_linear(ctx.det3, a0) == canonical_forms()[1]
    return _equal(f"rank={rank(a0)};equals_p1={_s(same)}", "rank=8;equals_p1=true")


def _nu_det3(ctx):
    return _equal(nu(ctx.det3), 9)


def _nu_p1(ctx):
    return _equal(nu(canonical_forms()[1]), 8)


def _nu_bound_on_z(ctx, check_id="lemma3.nu.bound_on_Z"):
    rng = ctx.rng(check_id)
    n = max(ctx.trials, 1)
    ok, worst = 0, 0
    for _ in range(n):
        a = random_singular_endo(rng)
        v = nu(compose_linear(ctx.det3, a))
        worst = max(worst, v)
        ok += v <= 8
    return _count(ok, n, {"max_nu": worst})


def _nu_p2(ctx):
    return _equal(nu(canonical_forms()[2]), 9)


def _jacobi_first_order(ctx, check_id="lemma4.jacobi.first_order"):
    rng = ctx.rng(check_id)
    n = max(ctx.trials, 1)
    ok = 0
    for _ in range(n):
        a, s = random_linear_fm(rng), random_linear_fm(rng)
        c = pencil_det(a, s)
        ok += (c[0] == fm_det(a) and c[1] == fm_trace(fm_mul(fm_adjugate(a), s))
               and c[3] == fm_det(s))
    return _count(ok, n)


def _limit_is_p2(ctx):
    p2 = canonical_forms()[2]
    a, s = skew_pencil()
    c = pencil_det(a, s)
    obs = (f"t0_zero={_s(c[0].is_zero())};t1_is_2p2={_s(c[1] == p2.scale(2))};"
           f"limit_proj_p2={_s(proj_equal(curve_limit(c), p2))}")
    return _equal(obs, "t0_zero=true;t1_is_2p2=true;limit_proj_p2=true",
                  {"support": c.support})


def _destab(name):
    def check(ctx):
        curve = DESTABILIZING_CURVES[name]
        e = one_param_min_exponent(curve, compression_pattern(name))
        return _equal(e, 1, {"left": list(curve.left_exponents),
                             "right": list(curve.right_exponents),
                             "pattern": [list(r) for r in COMPRESSION_PATTERNS[name]]})
    return check


def _tau_invariance(ctx, check_id="lemma6.tau.invariance"):
    rng = ctx.rng(check_id)
    n = max(ctx.trials, 1)
    ok, bad = 0, None
    for k in range(n):
        h = random_stab(rng, transpose_first=bool(k % 2))
        a = _random_int_matrix(rng, 9, 9)
        pts = random_points(rng)
        if tau_sym(act_left(h, a), pts) == tau_sym(a, pts):
            ok += 1
        elif bad is None:
            bad = _stab_witness(h)
    return _count(ok, n, {"first_failure": bad} if bad else None)


def _tau_witness_b(ctx, check_id="lemma6.tau.witness_b"):
    b = fm_to_endo(generic_skew())
    found, pts = semistable_witness(b, ctx.rng(check_id))
    if not found:
        return INCONCLUSIVE, "not_found", "found", None
    return PASS, "found", "found", {"points": _ser(pts), "tau_sym": _s(tau_sym(b, pts))}


def _center_tangent(ctx):
    space = blowup_center_tangent_space(generic_skew())
    return _equal(space.dim - 1, 34, {"affine_dim": space.dim,
                                      "convention": "projective = affine - 1"})


def _orbit_tangent(ctx):
    gens = orbit_tangent_generators(generic_skew())
    d = span_dim(gens)
    return _equal(d - 1, 34, {"affine_dim": d, "generators": len(gens)})


def _b_in_kernel(ctx):
    b = generic_skew()
    vec = tuple(v for row in fm_to_endo(b) for v in row)
    return _equal(_s(vec in blowup_center_tangent_space(b)), "true")


REGISTRY: dict[str, tuple[str, Callable]] = {
    "lemma1.det3.stab_dim": ("lemma1", _stab_dim_det3),
    "lemma1.det3.orbit_dim": ("lemma1", _orbit_dim_det3),
    "lemma1.p1.orbit_dim": ("lemma1", _orbit_dim_p1),
    "lemma1.p2.orbit_dim": ("lemma1", _orbit_dim_p2),
    "stab.generators.fix_det3": ("stabilizer", _generators_fix_det3),
    "lemma3.p1.in_phiZ": ("lemma3", _p1_in_phi_z),
    "lemma3.nu.det3": ("lemma3", _nu_det3),
    "lemma3.nu.p1": ("lemma3", _nu_p1),
    "lemma3.nu.bound_on_Z": ("lemma3", _nu_bound_on_z),
    "lemma4.nu.p2": ("lemma4", _nu_p2),
    "lemma4.jacobi.first_order": ("lemma4", _jacobi_first_order),
    "lemma4.limit.is_p2": ("lemma4", _limit_is_p2),
    "lemma6.destab.b1": ("lemma6", _destab("b1")),
    "lemma6.destab.b2": ("lemma6", _destab("b2")),
    "lemma6.destab.b3": ("lemma6", _destab("b3")),
    "lemma6.tau.invariance": ("lemma6", _tau_invariance),
    "lemma6.tau.witness_b": ("lemma6", _tau_witness_b),
    "lemma7.tangent.center": ("lemma7", _center_tangent),
    "lemma7.tangent.orbit": ("lemma7", _orbit_tangent),
    "lemma7.membership.b_in_kernel": ("lemma7", _b_in_kernel),
}


def check_ids() -> list[str]:
    return list(REGISTRY)


def run_check(check_id: str, seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS,
              det3: Form | None = None) -> CheckResult:
    if check_id not in REGISTRY:
        raise UnknownCheck(check_id)
    ctx = Context(seed, trials) if det3 is None else Context(seed, trials, det3)
    return _run(check_id, ctx)


def _run(check_id: str, ctx: Context) -> CheckResult:
    lemma, fn = REGISTRY[check_id]
    status, observed, expected, witness = fn(ctx)
    return CheckResult(check_id, lemma, status, observed, expected, witness)


def summarize(results: list[CheckResult]) -> dict:
    counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for r in results:
        counts[r.status] += 1
    return {"total": len(results), "passed": counts[PASS], "failed": counts[FAIL],
            "inconclusive": counts[INCONCLUSIVE]}


def run_all(seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS, det3: Form | None = None,
            checks: list[str] | None = None) -> tuple[list[CheckResult], dict]:
    """Run the selected checks (all by default) in registry order."""
    wanted = set(checks) if checks else set(REGISTRY)
    unknown = wanted - set(REGISTRY)
    if unknown:
        raise UnknownCheck(", ".join(sorted(unknown)))
    ctx = Context(seed, trials) if det3 is None else Context(seed, trials, det3)
    results = [_run(cid, ctx) for cid in REGISTRY if cid in wanted]
    return results, summarize(results)


def report(results: list[CheckResult], summary: dict, seed: int) -> dict:
    return {
        "tool_version": __version__,
        "seed": seed,
        "checks": [asdict(r) for r in results],
        "summary": summary,
    }


def report_json(results: list[CheckResult], summary: dict, seed: int) -> str:
    return json.dumps(report(results, summary, seed), indent=2) + "\n"
