"""
Destabilizing curves and a trace invariant
==========================================

Three compression spaces of singular matrices are pushed to zero by
explicit diagonal one-parameter subgroups, so they contain no semistable
point.  The skew-symmetric family, on the other hand, has a nonzero value
of an invariant trace function, which proves it is semistable.
"""

import random

from detorbit.formmatrix import fm_to_endo, generic_skew
from detorbit.group import (DESTABILIZING_CURVES, act_left, compression_pattern,
                            one_param_min_exponent, random_stab)
from detorbit.invariants import random_points, semistable_witness, tau, tau_sym

for name, curve in DESTABILIZING_CURVES.items():
    m = compression_pattern(name)
    e = one_param_min_exponent(curve, m)
    print(f"{name}: pattern {m}  curve {curve}  smallest power of t = {e}")

b = fm_to_endo(generic_skew())
found, pts = semistable_witness(b, seed=0)
print("\nwitness found:", found)
print("points:", pts)
print("tau(b) =", tau(b, *pts), " tau_sym(b) =", tau_sym(b, pts))

# tau_sym does not change when the symmetry group acts on the left
rng = random.Random(1)
a = [[rng.randint(-3, 3) for _ in range(9)] for _ in range(9)]
pts = random_points(rng)
for transpose_first in (False, True):
    h = random_stab(rng, transpose_first)
    print(f"transpose={transpose_first}: tau_sym(a) = {tau_sym(a, pts)}, "
          f"tau_sym(h a) = {tau_sym(act_left(h, a), pts)}")
