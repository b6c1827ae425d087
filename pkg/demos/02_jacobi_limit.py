"""
Reaching P2 as a limit of determinants
======================================

``det(A + t S)`` with ``A`` skew-symmetric vanishes at ``t = 0``; the
first-order term ``Tr(adj(A) S)`` is the projective limit, and it equals
twice the universal ternary quadric P2.
"""

from detorbit.boundary import curve_limit, pencil_det, skew_pencil
from detorbit.formmatrix import fm_adjugate, fm_mul, fm_trace
from detorbit.forms import canonical_forms, proj_equal, to_string
from detorbit.invariants import nu, stab_lie_dim

_, p1, p2 = canonical_forms()
a, s = skew_pencil()
print("A =", a)
print("S =", s)

# adj(A) is the rank-one matrix u^T u with u = (x3, x2, x1)
print("adj(A) =", fm_adjugate(a))

curve = pencil_det(a, s)
print("powers of t present:", curve.support)
print("first-order term equals Tr(adj(A) S):",
      curve[1] == fm_trace(fm_mul(fm_adjugate(a), s)))

limit = curve_limit(curve)
print("limit:")
print(to_string(limit), end="")
print("limit == 2 P2:", limit == p2.scale(2), " projectively P2:", proj_equal(limit, p2))

# The limit is in the boundary (63-dim orbit) and not in the orbit closure
# of p1, because nu differs.
print("nu(limit) =", nu(limit), " nu(p1) =", nu(p1), " stab dim =", stab_lie_dim(limit))
