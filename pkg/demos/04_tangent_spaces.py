"""
Two tangent spaces at the skew-symmetric point
==============================================

The first-order deformations ``c`` of ``b`` keeping ``det(b + t c)`` in
``O(t^2)`` form a 35-dimensional linear space; the tangent space of the
orbit of ``b`` under left symmetries and right changes of variables is
also 35-dimensional.  Both contain the line through ``b``, so projectively
both are 34-dimensional and the blowup center is smooth at ``b``.
"""

from detorbit.boundary import (blowup_center_tangent_dim, blowup_center_tangent_space,
                               orbit_tangent_dim, orbit_tangent_generators)
from detorbit.formmatrix import fm_to_endo, generic_skew
from detorbit.linalg import span, span_dim

b = generic_skew()
center = blowup_center_tangent_space(b)
gens = orbit_tangent_generators(b)
orbit = span(gens, 81)

print("center tangent: affine", center.dim, "projective", blowup_center_tangent_dim(b))
print("orbit tangent:  affine", span_dim(gens), "projective", orbit_tangent_dim(b),
      f"({len(gens)} generators)")

# The orbit directions are deformations keeping det = O(t^2), so the
# orbit tangent space sits inside the center tangent space; equal
# dimensions make them equal.
print("orbit tangent inside center tangent:", all(v in center for v in orbit.basis))
bvec = tuple(v for row in fm_to_endo(b) for v in row)
print("b itself in both:", bvec in center, bvec in orbit)
