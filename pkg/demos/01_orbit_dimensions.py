"""
Orbit dimensions and the derivative-span invariant
==================================================

The orbit of a cubic form under linear changes of variables has projective
dimension ``80 - dim(stabilizer)``.  The stabilizer's Lie algebra is the
kernel of a 165 x 81 rational matrix, so everything below is exact.
"""

from detorbit.forms import canonical_forms, to_string
from detorbit.invariants import nu, orbit_dim, profile, stabilizer_system

det3, p1, p2 = canonical_forms()

# The three forms, in the text format the CLI reads and writes
for name, f in [("det3", det3), ("p1", p1), ("p2", p2)]:
    print(f"--- {name} ({len(f)} terms)")
    print(to_string(f), end="")

# The linear system behind the stabilizer dimension
m = stabilizer_system(det3)
print(f"\nstabilizer system: {len(m)} x {len(m[0])}")

# det3 has a 16-dimensional stabilizer (left and right multiplication by
# traceless matrices), so its orbit is 64-dimensional.  Both boundary
# forms have a 17-dimensional stabilizer, hence 63-dimensional orbits.
for name, f in [("det3", det3), ("p1", p1), ("p2", p2)]:
    print(f"{name}: {profile(f)}")

# nu separates p1 from both det3 and p2: p1 only uses eight linear forms.
print("nu:", nu(det3), nu(p1), nu(p2))
print("orbit dims:", orbit_dim(det3), orbit_dim(p1), orbit_dim(p2))
