"""Exact computations around the orbit closure of the 3x3 determinant."""

__version__ = "0.1.0"

from .forms import Form, canonical_forms, compose_linear, det3, p1, p2, proj_equal
from .formmatrix import FormMatrix, fm_adjugate, fm_det, generic_matrix, generic_skew
from .invariants import nu, orbit_dim, stab_lie_dim, tau, tau_sym
from .boundary import (blowup_center_tangent_dim, curve_limit, orbit_tangent_dim,
                       pencil_det)

__all__ = [
    "Form", "FormMatrix", "canonical_forms", "compose_linear", "det3", "p1", "p2",
    "proj_equal", "fm_adjugate", "fm_det", "generic_matrix", "generic_skew", "nu",
    "orbit_dim", "stab_lie_dim", "tau", "tau_sym", "blowup_center_tangent_dim",
    "curve_limit", "orbit_tangent_dim", "pencil_det",
]
