from .cone import (Certificate, Cone, InclusionResult, apply, box_points, canonical_hform,
                   equal, extreme_rays, farkas_certificate, format_functional, full_space,
                   includes, intersect, irredundant, is_feasible_lp, make_cone, minkowski_sum, slice,
                   slice_grid)
from .dd import DimensionTooLarge
from .exact import primitive
from .fourier_motzkin import FMBlowup, System, fm_feasible, project_out
from .lp import feasible_point, nonneg_combination

__all__ = [
    "Certificate", "Cone", "InclusionResult", "apply", "box_points", "canonical_hform",
    "equal", "extreme_rays", "farkas_certificate", "format_functional", "full_space",
    "includes", "intersect", "irredundant", "is_feasible_lp", "make_cone", "minkowski_sum", "slice",
    "slice_grid",
    "DimensionTooLarge", "primitive", "FMBlowup", "System", "fm_feasible", "project_out",
    "feasible_point", "nonneg_combination",
]
