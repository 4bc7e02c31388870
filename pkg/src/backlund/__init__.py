"""Numerical verification toolkit for critical-line zeros of the Riemann
zeta function.

The library evaluates zeta, xi and the Riemann-Siegel theta function,
tracks the argument of analytic functions along axis-aligned contours,
counts strip zeros up to a height by the argument principle, and checks
per height window that the count matches the zeros located on the
critical line, with at most one zero per window once the sign conditions
on the contours are certified.
"""

from .complexfn import DEFAULT_PARAMS, EvalParams, complex_log_gamma, principal_arg_delta
from .contour import (
    ArgTrackResult,
    ContourPath,
    backlund_L_path,
    concat_paths,
    count_real_part_sign_changes,
    rect_boundary,
    trace_arg_samples,
    track_arg_along,
    winding_number,
    window_bracket_path,
    write_samples_csv,
)
from .errors import (
    BacklundError,
    BudgetExhaustedError,
    ConsistencyError,
    GammaPoleError,
    LadderExhaustedError,
    NonConvergenceError,
    PoleGuardError,
    QuantizationError,
    ZeroOnPathError,
    ZetaPoleError,
)
from .locator import RangeReport, ZeroRecord, scan_zeros, verify_range
from .windows import (
    DELTA_LADDER,
    EPSILON_LADDER,
    WindowReport,
    WindowSpec,
    count_zeros_to,
    select_window_params,
    theta_window_term,
    window_count,
    xi_recount,
)
from .zeta import (
    ZetaEvaluation,
    hardy_z,
    theta_asymptotic,
    theta_exact,
    xi,
    zeta,
    zeta_prime,
)

__version__ = "0.1.0"

__all__ = [
    "ArgTrackResult",
    "BacklundError",
    "BudgetExhaustedError",
    "ConsistencyError",
    "ContourPath",
    "DEFAULT_PARAMS",
    "DELTA_LADDER",
    "EPSILON_LADDER",
    "EvalParams",
    "GammaPoleError",
    "LadderExhaustedError",
    "NonConvergenceError",
    "PoleGuardError",
    "QuantizationError",
    "RangeReport",
    "WindowReport",
    "WindowSpec",
    "ZeroOnPathError",
    "ZeroRecord",
    "ZetaEvaluation",
    "ZetaPoleError",
    "backlund_L_path",
    "complex_log_gamma",
    "concat_paths",
    "count_real_part_sign_changes",
    "count_zeros_to",
    "hardy_z",
    "principal_arg_delta",
    "rect_boundary",
    "scan_zeros",
    "select_window_params",
    "theta_asymptotic",
    "theta_exact",
    "theta_window_term",
    "trace_arg_samples",
    "track_arg_along",
    "verify_range",
    "winding_number",
    "window_bracket_path",
    "window_count",
    "write_samples_csv",
    "xi",
    "xi_recount",
    "zeta",
    "zeta_prime",
]
