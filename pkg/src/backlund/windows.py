"""Zero counting by the argument principle and the height-window bound.

The count up to height T is

    N(T) = theta(T)/pi + 1 + Im(integral of zeta'/zeta over the L-path)/pi

rounded to the nearest integer, with the rounding residual required to be
small.  A height window (T - delta, T + delta] is counted the same way as
a difference of two L-path runs, or equivalently in one pass over the
bracket contour around the window; both decompositions are produced and
must agree.  When Re zeta keeps its sign on both L-paths, each argument
term is confined to [-1/2, 1/2], so the window can hold at most one zero:
that is the per-window check this module certifies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexfn import DEFAULT_PARAMS, EvalParams
from .contour import (
    ContourPath,
    backlund_L_path,
    count_real_part_sign_changes,
    rect_boundary,
    track_arg_along,
    winding_number,
    window_bracket_path,
)
from .errors import BacklundError, LadderExhaustedError, QuantizationError, ZeroOnPathError
from .zeta import theta_exact, xi, zeta

__all__ = [
    "WindowSpec",
    "WindowReport",
    "count_zeros_to",
    "window_count",
    "select_window_params",
    "theta_window_term",
    "xi_recount",
    "DELTA_LADDER",
    "EPSILON_LADDER",
]

# Candidate half-widths and strip margins, tried in lexicographic order.
DELTA_LADDER = (0.5, 0.45, 0.35, 0.25, 0.18, 0.12)
EPSILON_LADDER = (0.1, 0.15, 0.08, 0.2)

# A candidate contour is accepted when |zeta| stays above this on it.
_MIN_ABS_ZETA = 1e-6

# Integer quantization: numeric error is ~1e-6, so a residual beyond this
# band signals a zero hugging the contour rather than roundoff.
_QUANT_BAND = 0.1

_HALF_BOUND_TOL = 0.5 + 1e-6


@dataclass(frozen=True)
class WindowSpec:
    """A height window (t_center - delta, t_center + delta] with strip
    margin epsilon for the contours."""

    t_center: float
    delta: float
    epsilon: float

    def __post_init__(self):
        if not (self.delta > 0.0 and self.epsilon > 0.0):
            raise ValueError("delta and epsilon must be positive")
        if not self.t_center - self.delta > 2.0:
            raise ValueError("window must stay above t = 2")

    @property
    def t_lo(self) -> float:
        return self.t_center - self.delta

    @property
    def t_hi(self) -> float:
        return self.t_center + self.delta


@dataclass(frozen=True)
class WindowReport:
    """Full decomposition of a window count.

    theta_term + c2_term rounds to the number of zeros in the window;
    c11/c12 are the per-path argument terms (in units of pi) and must
    reproduce c2 as their difference.  bound_satisfied records whether
    the at-most-one bound was certified: both sign-change counts zero,
    both argument terms within [-1/2, 1/2], and the count at most 1.
    """

    t_center: float
    theta_term: float
    c11_term: float
    c12_term: float
    c2_term: float
    window_count: int
    sign_changes_c11: int
    sign_changes_c12: int
    bound_satisfied: bool
    delta_used: float
    epsilon_used: float

    def to_jsonable(self) -> dict:
        return {
            "t_center": self.t_center,
            "theta_term": self.theta_term,
            "c11_term": self.c11_term,
            "c12_term": self.c12_term,
            "c2_term": self.c2_term,
            "window_count": self.window_count,
            "sign_changes_c11": self.sign_changes_c11,
            "sign_changes_c12": self.sign_changes_c12,
            "bound_satisfied": self.bound_satisfied,
            "delta_used": self.delta_used,
            "epsilon_used": self.epsilon_used,
        }


def _zeta_value(p: EvalParams):
    return lambda s: zeta(s, p).value


def _round_checked(x: float, what: str) -> int:
    nearest = round(x)
    if abs(x - nearest) > _QUANT_BAND:
        raise QuantizationError(f"{what} = {x:.6f} is not within {_QUANT_BAND} of an integer")
    return int(nearest)


def count_zeros_to(height: float, epsilon: float = 0.1, p: EvalParams = DEFAULT_PARAMS) -> int:
    """N(height): zeros of zeta (with multiplicity) in the critical strip
    with 0 < Im s <= height.

    If the counting path grazes a zero the height is nudged by multiples
    of 0.01 (the count is unchanged as long as the requested height is at
    least 0.05 away from every zero ordinate, which is the caller's
    contract).
    """
    if not (height > 2.0 and math.isfinite(height)):
        raise ValueError("height must exceed 2")
    if not 0.0 < epsilon <= 0.5:
        raise ValueError("epsilon must lie in (0, 0.5]")

    last_error: BacklundError | None = None
    for offset in (0.0, 0.01, -0.01, 0.02, -0.02, 0.03):
        h = height + offset
        try:
            arg = track_arg_along(backlund_L_path(epsilon, h), _zeta_value(p), p).arg_change
            return _round_checked(theta_exact(h) / math.pi + 1.0 + arg / math.pi, "zero count")
        except (ZeroOnPathError, QuantizationError) as exc:
            last_error = exc
    raise last_error


def theta_window_term(w: WindowSpec) -> float:
    """(theta(T+delta) - theta(T-delta)) / pi, the smooth part of the
    window count."""
    return (theta_exact(w.t_hi) - theta_exact(w.t_lo)) / math.pi


def window_count(w: WindowSpec, p: EvalParams = DEFAULT_PARAMS) -> WindowReport:
    """Count the zeros inside a height window and certify the at-most-one
    bound for it.

    Raises ZeroOnPathError when a contour grazes a zero (reselect delta
    and epsilon) and QuantizationError when the terms do not add up to an
    integer within the acceptance band.
    """
    f = _zeta_value(p)
    path_hi = backlund_L_path(w.epsilon, w.t_hi)
    path_lo = backlund_L_path(w.epsilon, w.t_lo)
    bracket = window_bracket_path(w.epsilon, w.t_lo, w.t_hi)

    theta_term = theta_window_term(w)
    c11 = track_arg_along(path_hi, f, p).arg_change / math.pi
    c12 = track_arg_along(path_lo, f, p).arg_change / math.pi
    c2 = track_arg_along(bracket, f, p).arg_change / math.pi
    count = _round_checked(theta_term + c2, "window count")

    sc11 = count_real_part_sign_changes(path_hi, p)
    sc12 = count_real_part_sign_changes(path_lo, p)
    certified = (
        sc11 == 0
        and sc12 == 0
        and abs(c11) <= _HALF_BOUND_TOL
        and abs(c12) <= _HALF_BOUND_TOL
        and count <= 1
    )
    return WindowReport(
        t_center=w.t_center,
        theta_term=theta_term,
        c11_term=c11,
        c12_term=c12,
        c2_term=c2,
        window_count=count,
        sign_changes_c11=sc11,
        sign_changes_c12=sc12,
        bound_satisfied=certified,
        delta_used=w.delta,
        epsilon_used=w.epsilon,
    )


def _min_abs_zeta_on_path(path: ContourPath, p: EvalParams) -> float:
    """Sampled minimum of |zeta| along an L-path.

    The vertical leg at sigma = 1 + eps is bounded away from zero
    (|zeta| >= 1/zeta(1+eps)), so it is sampled coarsely; the short
    horizontal leg ends on the critical line and gets the fine grid.
    """
    best = math.inf
    for a, b in path.segments:
        seg = abs(b - a)
        step = 0.5 if a.real == b.real else 0.01
        n = max(2, math.ceil(seg / step))
        for i in range(n + 1):
            s = a + (b - a) * (i / n)
            best = min(best, abs(zeta(s, p).value))
    return best


def select_window_params(t_center: float, p: EvalParams = DEFAULT_PARAMS) -> WindowSpec:
    """First (delta, epsilon) from the candidate ladder whose two L-paths
    keep |zeta| above the acceptance threshold.

    Raises LadderExhaustedError when every candidate fails, i.e. the
    window at this height cannot be verified (in practice: t_center is
    essentially a zero ordinate and every candidate contour grazes it).
    """
    if not (t_center > 3.0 and math.isfinite(t_center)):
        raise ValueError("t_center must exceed 3")
    for delta in DELTA_LADDER:
        for epsilon in EPSILON_LADDER:
            w = WindowSpec(t_center=t_center, delta=delta, epsilon=epsilon)
            lo = _min_abs_zeta_on_path(backlund_L_path(epsilon, w.t_hi), p)
            if lo <= _MIN_ABS_ZETA:
                continue
            lo = min(lo, _min_abs_zeta_on_path(backlund_L_path(epsilon, w.t_lo), p))
            if lo > _MIN_ABS_ZETA:
                return w
    raise LadderExhaustedError(
        f"no (delta, epsilon) candidate avoids the zeros near t={t_center}; "
        "window reported unverifiable"
    )


def xi_recount(w: WindowSpec, p: EvalParams = DEFAULT_PARAMS) -> int:
    """Recount the window by winding the completed xi function around the
    full window rectangle.

    xi is entire with exactly the strip zeros, so the winding equals the
    window count with no pole correction.  xi decays like
    exp(-pi t / 4), so it is rescaled by its value at the first corner;
    a constant factor does not change the winding.
    """
    rect = rect_boundary(-w.epsilon, 1.0 + w.epsilon, w.t_lo, w.t_hi)
    anchor = abs(xi(rect.vertices[0], p))
    if anchor <= 0.0:
        raise ZeroOnPathError(f"xi underflowed at rectangle corner {rect.vertices[0]!r}")
    scale = 1.0 / anchor
    return winding_number(rect, lambda s: scale * xi(s, p), p)
