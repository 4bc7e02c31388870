"""Critical-line zero location and range verification.

Zeros on the line are found independently of the counting machinery, by
scanning Hardy's Z for sign changes and bisecting each bracket.  A range
is then verified window by window: around every located zero (and in the
gaps between them) the window count from the argument principle must
match the number of located zeros inside the window.  Agreement means
every zero the count sees lies on the critical line and is simple; a
window where the count exceeds the located zeros would expose an
off-line or multiple zero and is flagged, never dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexfn import DEFAULT_PARAMS, EvalParams
from .errors import BacklundError
from .windows import WindowReport, select_window_params, window_count
from .zeta import hardy_z

__all__ = ["ZeroRecord", "RangeReport", "scan_zeros", "verify_range"]

_BRACKET_WIDTH = 1e-9

# Windows reach at most this far beyond their centers, so scanning is
# padded by it to classify zeros near the range ends correctly.
_SCAN_PAD = 1.0


@dataclass(frozen=True)
class ZeroRecord:
    """A located critical-line zero: the sign-change bracket, the
    bisection refinement, and whether its window check succeeded."""

    bracket_lo: float
    bracket_hi: float
    refined_t: float
    refinement_width: float
    window_verified: bool

    def to_jsonable(self) -> dict:
        return {
            "bracket_lo": self.bracket_lo,
            "bracket_hi": self.bracket_hi,
            "refined_t": self.refined_t,
            "refinement_width": self.refinement_width,
            "window_verified": self.window_verified,
        }


def _bisect(lo: float, hi: float, f_lo: float, p: EvalParams) -> tuple[float, float]:
    """Shrink a sign-change bracket of Z to width <= 1e-9."""
    while hi - lo > _BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        f_mid = hardy_z(mid, p)
        if f_mid == 0.0:
            # Exact zero sample: nudge so both ends keep a strict sign.
            mid = lo + (hi - lo) * 0.499
            f_mid = hardy_z(mid, p)
        if (f_lo < 0.0) != (f_mid < 0.0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return lo, hi


def scan_zeros(
    t_min: float,
    t_max: float,
    initial_step: float = 0.1,
    p: EvalParams = DEFAULT_PARAMS,
) -> list[ZeroRecord]:
    """Bracket every sign change of Z on [t_min, t_max] at the scan
    resolution and bisect each bracket to width <= 1e-9.

    Zeros closer together than the step can be missed by construction;
    completeness is certified by the count cross-check, not by the scan.
    """
    if not (2.0 <= t_min < t_max):
        raise ValueError("need 2 <= t_min < t_max")
    if not 0.0 < initial_step <= 0.25:
        raise ValueError("initial_step must lie in (0, 0.25]")

    records = []
    n = max(1, math.ceil((t_max - t_min) / initial_step))
    prev_t = t_min
    prev_z = hardy_z(prev_t, p)
    for i in range(1, n + 1):
        t = min(t_min + i * (t_max - t_min) / n, t_max)
        z = hardy_z(t, p)
        if (prev_z < 0.0) != (z < 0.0):
            lo, hi = _bisect(prev_t, t, prev_z, p)
            records.append(
                ZeroRecord(
                    bracket_lo=lo,
                    bracket_hi=hi,
                    refined_t=0.5 * (lo + hi),
                    refinement_width=hi - lo,
                    window_verified=False,
                )
            )
        prev_t, prev_z = t, z
    return records


@dataclass(frozen=True)
class RangeReport:
    """Outcome of verify_range: located zeros, per-window reports,
    windows that could not be verified, and the summary tallies."""

    t_min: float
    t_max: float
    zeros: tuple[ZeroRecord, ...]
    windows: tuple[WindowReport, ...]
    unverifiable: tuple[dict, ...]
    discrepancies: tuple[dict, ...]

    @property
    def summary(self) -> dict:
        return {
            "total_zeros": len(self.zeros),
            "total_windows": len(self.windows) + len(self.unverifiable),
            "unverifiable_windows": len(self.unverifiable),
            "discrepancy_windows": len(self.discrepancies),
        }

    def to_jsonable(self) -> dict:
        return {
            "t_min": self.t_min,
            "t_max": self.t_max,
            "zeros": [z.to_jsonable() for z in self.zeros],
            "windows": [w.to_jsonable() for w in self.windows],
            "unverifiable": list(self.unverifiable),
            "discrepancies": list(self.discrepancies),
            "summary": self.summary,
        }


def _window_centers(t_min: float, t_max: float, ordinates: list[float]) -> list[float]:
    """One window per zero plus the midpoints between and around them.

    The candidate half-widths top out at 0.5, so windows cannot tile the
    range; gaps are covered by the scan-versus-count cross-check instead.
    """
    inside = [t for t in ordinates if t_min <= t <= t_max]
    if not inside:
        return [0.5 * (t_min + t_max)]
    centers = [0.5 * (t_min + inside[0])]
    for a, b in zip(inside, inside[1:]):
        centers.append(a)
        centers.append(0.5 * (a + b))
    centers.append(inside[-1])
    centers.append(0.5 * (inside[-1] + t_max))
    return centers


def verify_range(
    t_min: float,
    t_max: float,
    initial_step: float = 0.1,
    p: EvalParams = DEFAULT_PARAMS,
) -> RangeReport:
    """Scan a height range for critical-line zeros and verify, window by
    window, that the argument-principle count matches the located zeros.

    Windows whose contours cannot be freed of zeros are reported in
    ``unverifiable``; windows whose count disagrees with the located
    zeros inside them are reported in ``discrepancies``.
    """
    if not (t_min > 3.0 and t_max > t_min):
        raise ValueError("need 3 < t_min < t_max")

    scan_lo = max(t_min - _SCAN_PAD, 2.0)
    padded = scan_zeros(scan_lo, t_max + _SCAN_PAD, initial_step, p)
    ordinates = [z.refined_t for z in padded]
    in_range = [z for z in padded if t_min <= z.refined_t <= t_max]

    windows: list[WindowReport] = []
    unverifiable: list[dict] = []
    discrepancies: list[dict] = []
    verified_ordinates: set[float] = set()

    for center in _window_centers(t_min, t_max, ordinates):
        try:
            spec = select_window_params(center, p)
            report = window_count(spec, p)
        except BacklundError as exc:
            unverifiable.append(
                {"t_center": center, "error": type(exc).__name__, "message": str(exc)}
            )
            continue
        windows.append(report)
        inside = [t for t in ordinates if spec.t_lo < t <= spec.t_hi]
        if report.window_count != len(inside):
            discrepancies.append(
                {
                    "t_center": center,
                    "window_count": report.window_count,
                    "zeros_located": len(inside),
                }
            )
        elif report.window_count == 1:
            verified_ordinates.add(inside[0])

    zeros = tuple(
        ZeroRecord(
            bracket_lo=z.bracket_lo,
            bracket_hi=z.bracket_hi,
            refined_t=z.refined_t,
            refinement_width=z.refinement_width,
            window_verified=z.refined_t in verified_ordinates,
        )
        for z in in_range
    )
    return RangeReport(
        t_min=t_min,
        t_max=t_max,
        zeros=zeros,
        windows=tuple(windows),
        unverifiable=tuple(unverifiable),
        discrepancies=tuple(discrepancies),
    )
