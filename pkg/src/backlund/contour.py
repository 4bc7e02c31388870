"""Axis-aligned contours in the critical strip and branch-tracked
argument accumulation along them.

The integral of f'/f over a path is Im-equal to the total continuous
change of arg f, so it is computed here by adaptive sampling: a step is
accepted only when the sample-to-sample argument increment is safely
inside the principal branch (|delta| < pi/2 and |f ratio - 1| < 0.5),
otherwise the step is halved.  The accepted principal increments then sum
to the continuous argument change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, TextIO

from .complexfn import DEFAULT_PARAMS, EvalParams, principal_arg_delta, _require_finite
from .errors import BudgetExhaustedError, PoleGuardError, QuantizationError, ZeroOnPathError
from .serialize import fmt_float
from .zeta import ZETA_POLE_GUARD, zeta

__all__ = [
    "ContourPath",
    "ArgTrackResult",
    "rect_boundary",
    "backlund_L_path",
    "window_bracket_path",
    "concat_paths",
    "track_arg_along",
    "trace_arg_samples",
    "winding_number",
    "count_real_part_sign_changes",
    "write_samples_csv",
    "CSV_HEADER",
]

# Tracking refuses to continue once |f| falls below this: a zero is on
# (or numerically on) the path and the window must be re-selected.
ZERO_ON_PATH_THRESHOLD = 1e-8

# Largest accepted distance between adjacent samples before refinement.
_INITIAL_STEP = 0.25

_POLE = 1.0 + 0.0j


@dataclass(frozen=True)
class ContourPath:
    """Ordered polyline of axis-aligned segments.

    Consecutive vertices must differ in exactly one coordinate; a closed
    path repeats its first vertex at the end.  Vertices may not sit
    inside the guard disc around the zeta pole at s = 1.
    """

    vertices: tuple[complex, ...]
    closed: bool = False

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("a contour needs at least two vertices")
        for v in verts:
            _require_finite(v, "contour vertex")
            if abs(v - _POLE) < ZETA_POLE_GUARD:
                raise PoleGuardError(f"vertex {v!r} is inside the pole guard disc around s=1")
        for a, b in zip(verts, verts[1:]):
            dx, dy = b.real - a.real, b.imag - a.imag
            if (dx == 0.0) == (dy == 0.0):
                raise ValueError(f"segment {a!r} -> {b!r} is not a proper axis-aligned step")
        if self.closed and verts[0] != verts[-1]:
            raise ValueError("closed path must end where it starts")

    @property
    def segments(self) -> tuple[tuple[complex, complex], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))

    @property
    def length(self) -> float:
        return sum(abs(b - a) for a, b in self.segments)

    def point_at(self, arc: float) -> complex:
        """Point at arclength ``arc`` from the start (clamped to the ends)."""
        if arc <= 0.0:
            return self.vertices[0]
        for a, b in self.segments:
            seg = abs(b - a)
            if arc <= seg:
                return a + (b - a) * (arc / seg)
            arc -= seg
        return self.vertices[-1]

    def reversed(self) -> "ContourPath":
        return ContourPath(self.vertices[::-1], closed=self.closed)

    def min_distance_to(self, z: complex) -> float:
        """Distance from the point z to the polyline."""
        best = math.inf
        for a, b in self.segments:
            if a.real == b.real:  # vertical
                lo, hi = sorted((a.imag, b.imag))
                d = math.hypot(z.real - a.real, max(lo - z.imag, 0.0, z.imag - hi))
            else:  # horizontal
                lo, hi = sorted((a.real, b.real))
                d = math.hypot(max(lo - z.real, 0.0, z.real - hi), z.imag - a.imag)
            best = min(best, d)
        return best


def concat_paths(first: ContourPath, second: ContourPath) -> ContourPath:
    """Join two open paths; the second must begin where the first ends."""
    if first.closed or second.closed:
        raise ValueError("can only concatenate open paths")
    if first.vertices[-1] != second.vertices[0]:
        raise ValueError("paths do not share an endpoint")
    verts = first.vertices + second.vertices[1:]
    return ContourPath(verts, closed=verts[0] == verts[-1])


def rect_boundary(sigma_min: float, sigma_max: float, t_min: float, t_max: float) -> ContourPath:
    """Closed counterclockwise axis-aligned rectangle boundary."""
    if not (sigma_min < sigma_max and t_min < t_max):
        raise ValueError("rectangle is degenerate: need sigma_min < sigma_max and t_min < t_max")
    corners = (
        complex(sigma_min, t_min),
        complex(sigma_max, t_min),
        complex(sigma_max, t_max),
        complex(sigma_min, t_max),
        complex(sigma_min, t_min),
    )
    path = ContourPath(corners, closed=True)
    if path.min_distance_to(_POLE) < ZETA_POLE_GUARD:
        raise PoleGuardError("rectangle boundary passes through the pole guard disc around s=1")
    return path


def backlund_L_path(epsilon: float, height: float) -> ContourPath:
    """The L-shaped counting path: up the line sigma = 1 + epsilon from
    the real axis, then left to the critical line at the given height."""
    if not (epsilon > 0.0 and math.isfinite(epsilon)):
        raise ValueError("epsilon must be positive")
    if not (height > 1.0 and math.isfinite(height)):
        raise ValueError("height must exceed 1")
    return ContourPath(
        (
            complex(1.0 + epsilon, 0.0),
            complex(1.0 + epsilon, height),
            complex(0.5, height),
        )
    )


def window_bracket_path(epsilon: float, t_lo: float, t_hi: float) -> ContourPath:
    """Bracket-shaped path around the right side of a height window:
    (1/2, t_lo) -> (1+eps, t_lo) -> (1+eps, t_hi) -> (1/2, t_hi).

    Integrating f'/f along it equals the difference of the two L-path
    integrals with heights t_hi and t_lo (their shared leg cancels).
    """
    if not (epsilon > 0.0 and 1.0 < t_lo < t_hi):
        raise ValueError("need epsilon > 0 and 1 < t_lo < t_hi")
    return ContourPath(
        (
            complex(0.5, t_lo),
            complex(1.0 + epsilon, t_lo),
            complex(1.0 + epsilon, t_hi),
            complex(0.5, t_hi),
        )
    )


@dataclass(frozen=True)
class ArgTrackResult:
    """Total continuous argument change of f along a path."""

    arg_change: float
    samples_used: int
    min_abs_f: float


def _track(path: ContourPath, f, p: EvalParams, record: list | None) -> ArgTrackResult:
    z = path.vertices[0]
    fz = complex(f(z))
    _require_finite(fz, "tracked function value")
    if abs(fz) < ZERO_ON_PATH_THRESHOLD:
        raise ZeroOnPathError(f"|f|={abs(fz):.2e} at path start {z!r}")

    total = 0.0
    samples = 1
    min_abs = abs(fz)
    if record is not None:
        record.append((0, z.real, z.imag, fz.real, fz.imag, 0.0))

    for a, b in path.segments:
        seg_len = abs(b - a)
        pieces = max(1, math.ceil(seg_len / _INITIAL_STEP))
        for i in range(pieces):
            target = a + (b - a) * ((i + 1) / pieces)
            # (endpoint, depth) intervals still to cover, nearest first
            stack = [(target, 0)]
            while stack:
                z1, depth = stack.pop()
                f1 = complex(f(z1))
                _require_finite(f1, "tracked function value")
                samples += 1
                a1 = abs(f1)
                if a1 < ZERO_ON_PATH_THRESHOLD:
                    raise ZeroOnPathError(f"|f|={a1:.2e} near {z1!r}")
                delta = principal_arg_delta(fz, f1)
                if abs(delta) < 0.5 * math.pi and abs(f1 / fz - 1.0) < 0.5:
                    total += delta
                    z, fz = z1, f1
                    min_abs = min(min_abs, a1)
                    if record is not None:
                        record.append((len(record), z.real, z.imag, fz.real, fz.imag, total))
                    continue
                if depth >= p.max_refine_depth:
                    raise BudgetExhaustedError(
                        f"step refinement exceeded max_refine_depth={p.max_refine_depth} near {z1!r}"
                    )
                stack.append((z1, depth + 1))
                stack.append((z + (z1 - z) * 0.5, depth + 1))
    return ArgTrackResult(arg_change=total, samples_used=samples, min_abs_f=min_abs)


def track_arg_along(
    path: ContourPath, f: Callable[[complex], complex], p: EvalParams = DEFAULT_PARAMS
) -> ArgTrackResult:
    """Total continuous change of arg f along the path.

    Raises ZeroOnPathError if f (numerically) vanishes on the path and
    BudgetExhaustedError if the halving budget runs out.
    """
    return _track(path, f, p, record=None)


def trace_arg_samples(
    path: ContourPath, f: Callable[[complex], complex], p: EvalParams = DEFAULT_PARAMS
):
    """Like track_arg_along, but also returns the accepted sample rows
    (index, sigma, t, re_f, im_f, accumulated_arg) for CSV export."""
    rows: list = []
    result = _track(path, f, p, record=rows)
    return result, rows


def winding_number(
    closed_path: ContourPath, f: Callable[[complex], complex], p: EvalParams = DEFAULT_PARAMS
) -> int:
    """Winding of f around 0 along a closed path: zeros minus poles
    enclosed, by the argument principle."""
    if not closed_path.closed:
        raise ValueError("winding_number needs a closed path")
    turns = track_arg_along(closed_path, f, p).arg_change / (2.0 * math.pi)
    nearest = round(turns)
    if abs(turns - nearest) > 0.1:
        raise QuantizationError(
            f"winding {turns:.6f} is not within 0.1 of an integer; "
            "a zero or pole sits too close to the path"
        )
    return int(nearest)


# ---------------------------------------------------------------------------
# Sign changes of Re zeta along a path

# Final cell width, as a fraction of total path length.
_SIGN_RESOLUTION = 1e-4
# Phase-one sampling step (absolute units in the s plane).
_SIGN_COARSE_STEP = 0.1


def _sign(x: float) -> int:
    return 1 if x >= 0.0 else -1


def _count_sign_changes(path: ContourPath, g: Callable[[complex], float]) -> int:
    """Sign changes of the real function g along the path.

    Coarse scan, then halving near sign flips and near small |g| down to
    the resolution floor; a dip that cannot be separated from a tangency
    at the floor counts as no change and raises a RuntimeWarning.
    """
    import statistics
    import warnings

    total_len = path.length
    res = max(total_len * _SIGN_RESOLUTION, 1e-9)
    n0 = max(2, math.ceil(total_len / _SIGN_COARSE_STEP))
    arcs = [total_len * i / n0 for i in range(n0 + 1)]
    vals = [g(path.point_at(arc)) for arc in arcs]
    # Median magnitude sets the dip threshold; the maximum would be skewed
    # by the large values near the start of the counting paths.
    scale = max(statistics.median(abs(v) for v in vals), 1e-12)
    dip_floor = 0.05 * scale
    tangency_floor = 1e-6 * scale

    def refine(lo: float, hi: float, glo: float, ghi: float) -> int:
        flipped = _sign(glo) != _sign(ghi)
        small = min(abs(glo), abs(ghi))
        if not flipped and small > max(0.75 * abs(ghi - glo), dip_floor):
            return 0
        if hi - lo <= res:
            if flipped:
                return 1
            gm = g(path.point_at(0.5 * (lo + hi)))
            if _sign(gm) != _sign(glo):
                return 2  # crossing pair resolved inside one floor cell
            if min(small, abs(gm)) < tangency_floor:
                warnings.warn(
                    f"Re-part dip at arclength ~{lo:.6f} cannot be separated from a tangency "
                    f"at resolution {res:.2e}; counted as no crossing",
                    RuntimeWarning,
                    stacklevel=3,
                )
            return 0
        mid = 0.5 * (lo + hi)
        gm = g(path.point_at(mid))
        return refine(lo, mid, glo, gm) + refine(mid, hi, gm, ghi)

    return sum(
        refine(lo, hi, glo, ghi)
        for (lo, hi, glo, ghi) in zip(arcs, arcs[1:], vals, vals[1:])
    )


def count_real_part_sign_changes(path: ContourPath, p: EvalParams = DEFAULT_PARAMS) -> int:
    """Number of sign changes of Re zeta along the path.

    Zero certifies the hypothesis of the half-turn bound for that path:
    with Re zeta never vanishing, the tracked argument stays inside
    (-pi/2, pi/2).
    """
    return _count_sign_changes(path, lambda s: zeta(s, p).value.real)


CSV_HEADER = "index,sigma,t,re_f,im_f,accumulated_arg"


def write_samples_csv(rows: Iterable[tuple], out: TextIO) -> int:
    """Write trace_arg_samples rows in the dump schema; returns row count."""
    out.write(CSV_HEADER + "\n")
    n = 0
    for idx, sigma, t, re_f, im_f, acc in rows:
        out.write(
            f"{idx},{fmt_float(sigma)},{fmt_float(t)},"
            f"{fmt_float(re_f)},{fmt_float(im_f)},{fmt_float(acc)}\n"
        )
        n += 1
    return n
