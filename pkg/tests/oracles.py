"""Independent reference implementations used only by the test suite.

Nothing here shares code with the package: zeta comes from the
alternating (eta) series with a fixed-order Euler transformation, and
log-gamma from a fixed 40-step product recursion into a short Stirling
tail.  Production results are compared against these, never against
themselves.
"""

from __future__ import annotations

import cmath
import math

EULER_ORDER = 40


def eta_zeta(s: complex, order: int = EULER_ORDER) -> complex:
    """zeta via the eta series: sum (-1)^(j-1) j^-s accelerated by
    repeated averaging of partial sums (Euler transformation), divided
    by 1 - 2^(1-s).

    The head length grows with |Im s| because the terms only start to
    alternate coherently once j exceeds ~Im s.
    """
    s = complex(s)
    n0 = max(16, math.ceil(1.5 * abs(s.imag)))
    head = 0.0 + 0.0j
    sign = 1.0
    for j in range(1, n0 + 1):
        head += sign * cmath.exp(-s * math.log(j))
        sign = -sign

    tail_terms = [cmath.exp(-s * math.log(n0 + 1 + i)) for i in range(order + 1)]
    partial = []
    acc = 0.0 + 0.0j
    sg = 1.0 if n0 % 2 == 0 else -1.0
    for term in tail_terms:
        acc += sg * term
        partial.append(acc)
        sg = -sg
    for _ in range(order):
        partial = [0.5 * (partial[i] + partial[i + 1]) for i in range(len(partial) - 1)]

    eta = head + partial[0]
    return eta / (1.0 - 2.0 ** (1.0 - s))


_STIRLING_TAIL = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)  # B_2k / (2k (2k-1)) for k = 1..8


def stirling_recursion_loggamma(s: complex, shift: int = 40) -> complex:
    """log Gamma by a fixed product recursion: push the argument up by a
    fixed 40 steps, evaluate a short Stirling series there, and subtract
    the accumulated logs."""
    s = complex(s)
    lifted = 0.0 + 0.0j
    for j in range(shift):
        lifted += cmath.log(s + j)
    z = s + shift
    res = (z - 0.5) * cmath.log(z) - z + 0.5 * math.log(2.0 * math.pi)
    zp = z
    for coef in _STIRLING_TAIL:
        res += coef / zp
        zp *= z * z
    return res - lifted


def oracle_theta(t: float) -> float:
    return stirling_recursion_loggamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def oracle_hardy_z(t: float) -> float:
    rotated = cmath.exp(1j * oracle_theta(t)) * eta_zeta(complex(0.5, t))
    assert abs(rotated.imag) < 1e-7, f"oracle rotation not real at t={t}"
    return rotated.real


def count_z_sign_changes(t_min: float, t_max: float, step: float = 0.05) -> int:
    """Sign changes of the oracle Z on a uniform grid."""
    n = math.ceil((t_max - t_min) / step)
    changes = 0
    prev = oracle_hardy_z(t_min)
    for i in range(1, n + 1):
        cur = oracle_hardy_z(min(t_min + i * step, t_max))
        if (prev < 0.0) != (cur < 0.0):
            changes += 1
        prev = cur
    return changes


def oracle_zero_ordinates(t_min: float, t_max: float, step: float = 0.05, tol: float = 1e-6):
    """Bisected sign-change locations of the oracle Z."""
    ordinates = []
    n = math.ceil((t_max - t_min) / step)
    prev_t, prev = t_min, oracle_hardy_z(t_min)
    for i in range(1, n + 1):
        t = min(t_min + i * step, t_max)
        cur = oracle_hardy_z(t)
        if (prev < 0.0) != (cur < 0.0):
            lo, hi, f_lo = prev_t, t, prev
            while hi - lo > tol:
                mid = 0.5 * (lo + hi)
                f_mid = oracle_hardy_z(mid)
                if (f_lo < 0.0) != (f_mid < 0.0):
                    hi = mid
                else:
                    lo, f_lo = mid, f_mid
            ordinates.append(0.5 * (lo + hi))
        prev_t, prev = t, cur
    return ordinates


def central_difference(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def simpson(f, a: float, b: float, n: int = 128) -> float:
    """Composite Simpson rule with n (even) intervals."""
    if n % 2:
        n += 1
    h = (b - a) / n
    total = f(a) + f(b)
    for i in range(1, n):
        total += f(a + i * h) * (4.0 if i % 2 else 2.0)
    return total * h / 3.0
