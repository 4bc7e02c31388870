"""Riemann zeta, its derivative, the completed xi function, the
Riemann-Siegel theta function (exact and asymptotic) and Hardy's Z.

zeta and zeta' use Euler-Maclaurin summation

    zeta(s) = sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2
              + sum_{k=1..K} B_2k/(2k)! (s)_{2k-1} N^(-s-2k+1) + R_K

with N = max(ceil(|Im s|/2) + 10, 20) and K = 12 fixed, which keeps the
truncation error far below 1e-10 throughout the working strip up to
|Im s| ~ 1e4.  The remainder is bounded by the first omitted term times
|s + 2K + 1| / (sigma + 2K + 1).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .complexfn import DEFAULT_PARAMS, EvalParams, complex_log_gamma, _require_finite
from .errors import ConsistencyError, NonConvergenceError, ZetaPoleError

__all__ = [
    "ZetaEvaluation",
    "zeta",
    "zeta_prime",
    "xi",
    "theta_exact",
    "theta_asymptotic",
    "hardy_z",
    "ZETA_POLE_GUARD",
]

# Contours and evaluations keep this distance from the pole at s = 1.
ZETA_POLE_GUARD = 1e-3

_EM_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,  # B_26, used only for the error estimate
)
_EM_K = 12
_EM_COEF = tuple(b / math.factorial(2 * k) for k, b in enumerate(_EM_BERNOULLI, start=1))

_MACH_EPS = 2.220446049250313e-16

_LOG_N = np.log(np.arange(1, 65))


def _log_table(n: int) -> np.ndarray:
    """log(1..n), grown on demand (idempotent, safe under races)."""
    global _LOG_N
    if n > _LOG_N.size:
        size = 1 << max(7, (n - 1).bit_length())
        _LOG_N = np.log(np.arange(1, size + 1))
    return _LOG_N


@dataclass(frozen=True)
class ZetaEvaluation:
    """A function value together with its estimated absolute error."""

    value: complex
    est_abs_err: float


def _main_sum_length(s: complex) -> int:
    return max(math.ceil(abs(s.imag) / 2.0) + 10, 20)


def _rounding_noise(s: complex, n: int) -> float:
    # Phase rounding in exp(-s log n) dominates for large |Im s|; the
    # N^{max(0,-sigma)} factor covers term growth left of sigma = 0.
    growth = float(n) ** max(0.0, -s.real)
    return _MACH_EPS * (1.0 + 0.05 * abs(s.imag) * math.log(n + 2.0) * math.sqrt(n) * growth)


def _smooth_tail(s: complex, n: int, want_derivative: bool):
    """-N^-s/2 plus the Bernoulli corrections (everything of the
    Euler-Maclaurin boundary except the N^(1-s)/(s-1) pole term).

    Returns (tail, d_tail, err_bound).  Terms are assembled as
    N^(1-s) * prod((s+j)/N) so nothing overflows even at |s| ~ 1e4.
    """
    logn = math.log(n)
    n_pow = cmath.exp((1.0 - s) * logn)  # N^(1-s)
    inv_n = 1.0 / n

    poch = n_pow * inv_n  # N^-s so far; grows into N^(1-s) (s)_{2k-1} / N^{2k}
    dpoch = -logn * poch
    tail = -0.5 * poch
    d_tail = 0.5 * logn * poch
    m = 0
    for k in range(1, _EM_K + 1):
        while m < 2 * k - 1:
            f = (s + m) * inv_n
            dpoch = dpoch * f + poch * inv_n
            poch = poch * f
            m += 1
        tail += _EM_COEF[k - 1] * poch
        d_tail += _EM_COEF[k - 1] * dpoch

    # First omitted term, classical remainder factor.
    nxt = poch
    while m < 2 * _EM_K + 1:
        nxt = nxt * ((s + m) * inv_n)
        m += 1
    err = abs(_EM_COEF[_EM_K] * nxt) * abs(s + 2 * _EM_K + 1) / (s.real + 2 * _EM_K + 1)
    if want_derivative:
        err *= logn + 2.0
    return tail, d_tail, err


def _choose_cut(s: complex, p: EvalParams, want_derivative: bool):
    """Pick the main-sum length so that truncation + rounding fit the
    error budget, or raise NonConvergenceError."""
    n = _main_sum_length(s)
    while True:
        noise = _rounding_noise(s, n)
        if noise > p.target_eps:
            raise NonConvergenceError(
                f"double precision cannot reach target_eps={p.target_eps} at s={s!r}"
            )
        tail, d_tail, err = _smooth_tail(s, n, want_derivative)
        if err + noise <= p.target_eps:
            return n, tail, d_tail, err + noise
        if 2 * n > p.max_series_terms:
            raise NonConvergenceError(
                f"Euler-Maclaurin needs more than max_series_terms={p.max_series_terms} at s={s!r}"
            )
        n *= 2


def _em_eval(s: complex, p: EvalParams, want_derivative: bool) -> ZetaEvaluation:
    s = _require_finite(s, "zeta argument")
    if abs(s - 1.0) < ZETA_POLE_GUARD:
        raise ZetaPoleError(f"s={s!r} is inside the pole guard disc around 1")

    n, tail, d_tail, est = _choose_cut(s, p, want_derivative)
    logn = math.log(n)
    n_pow = cmath.exp((1.0 - s) * logn)
    sm1 = s - 1.0
    logs = _log_table(n)[:n]
    terms = np.exp(-s * logs)
    if want_derivative:
        value = complex(-(terms * logs).sum()) + d_tail - logn * n_pow / sm1 - n_pow / (sm1 * sm1)
    else:
        value = complex(terms.sum()) + tail + n_pow / sm1
    return ZetaEvaluation(value=value, est_abs_err=est)


def zeta(s: complex, p: EvalParams = DEFAULT_PARAMS) -> ZetaEvaluation:
    """zeta(s) by Euler-Maclaurin summation.

    Intended domain is the working strip -1 <= Re s <= 2, |Im s| <= 1e4;
    raises ZetaPoleError inside the guard disc around s = 1.
    """
    return _em_eval(s, p, want_derivative=False)


def zeta_prime(s: complex, p: EvalParams = DEFAULT_PARAMS) -> ZetaEvaluation:
    """zeta'(s) by term-wise differentiated Euler-Maclaurin summation."""
    return _em_eval(s, p, want_derivative=True)


def _zeta_times_s_minus_1(s: complex, p: EvalParams) -> complex:
    """(s-1) * zeta(s), pole-free: with the 1/(s-1) boundary term
    multiplied out the Euler-Maclaurin formula is analytic at s = 1."""
    s = _require_finite(s, "zeta argument")
    n, tail, _, _ = _choose_cut(s, p, want_derivative=False)
    logs = _log_table(n)[:n]
    main = complex(np.exp(-s * logs).sum())
    n_pow = cmath.exp((1.0 - s) * math.log(n))
    return (s - 1.0) * (main + tail) + n_pow


def xi(s: complex, p: EvalParams = DEFAULT_PARAMS) -> complex:
    """Completed zeta: xi(s) = 1/2 s(s-1) pi^(-s/2) Gamma(s/2) zeta(s).

    Evaluated as pi^(-s/2) * Gamma(s/2 + 1) * [(s-1) zeta(s)], which is
    entire: s Gamma(s/2)/2 = Gamma(s/2 + 1) absorbs the Gamma pole at 0
    and the pole-free (s-1) zeta(s) absorbs the zeta pole at 1.
    """
    s = _require_finite(s, "xi argument")
    gamma_factor = cmath.exp(complex_log_gamma(0.5 * s + 1.0) - 0.5 * s * math.log(math.pi))
    return gamma_factor * _zeta_times_s_minus_1(s, p)


def theta_exact(t: float) -> float:
    """Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) log pi."""
    if not (t > 0.0 and math.isfinite(t)):
        raise ValueError("theta_exact requires t > 0")
    return complex_log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * math.log(math.pi)


def theta_asymptotic(t: float) -> float:
    """Five-term large-t expansion of theta:

        t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)

    Only these displayed terms are evaluated; the next correction is
    O(t^-5), so agreement with theta_exact is ~1e-10 for t >= 20.
    """
    if not (t >= 10.0 and math.isfinite(t)):
        raise ValueError("theta_asymptotic requires t >= 10")
    return (
        0.5 * t * math.log(t / (2.0 * math.pi))
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def hardy_z(t: float, p: EvalParams = DEFAULT_PARAMS) -> float:
    """Hardy's Z: the rotation exp(i theta(t)) zeta(1/2 + it), real for
    real t, so its sign changes are exactly the critical-line zeros."""
    if not (t > 0.0 and math.isfinite(t)):
        raise ValueError("hardy_z requires t > 0")
    rotated = cmath.exp(1j * theta_exact(t)) * zeta(complex(0.5, t), p).value
    if abs(rotated.imag) > 1e-8:
        raise ConsistencyError(
            f"rotated zeta product at t={t} has imaginary residue {rotated.imag:.3e}"
        )
    return rotated.real
