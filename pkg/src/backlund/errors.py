"""Exception types shared by all numerical layers."""


class BacklundError(Exception):
    """Base class for every error raised by this package."""


class GammaPoleError(BacklundError):
    """Argument of log-gamma lies on (or too close to) a pole of Gamma."""


class ZetaPoleError(BacklundError):
    """Zeta requested inside the guard disc around its pole at s = 1."""


class NonConvergenceError(BacklundError):
    """A series or refinement could not reach the requested accuracy
    within the configured term budget."""


class ZeroOnPathError(BacklundError):
    """|f| dropped below the zero-on-path threshold while following a
    contour; the contour must be moved (pick a different window)."""


class BudgetExhaustedError(BacklundError):
    """Adaptive step halving hit max_refine_depth without stabilising."""


class QuantizationError(BacklundError):
    """A quantity that must be an integer landed too far from one."""


class PoleGuardError(BacklundError):
    """A contour would pass through the guard disc around s = 1."""


class LadderExhaustedError(BacklundError):
    """No (delta, epsilon) candidate produced a zero-free contour; the
    window cannot be verified at this height."""


class ConsistencyError(BacklundError):
    """An internal cross-check failed (e.g. the rotated zeta product on
    the critical line came out with a non-negligible imaginary part)."""
