"""Width measures of gamma-shaped functions.

A gamma-shaped function is K * (x+s)**(a-1) * exp(-(x+s)/b): the gamma
probability density up to an amplitude K and a domain shift s. For shape
a >= 1 such a peak has its maximum at (a-1)*b - s, and the two abscissae
where it falls to a fraction y of that maximum have a closed form in the
two real branches of the Lambert W function. This module evaluates the
density, its two-valued inverse, the full width at any proportion of the
maximum (FWHM at y = 1/2), the octave bandwidth, and the normal-curve
approximation to the FWHM together with its overshoot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lambertw import (
    _LOG_FORM_CUT,
    _wm1_from_log,
    Branch,
    branch_difference_from_log_ratio,
    w0,
    wm1,
)

__all__ = [
    "ShapeScale",
    "GammaShapeSpec",
    "WidthResult",
    "OctaveResult",
    "log_gamma",
    "gamma_pdf",
    "gamma_shaped",
    "mode",
    "inverse_pdf",
    "fwym",
    "fwhm",
    "fwym_shifted",
    "gaussian_fwhm_approx",
    "approx_proportional_error",
    "octave_bandwidth",
]

_INV_E = 1.0 / math.e

# FWHM of a unit-variance normal curve.
_GAUSS_FWHM_UNIT_SIGMA = 2.0 * math.sqrt(2.0 * math.log(2.0))

# How far a requested density level may exceed the computed maximum before
# it is rejected; callers often pass y*p_max recomputed with rounding.
_PMAX_SLACK = 1e-12


@dataclass(frozen=True)
class ShapeScale:
    """Shape a and scale b of a gamma density; widths need a >= 1, b > 0."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a >= 1.0):
            raise ValueError(
                f"shape parameter a must be >= 1 (widths are undefined below"
                f" that: no interior maximum), got {self.a!r}"
            )
        if not (math.isfinite(self.b) and self.b > 0.0):
            raise ValueError(f"scale parameter b must be positive, got {self.b!r}")


@dataclass(frozen=True)
class GammaShapeSpec:
    """A gamma-shaped function: parameters plus amplitude K and shift s."""

    params: ShapeScale
    K: float = 1.0
    s: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.K) and self.K > 0.0):
            raise ValueError(f"amplitude K must be positive, got {self.K!r}")
        if not math.isfinite(self.s):
            raise ValueError(f"domain shift s must be finite, got {self.s!r}")


@dataclass(frozen=True)
class WidthResult:
    """Crossing abscissae and width of a peak cut at proportion y of its max.

    The width field is computed through the cancellation-free branch
    difference and is the authoritative value; x_high - x_low agrees with
    it to ~1e-9 relative except very close to y = 1, where the individual
    crossings (but not the width) lose precision.
    """

    x_low: float
    x_high: float
    width: float
    mode: float
    y: float

    def __post_init__(self) -> None:
        if not (self.x_low <= self.mode <= self.x_high):
            raise ValueError("crossings must straddle the mode")
        if not self.width >= 0.0:
            raise ValueError("width must be nonnegative")


@dataclass(frozen=True)
class OctaveResult:
    """High/low crossing abscissae and their ratio in log-base-2 octaves."""

    high: float
    low: float
    octaves: float

    def __post_init__(self) -> None:
        if not (self.high >= self.low >= 0.0):
            raise ValueError("crossings must satisfy high >= low >= 0")
        if not self.octaves >= 0.0:
            raise ValueError("octave count must be nonnegative")


def _check_proportion(y: float) -> None:
    if not (0.0 < y <= 1.0):
        raise ValueError(f"proportion of maximum must lie in (0, 1], got {y!r}")


def log_gamma(a: float) -> float:
    """Natural log of the gamma function for a > 0."""
    if not (math.isfinite(a) and a > 0.0):
        raise ValueError(f"log_gamma needs a > 0, got {a!r}")
    return math.lgamma(a)


def mode(params: ShapeScale) -> float:
    """Location of the density maximum, (a-1)*b; 0 for the exponential case."""
    return (params.a - 1.0) * params.b


def gamma_pdf(x: float, params: ShapeScale) -> float:
    """Gamma probability density at x >= 0, evaluated in log space."""
    if not (math.isfinite(x) and x >= 0.0):
        raise ValueError(f"gamma_pdf needs finite x >= 0, got {x!r}")
    a, b = params.a, params.b
    if x == 0.0:
        return 1.0 / b if a == 1.0 else 0.0
    return math.exp((a - 1.0) * math.log(x) - x / b - math.lgamma(a) - a * math.log(b))


def gamma_shaped(x: float, spec: GammaShapeSpec) -> float:
    """Gamma-shaped function K * (x+s)**(a-1) * exp(-(x+s)/b) for x+s >= 0."""
    xp = x + spec.s
    if not (math.isfinite(xp) and xp >= 0.0):
        raise ValueError(f"gamma_shaped needs x + s >= 0, got x+s={xp!r}")
    a, b = spec.params.a, spec.params.b
    if xp == 0.0:
        return spec.K if a == 1.0 else 0.0
    return spec.K * math.exp((a - 1.0) * math.log(xp) - xp / b)


def inverse_pdf(p: float, params: ShapeScale, branch: Branch) -> float:
    """Abscissa where the gamma density equals p, on the requested side.

    The density is two-to-one away from its maximum, so the inverse is a
    two-valued relation: the principal branch returns the abscissa at or
    below the mode, the secondary branch the one at or above it. Needs
    a > 1 (at a = 1 the density is one-to-one) and 0 < p <= p_max, where
    p_max is the density value at the mode; p may exceed p_max by at most
    1e-12 relative, which is clamped to the mode.
    """
    if not isinstance(branch, Branch):
        raise TypeError(f"branch must be a Branch member, got {branch!r}")
    a, b = params.a, params.b
    if a <= 1.0:
        raise ValueError("inverse_pdf needs a > 1; the density is one-sided at a = 1")
    if not (math.isfinite(p) and p > 0.0):
        raise ValueError(f"density level must be positive, got {p!r}")
    m = (a - 1.0) * b
    p_max = gamma_pdf(m, params)
    if p > p_max * (1.0 + _PMAX_SLACK):
        raise ValueError(
            f"density level {p!r} exceeds the maximum {p_max!r} of the density"
        )
    # Argument of W, assembled in log space so that huge a and tiny p
    # neither overflow nor lose the lead digits.
    t = (math.log(p) + math.lgamma(a) + a * math.log(b)) / (a - 1.0) - math.log(m)
    if branch is Branch.SECONDARY and t <= _LOG_FORM_CUT:
        return -m * _wm1_from_log(t)
    z = -math.exp(t)
    if z < -_INV_E:
        z = -_INV_E
    w = w0(z) if branch is Branch.PRINCIPAL else wm1(z)
    return -m * w + 0.0  # + 0.0 normalizes the -0.0 arising at tiny levels


def _crossing_w_values(r: float) -> tuple[float, float]:
    # Branch values (w0, wm1) at z = -exp(r - 1), falling back to the
    # log-form solve when z underflows (extreme proportions or a -> 1).
    log_z = r - 1.0
    z = -math.exp(log_z)
    lo = w0(z)
    hi = _wm1_from_log(log_z) if log_z <= _LOG_FORM_CUT else wm1(z)
    return lo, hi


def fwym(params: ShapeScale, y: float) -> WidthResult:
    """Full width of the gamma density at proportion y of its maximum.

    For a > 1 the two crossings are -(a-1)*b*W(z) on the two real branches
    with z = -exp(ln(y)/(a-1) - 1); the width itself goes through the
    cancellation-free branch difference. a = 1 is the exponential special
    case with x_low = 0 and width -b*ln(y); y = 1 returns the degenerate
    zero-width result at the mode.
    """
    _check_proportion(y)
    a, b = params.a, params.b
    peak = (a - 1.0) * b
    if y == 1.0:
        return WidthResult(x_low=peak, x_high=peak, width=0.0, mode=peak, y=y)
    if a == 1.0:
        span = -b * math.log(y)
        return WidthResult(x_low=0.0, x_high=span, width=span, mode=0.0, y=y)
    r = math.log(y) / (a - 1.0)
    width = ((a - 1.0) * branch_difference_from_log_ratio(r)) * b
    w_lo, w_hi = _crossing_w_values(r)
    # + 0.0 normalizes the -0.0 left crossing arising at extreme proportions
    return WidthResult(
        x_low=-peak * w_lo + 0.0, x_high=-peak * w_hi, width=width, mode=peak, y=y
    )


def fwhm(params: ShapeScale) -> WidthResult:
    """Full width at half maximum: fwym at y = 1/2."""
    return fwym(params, 0.5)


def fwym_shifted(spec: GammaShapeSpec, y: float) -> WidthResult:
    """fwym of a scaled and shifted gamma shape.

    The amplitude K cancels out of any proportion-of-maximum cut and the
    shift s translates the crossings without changing their distance, so
    the width is bit-identical to the unshifted result.
    """
    base = fwym(spec.params, y)
    s = spec.s
    return WidthResult(
        x_low=base.x_low - s,
        x_high=base.x_high - s,
        width=base.width,
        mode=base.mode - s,
        y=y,
    )


def gaussian_fwhm_approx(params: ShapeScale) -> float:
    """Normal-curve estimate of the FWHM: 2*sqrt(2 ln 2) * b * sqrt(a).

    A gamma variate with integer shape is a sum of a independent
    exponentials of mean b, so for large a it is approximately normal
    with variance a*b**2; this is the FWHM of that normal curve.
    """
    return _GAUSS_FWHM_UNIT_SIGMA * params.b * math.sqrt(params.a)


def approx_proportional_error(params: ShapeScale) -> float:
    """By what fraction the normal-curve FWHM estimate overshoots the truth.

    Always positive, shrinking as the shape parameter grows, and exactly
    independent of the scale (it cancels in the ratio, so the value is
    computed at unit scale).
    """
    unit = ShapeScale(params.a, 1.0)
    return gaussian_fwhm_approx(unit) / fwhm(unit).width - 1.0


def octave_bandwidth(params: ShapeScale, y: float) -> OctaveResult:
    """Crossing ratio in octaves: log2(high/low) at proportion y of the max.

    Needs a > 1 (the low crossing sits at 0 when a = 1, so the ratio is
    undefined there). The octave count depends only on the shape and the
    proportion, not on the scale. y = 1 is accepted as the degenerate
    closure with both crossings at the mode and 0 octaves.
    """
    _check_proportion(y)
    a, b = params.a, params.b
    if a <= 1.0:
        raise ValueError("octave bandwidth needs a > 1; the low crossing is 0 at a = 1")
    peak = (a - 1.0) * b
    if y == 1.0:
        return OctaveResult(high=peak, low=peak, octaves=0.0)
    r = math.log(y) / (a - 1.0)
    w_lo, w_hi = _crossing_w_values(r)
    return OctaveResult(
        high=-peak * w_hi, low=-peak * w_lo + 0.0, octaves=math.log2(w_hi / w_lo)
    )
