"""Single-particle reduced Gaussian states and the local quantities they carry:
l1-norm coherence, coherence length, purity and linear entropy.

The reduced state of either particle is written over the off-diagonal and
diagonal coordinates r = x - y, R = (x + y)/2 as

    rho_A(r, R) = norm * exp[(cRR * R^2 + cRr * R*r + crr * r^2) / denom]

with cRR, crr, denom real and cRr purely imaginary (hermiticity).  The stored
coefficient set is jointly rescaled by the dominant decaying exponential
(exp(-4*gamma*t) for separate baths, exp(-8*gamma*t) for the shared bath);
the state itself is unchanged since only ratios against denom enter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath import BathParams, Regime, check_regime_bath, check_squeeze, check_time
from .errors import InvalidParamsError, NumericalDomainError, OverflowDomainError

_TWO_SQRT_2PI = 2.0 * math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class ReducedGaussian:
    """Normalization and exponent coefficients of one particle's reduced state."""

    norm: float
    coeff_R2: float
    coeff_cross: complex  # purely imaginary
    coeff_r2: float
    denom: float

    def __post_init__(self):
        vals = (self.norm, self.coeff_R2, self.coeff_r2, self.denom,
                self.coeff_cross.real, self.coeff_cross.imag)
        if not all(math.isfinite(v) for v in vals):
            raise OverflowDomainError("reduced-state coefficients left the representable range")
        if self.norm <= 0 or self.denom <= 0:
            raise NumericalDomainError("reduced state needs norm > 0 and denom > 0")
        if self.coeff_R2 >= 0 or self.coeff_r2 >= 0:
            raise NumericalDomainError("reduced state is not normalizable (non-negative exponent)")

    def value(self, x, y):
        """Evaluate rho_A(x, y); accepts scalars or arrays."""
        r = np.asarray(x) - np.asarray(y)
        big_r = 0.5 * (np.asarray(x) + np.asarray(y))
        expo = (self.coeff_R2 * big_r * big_r + self.coeff_cross * big_r * r
                + self.coeff_r2 * r * r) / self.denom
        return self.norm * np.exp(expo)

    def moments(self):
        """Second moments (a, b, c) = (<x^2>, <xp>, <p^2>) encoded by the state."""
        a = -self.denom / (2.0 * self.coeff_R2)
        b = -self.coeff_cross.imag / (2.0 * self.coeff_R2)
        delta = self.coeff_r2 / self.coeff_R2
        c = (delta + b * b) / a
        return a, b, c

    def envelope_widths(self):
        """Standard deviations (sigma_R, sigma_r) of |rho_A| along R and r."""
        var_big_r = -self.denom / (2.0 * self.coeff_R2)
        var_r = -self.denom / (2.0 * self.coeff_r2)
        return math.sqrt(var_big_r), math.sqrt(var_r)


@dataclass(frozen=True)
class CoherenceReport:
    """l1-norm coherence of the reduced state and the derived width."""

    c_l1: float
    coherence_length: float  # width of rho_A along r; c_l1 / (2 sqrt(2 pi))
    stationary: float  # regime limit; math.inf for the isolated pair


@dataclass(frozen=True)
class EntropyReport:
    purity: float
    linear_entropy: float
    short_time_slope: float  # dS/dt at t=0 divided by gamma


def reduced_from_moments(a, b, c) -> ReducedGaussian:
    """Reduced Gaussian fixed by single-particle second moments (a, b, c).

    Works for any regime; used for the isolated pair and as the cross-route
    check of the transcribed coefficients.
    """
    a = float(a)
    delta = a * float(c) - float(b) ** 2
    if a <= 0 or delta <= 0:
        raise NumericalDomainError("moments do not describe a physical Gaussian state")
    return ReducedGaussian(
        norm=1.0 / math.sqrt(2.0 * math.pi * a),
        coeff_R2=-1.0,
        coeff_cross=2j * float(b),
        coeff_r2=-delta,
        denom=2.0 * a,
    )


# ---------------------------------------------------------------------------
# separate baths: coefficient set, common exponential factor exp(-4 g t) removed
# ---------------------------------------------------------------------------

def _distinct_pieces(s, g, temp, t):
    em2 = -np.expm1(-2 * g * t)
    big_e2 = 1.0 - em2
    big_e4 = big_e2 * big_e2
    em4 = em2 * (1.0 + big_e2)
    return em2, big_e2, big_e4, em4


def _g_distinct(s, g, temp, t):
    """Radicand shared by the separate-bath purity, coherence denominator and
    (up to sign) the r^2 coefficient.  The temperature-quadratic piece is
    required for trace/purity consistency."""
    em2, big_e2, big_e4, em4 = _distinct_pieces(s, g, temp, t)
    e2sm, e4sm = np.exp(-2 * s), np.exp(-4 * s)
    lin = 4 * g * g * em4 + 4 * g * t * big_e4 + em2 * (3 * em2 - 2)
    quad = 16.0 * (g * t * em4 - em2 * em2)
    return (g * g * (1 + e4sm) ** 2 * big_e4
            + lin * (e2sm + e2sm * e4sm) * temp
            + quad * e4sm * temp * temp)


def _f_distinct(s, g, temp, t):
    em2, _, _, _ = _distinct_pieces(s, g, temp, t)
    e2sm, e4sm = np.exp(-2 * s), np.exp(-4 * s)
    spread = 4 * g * g + em2 * em2
    drive = 16 * g * t - 4 * em2 * (2 + em2)
    return 2 * np.pi * (spread * (e2sm + e2sm * e4sm) + drive * e4sm * temp)


def _distinct_reduced(s, g, temp, t) -> ReducedGaussian:
    em2, big_e2, _, _ = _distinct_pieces(s, g, temp, t)
    e2sm, e4sm = math.exp(-2 * s), math.exp(-4 * s)
    spread = 4 * g * g + em2 * em2
    drive = 16 * g * t - 4 * em2 * (2 + em2)
    d02 = -16 * g * g * e4sm
    d11 = 1j * (4 * g * big_e2 * em2 * (e2sm + e2sm * e4sm)
                + 16 * g * em2 * em2 * e4sm * temp)
    d20 = -_g_distinct(s, g, temp, t)
    d_d = 2 * spread * (e2sm + e2sm * e4sm) + 2 * drive * e4sm * temp
    norm_rad = math.pi * (spread * (1 + e4sm) + drive * e2sm * temp)
    norm = 2 * math.sqrt(2) * g * math.exp(-s) / math.sqrt(norm_rad)
    return ReducedGaussian(norm=norm, coeff_R2=d02, coeff_cross=d11,
                           coeff_r2=float(d20), denom=d_d)


# ---------------------------------------------------------------------------
# shared bath: coefficient set, common exponential factor exp(-8 g t) removed
# ---------------------------------------------------------------------------

def _common_pieces(s, g, temp, t):
    em4 = -np.expm1(-4 * g * t)
    big_e4 = 1.0 - em4
    big_e8 = big_e4 * big_e4
    em8 = em4 * (1.0 + big_e4)
    return em4, big_e4, big_e8, em8


def _g_common(s, g, temp, t):
    """Shared-bath radicand (purity, coherence denominator, -crr)."""
    em4, big_e4, big_e8, em8 = _common_pieces(s, g, temp, t)
    e2sm = np.exp(-2 * s)
    e4sm = e2sm * e2sm
    gg = g * g
    t2 = t * t
    free = 16 * gg * ((1 + t2) * big_e8 + 1) + em4 * (em4 - 8 * g * t * big_e4)
    lin_2s = 32 * gg * (t2 + 1) * em8 + 8 * (4 * g * t + 1) * big_e4 - 2 * (8 * g * t + 1) * big_e8 - 6
    lin_6s = 32 * gg * em8 + 16 * g * t * big_e8 - 2 * em4 * (3 * big_e4 - 1)
    quad = 16 * em4 * (2 * g * t - 1 + (2 * g * t + 1) * big_e4)
    return (16 * gg + free * e4sm + 16 * gg * big_e8 * e4sm * e4sm
            + (lin_2s * e2sm + lin_6s * e2sm * e4sm) * temp
            + quad * e4sm * temp * temp)


def _f_common(s, g, temp, t):
    em4, _, _, _ = _common_pieces(s, g, temp, t)
    e2sm = np.exp(-2 * s)
    e4sm = e2sm * e2sm
    gg = g * g
    return (128 * np.pi * (t * t + 1) * gg * e2sm
            + 8 * np.pi * (16 * gg + em4 * em4) * e2sm * e4sm
            + 8 * np.pi * (16 * g * t - 2 * em4 * (2 + em4)) * e4sm * temp)


def _common_reduced(s, g, temp, t) -> ReducedGaussian:
    em4, big_e4, _, _ = _common_pieces(s, g, temp, t)
    e2sm, e4sm = math.exp(-2 * s), math.exp(-4 * s)
    gg = g * g
    t2 = t * t
    c02 = -256 * gg * e4sm
    c11 = 1j * (128 * gg * t * e2sm + 32 * g * big_e4 * em4 * e2sm * e4sm
                + 64 * g * em4 * em4 * e4sm * temp)
    c20 = -_g_common(s, g, temp, t)
    drive = 16 * g * t - 2 * em4 * (2 + em4)
    d_c = (128 * (t2 + 1) * gg * e2sm + 8 * (16 * gg + em4 * em4) * e2sm * e4sm
           + 8 * drive * e4sm * temp)
    norm_rad = math.pi * (16 * (t2 + 1) * gg + (16 * gg + em4 * em4) * e4sm
                          + drive * e2sm * temp)
    norm = 4 * math.sqrt(2) * g * math.exp(-s) / math.sqrt(norm_rad)
    return ReducedGaussian(norm=norm, coeff_R2=c02, coeff_cross=c11,
                           coeff_r2=float(c20), denom=d_c)


def reduced_gaussian(regime: Regime, squeeze: float, bath: BathParams, t: float) -> ReducedGaussian:
    """Closed-form reduced state of one particle for an environment regime.

    For the isolated pair build the state from its second moments instead:
    reduced_from_moments along with the covariance module.
    """
    s = check_squeeze(squeeze)
    t = check_time(t)
    if regime is Regime.SCHRODINGER:
        raise InvalidParamsError(
            "reduced_gaussian covers the environment regimes; use reduced_from_moments"
        )
    check_regime_bath(regime, bath)
    if regime is Regime.DISTINCT:
        return _distinct_reduced(s, bath.gamma, bath.temperature, float(t))
    return _common_reduced(s, bath.gamma, bath.temperature, float(t))


# ---------------------------------------------------------------------------
# derived local quantities
# ---------------------------------------------------------------------------

def l1_coherence(regime: Regime, squeeze: float, t, bath: BathParams | None = None) -> CoherenceReport:
    """l1-norm coherence of the reduced state, with its stationary limit.

    The stationary values are evaluated analytically, not by a large-t limit:
    sqrt(2 pi / T) for separate baths, sqrt(2) times that for the shared bath,
    unbounded (math.inf) for the isolated pair.
    """
    s = check_squeeze(squeeze)
    t = check_time(t)
    check_regime_bath(regime, bath)
    if regime is Regime.SCHRODINGER:
        c = 2.0 * np.sqrt(np.pi / np.cosh(2 * s)) * np.sqrt(1.0 + np.asarray(t, float) ** 2)
        stationary = math.inf
    else:
        g, temp = bath.gamma, bath.temperature
        if regime is Regime.DISTINCT:
            num, den = _f_distinct(s, g, temp, t), _g_distinct(s, g, temp, t)
            stationary = math.sqrt(2.0 * math.pi / temp)
        else:
            num, den = _f_common(s, g, temp, t), _g_common(s, g, temp, t)
            stationary = 2.0 * math.sqrt(math.pi / temp)
        ratio = num / den
        if np.any(np.asarray(ratio) < 0):
            raise NumericalDomainError("negative coherence ratio: transcription or overflow fault")
        c = np.sqrt(ratio)
    if not np.all(np.isfinite(np.asarray(c))):
        raise OverflowDomainError("coherence left the representable range")
    if np.ndim(c) == 0:
        c = float(c)
    return CoherenceReport(c_l1=c, coherence_length=c / _TWO_SQRT_2PI, stationary=stationary)


def coherence_length(report: CoherenceReport) -> float:
    """Width of the reduced state along the off-diagonal direction.

    Equal to 1/sqrt(-8 * crr / denom) of the matching ReducedGaussian; for the
    isolated non-squeezed pair this is just the packet width sigma_t.
    """
    return report.coherence_length


def length_from_state(state: ReducedGaussian) -> float:
    """Coherence length read directly off the exponent, 1/sqrt(-8 crr/denom)."""
    return 1.0 / math.sqrt(-8.0 * state.coeff_r2 / state.denom)


def purity_entropy(regime: Regime, squeeze: float, t, bath: BathParams | None = None) -> EntropyReport:
    """Purity and linear entropy of the reduced state, plus the initial slope.

    short_time_slope is the coefficient of gamma*t in the small-time expansion
    of S(t); the separate-bath entropy dips initially iff T < cosh(2s)/2,
    while the shared bath needs T < exp(-2s)/2 (never met at high temperature).
    """
    s = check_squeeze(squeeze)
    t = check_time(t)
    check_regime_bath(regime, bath)
    sech2s = 1.0 / math.cosh(2 * s)
    if regime is Regime.SCHRODINGER:
        purity = sech2s * np.ones_like(np.asarray(t, dtype=float))
        slope = 0.0
    elif regime is Regime.DISTINCT:
        g, temp = bath.gamma, bath.temperature
        purity = 2 * g * np.exp(-2 * s) / np.sqrt(_g_distinct(s, g, temp, t))
        slope = 2.0 * sech2s * (2.0 * sech2s * temp - 1.0)
    else:
        g, temp = bath.gamma, bath.temperature
        purity = 8 * g * np.exp(-2 * s) / np.sqrt(_g_common(s, g, temp, t))
        slope = 2.0 * sech2s * (1.0 - math.tanh(2 * s)) * (2.0 * math.exp(2 * s) * temp - 1.0)
    if not np.all(np.isfinite(np.asarray(purity))):
        raise OverflowDomainError("purity left the representable range")
    if np.any(np.asarray(purity) <= 0):
        raise NumericalDomainError("non-positive purity: transcription or overflow fault")
    if np.ndim(t) == 0:
        purity = float(purity)
        return EntropyReport(purity=purity, linear_entropy=1.0 - purity, short_time_slope=slope)
    return EntropyReport(purity=purity, linear_entropy=1.0 - purity, short_time_slope=slope)
