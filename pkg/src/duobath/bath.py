"""Model parameters for two free particles in high-temperature Markovian baths.

Everything is dimensionless: lengths in units of the initial packet width,
momenta in units of hbar over that width, temperature absorbs k_B.  With
this convention the vacuum quadrature variance is 1/2 and the momentum
diffusion coefficient is tied to the bath by D = 2*gamma*T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidParamsError


class Regime(Enum):
    """Environment coupling scenario.

    SCHRODINGER evolves the pair unitarily (no bath), DISTINCT couples each
    particle to its own bath, COMMON couples both to one shared bath.
    """

    SCHRODINGER = "schrodinger"
    DISTINCT = "distinct"
    COMMON = "common"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BathParams:
    """Damping rate and temperature of one bath (dimensionless).

    The diffusion coefficient is derived, never set independently.
    """

    gamma: float
    temperature: float

    def __post_init__(self):
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise InvalidParamsError(f"gamma must be finite and > 0, got {self.gamma}")
        if not (math.isfinite(self.temperature) and self.temperature > 0):
            raise InvalidParamsError(
                f"temperature must be finite and > 0, got {self.temperature}"
            )

    @property
    def diffusion(self) -> float:
        """Momentum diffusion coefficient, always 2*gamma*temperature."""
        return 2.0 * self.gamma * self.temperature


def recommended_t_max(gamma: float) -> float:
    """Largest sweep time the CLI accepts for a given damping rate.

    The closed forms are evaluated with every exponential decaying, so they
    stay finite well beyond this point; the bound marks where the raw
    (unfactored) expressions, which carry exp(8*gamma*t), would exceed the
    comfortable double range.  Kept as the advertised limit for sweeps.
    """
    return 60.0 / (8.0 * gamma)


def check_squeeze(squeeze: float) -> float:
    """Validate the initial squeezing parameter (any finite real)."""
    s = float(squeeze)
    if not math.isfinite(s):
        raise InvalidParamsError(f"squeeze must be finite, got {squeeze}")
    return s


def check_time(t, *, nonnegative: bool = True):
    """Validate a scalar or array of times; returns the validated value."""
    arr = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InvalidParamsError("time values must be finite")
    if nonnegative and np.any(arr < 0):
        raise InvalidParamsError("time values must be >= 0")
    return t if np.ndim(t) else float(arr)


def check_regime_bath(regime: Regime, bath: BathParams | None) -> None:
    """Enforce that environment regimes carry a bath and the isolated one does not."""
    if regime is Regime.SCHRODINGER:
        if bath is not None:
            raise InvalidParamsError("the isolated regime takes no bath parameters")
    elif bath is None:
        raise InvalidParamsError(f"regime {regime} requires bath parameters")
