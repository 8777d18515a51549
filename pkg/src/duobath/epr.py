"""EPR-type correlation witnesses built from the relative-position and
total-momentum variances.

xi averages the two variances (xi < 1 flags nonlocal correlations), eta is
their product (eta < 1 witnesses entanglement, eta < 1/4 EPR correlations).
Both thresholds are applied strictly.  Variances use symmetrized operator
ordering throughout, matching the covariance module.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bath import BathParams, Regime, check_regime_bath, check_squeeze, check_time
from .errors import OverflowDomainError


@dataclass(frozen=True)
class EprReport:
    xi: float  # (var(x1-x2) + var(p1+p2)) / 2
    eta: float  # var(x1-x2) * var(p1+p2)
    is_nonlocal: bool  # xi < 1
    mgvt_entangled: bool  # eta < 1
    epr_correlated: bool  # eta < 1/4


def _schrodinger(s, t):
    e2s, e2sm = np.exp(2 * s), np.exp(-2 * s)
    t2 = t * t
    xi = e2sm + 0.5 * e2s * t2
    eta = e2sm * e2sm + t2
    return xi, eta


def _distinct(s, g, temp, t):
    em2 = -np.expm1(-2 * g * t)
    big_e2 = 1.0 - em2
    big_e4 = big_e2 * big_e2
    em4 = em2 * (1.0 + big_e2)
    e2s, e2sm = np.exp(2 * s), np.exp(-2 * s)
    e4sm = e2sm * e2sm
    gg = g * g
    xi = ((4 * gg * e2sm * (1 + big_e4) + e2s * em2 * em2) / (8 * gg)
          + (4 * gg * em4 + 4 * g * t - em2 * (2 + em2)) * temp / (4 * gg))
    eta = (e4sm * big_e4
           + big_e4 * em2 * em2 / (4 * gg)
           + e2sm * (e2s * e2s * em2 ** 3 * (1 + big_e2)
                     + 4 * gg * em4 + 4 * g * t * big_e4
                     - big_e4 * em2 * (2 + em2)) * temp / (2 * gg)
           + em4 * (4 * g * t - em2 * (2 + em2)) * temp * temp / gg)
    return xi, eta


def _common(s, g, temp, t):
    em8 = -np.expm1(-8 * g * t)
    big_e8 = 1.0 - em8
    e2s, e2sm = np.exp(2 * s), np.exp(-2 * s)
    t2 = t * t
    xi = 0.5 * (e2s * t2 + e2sm + e2sm * big_e8) + em8 * temp
    eta = ((e2s * e2s * t2 + 1) * e2sm * e2sm * big_e8
           + 2.0 * (e2s * t2 + e2sm) * em8 * temp)
    return xi, eta


def epr_measures(regime: Regime, squeeze: float, t, bath: BathParams | None = None) -> EprReport:
    """Closed-form xi(t) and eta(t) with witness flags for one regime.

    Must agree with the variance combinations assembled from the covariance
    matrix (var(x1-x2) = 2<x1^2> - 2<x1x2>, var(p1+p2) = 2<p1^2> + 2<p1p2>).
    """
    s = check_squeeze(squeeze)
    t = check_time(t)
    check_regime_bath(regime, bath)
    if regime is Regime.SCHRODINGER:
        xi, eta = _schrodinger(s, t)
    elif regime is Regime.DISTINCT:
        xi, eta = _distinct(s, bath.gamma, bath.temperature, t)
    else:
        xi, eta = _common(s, bath.gamma, bath.temperature, t)
    if not (np.all(np.isfinite(np.asarray(xi))) and np.all(np.isfinite(np.asarray(eta)))):
        raise OverflowDomainError("EPR measures left the representable range")
    if np.ndim(xi) == 0:
        xi, eta = float(xi), float(eta)
        return EprReport(xi=xi, eta=eta, is_nonlocal=xi < 1.0,
                         mgvt_entangled=eta < 1.0, epr_correlated=eta < 0.25)
    return EprReport(xi=xi, eta=eta, is_nonlocal=xi < 1.0,
                     mgvt_entangled=eta < 1.0, epr_correlated=eta < 0.25)
