"""Closed-form quantum-correlation dynamics of two free particles coupled to
high-temperature Markovian environments, either one bath each or one shared
bath, starting from a two-mode squeezed packet.

The library evaluates covariance matrices, reduced-state coherence and
entropy, EPR witnesses and logarithmic negativity in dimensionless units,
verifies every closed form against independent numerical routes, and drives
parameter sweeps plus preset figures from the command line.
"""

from .bath import BathParams, Regime, recommended_t_max
from .covariance import (CovarianceMatrix, SymplecticReport, covariance,
                         delta_det_common, log_negativity, nu_min,
                         symplectic_analysis)
from .epr import EprReport, epr_measures
from .errors import (DivergenceError, EventSearchError, InvalidParamsError,
                     NumericalDomainError, OverflowDomainError, QuadratureError,
                     StabilityBoundError)
from .events import (EventReport, find_coherence_crossing, find_dark_period,
                     find_death_time)
from .numerics import (MOMENT_LABELS, QuadratureSpec, adaptive_simpson,
                       covariance_from_moments, integrate_linear,
                       integrate_moments, moment_generator, quad_l1_coherence,
                       quad_purity, quad_trace, schrodinger_density,
                       schrodinger_partial_trace)
from .reduced import (CoherenceReport, EntropyReport, ReducedGaussian,
                      coherence_length, l1_coherence, length_from_state,
                      purity_entropy, reduced_from_moments, reduced_gaussian)
from .sweep import (FIGURE_PRESETS, QUANTITIES, SweepSpec, column_label,
                    evaluate_quantity, run_figure, run_sweep)

__all__ = [
    "BathParams", "Regime", "recommended_t_max",
    "CovarianceMatrix", "SymplecticReport", "covariance", "symplectic_analysis",
    "log_negativity", "nu_min", "delta_det_common",
    "ReducedGaussian", "CoherenceReport", "EntropyReport", "reduced_gaussian",
    "reduced_from_moments", "l1_coherence", "coherence_length",
    "length_from_state", "purity_entropy",
    "EprReport", "epr_measures",
    "QuadratureSpec", "MOMENT_LABELS", "moment_generator", "integrate_linear",
    "integrate_moments", "covariance_from_moments", "adaptive_simpson",
    "quad_l1_coherence", "quad_purity", "quad_trace",
    "schrodinger_density", "schrodinger_partial_trace",
    "EventReport", "find_death_time", "find_dark_period", "find_coherence_crossing",
    "SweepSpec", "run_sweep", "run_figure", "FIGURE_PRESETS", "QUANTITIES",
    "column_label", "evaluate_quantity",
    "InvalidParamsError", "StabilityBoundError", "OverflowDomainError",
    "NumericalDomainError", "QuadratureError", "DivergenceError", "EventSearchError",
]

__version__ = "0.1.0"
