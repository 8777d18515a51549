"""Independent numerical verification paths.

Three routes that never touch the closed-form covariance or reduced-state
transcriptions:

* fixed-step RK4 integration of the ten second-moment ODEs read off the
  phase-space drift-diffusion generator,
* iterated adaptive Simpson quadrature of reduced-state integrals
  (l1 coherence, purity, trace),
* the exact isolated-pair density matrix with a numerical partial trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath import BathParams, Regime, check_squeeze, check_time
from .covariance import CovarianceMatrix, covariance
from .errors import DivergenceError, InvalidParamsError, QuadratureError
from .reduced import ReducedGaussian

MOMENT_LABELS = ("x1x1", "x1p1", "p1p1", "x1x2", "x1p2", "p1x2", "p1p2",
                 "x2x2", "x2p2", "p2p2")
_IDX = {name: i for i, name in enumerate(MOMENT_LABELS)}

_DIVERGENCE_BOUND = 1e12


# ---------------------------------------------------------------------------
# moment ODEs
# ---------------------------------------------------------------------------

def moment_generator(regime: Regime, bath: BathParams):
    """Generator (M, b) of the linear moment ODE dm/dt = M m + b.

    Damping relaxes every momentum-bearing moment, diffusion feeds the
    momentum variances at rate 2D, and the shared bath adds cross-damping
    between the particles plus a cross-diffusion drive on <p1 p2>.  The
    printed form of the shared-bath phase-space equation carries a bare
    momentum-derivative cross term that is dimensionally inconsistent; the
    generator below uses the drift re-derived from the position-space
    equation, 2*gamma*(u2 d/du1 + u1 d/du2), and is validated against the
    closed-form covariances by the test suite.
    """
    if regime not in (Regime.DISTINCT, Regime.COMMON):
        raise InvalidParamsError("moment ODEs cover the environment regimes only")
    g = bath.gamma
    d = bath.diffusion
    m = np.zeros((10, 10))
    b = np.zeros(10)

    def at(row, col, val):
        m[_IDX[row], _IDX[col]] += val

    for p1, p2 in (("1", "2"), ("2", "1")):
        xx, xp, pp = f"x{p1}x{p1}", f"x{p1}p{p1}", f"p{p1}p{p1}"
        at(xx, xp, 2.0)
        at(xp, pp, 1.0)
        at(xp, xp, -2 * g)
        at(pp, pp, -4 * g)
        b[_IDX[pp]] += 2 * d
    at("x1x2", "x1p2", 1.0)
    at("x1x2", "p1x2", 1.0)
    at("x1p2", "p1p2", 1.0)
    at("x1p2", "x1p2", -2 * g)
    at("p1x2", "p1p2", 1.0)
    at("p1x2", "p1x2", -2 * g)
    at("p1p2", "p1p2", -4 * g)

    if regime is Regime.COMMON:
        at("x1p1", "x1p2", -2 * g)
        at("p1p1", "p1p2", -4 * g)
        at("x1p2", "x1p1", -2 * g)
        at("p1x2", "x2p2", -2 * g)
        at("x2p2", "p1x2", -2 * g)
        at("p2p2", "p1p2", -4 * g)
        at("p1p2", "p1p1", -2 * g)
        at("p1p2", "p2p2", -2 * g)
        b[_IDX["p1p2"]] += 2 * d
    return m, b


def integrate_linear(m, b, m0, t_end, steps):
    """Fixed-step classical RK4 for dm/dt = M m + b.

    Returns (times, trajectory) with trajectory of shape (steps + 1, dim).
    Fixed step keeps runs bit-reproducible; halving the step must shrink the
    error by ~16x, which the order test checks.
    """
    if not isinstance(steps, (int, np.integer)) or steps < 1:
        raise InvalidParamsError(f"steps must be a positive integer, got {steps!r}")
    if not (math.isfinite(t_end) and t_end > 0):
        raise InvalidParamsError(f"t_end must be finite and > 0, got {t_end}")
    m = np.asarray(m, dtype=float)
    b = np.asarray(b, dtype=float)
    state = np.array(m0, dtype=float)
    h = t_end / steps
    traj = np.empty((steps + 1, state.size))
    traj[0] = state
    for i in range(steps):
        k1 = m @ state + b
        k2 = m @ (state + 0.5 * h * k1) + b
        k3 = m @ (state + 0.5 * h * k2) + b
        k4 = m @ (state + h * k3) + b
        state = state + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        traj[i + 1] = state
        if not np.all(np.abs(state) < _DIVERGENCE_BOUND):
            raise DivergenceError(f"moment trajectory diverged near t = {(i + 1) * h:.6g}")
    times = np.linspace(0.0, t_end, steps + 1)
    return times, traj


def integrate_moments(regime: Regime, squeeze: float, bath: BathParams, t_end: float, steps: int):
    """RK4 trajectory of all ten second moments from the squeezed initial state."""
    s = check_squeeze(squeeze)
    m, b = moment_generator(regime, bath)
    cov0 = covariance(regime, s, 0.0, bath)
    m0 = [getattr(cov0, name) for name in MOMENT_LABELS]
    return integrate_linear(m, b, m0, t_end, steps)


def covariance_from_moments(vec) -> CovarianceMatrix:
    """Wrap one trajectory row back into a CovarianceMatrix."""
    return CovarianceMatrix(**{name: float(v) for name, v in zip(MOMENT_LABELS, vec)})


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureSpec:
    """Truncation and accuracy controls for the Simpson integrators.

    half_width is measured in envelope standard deviations per axis; the
    default puts the cut below 1e-14 of the peak.  Grids are refined by
    doubling until the Richardson estimate meets rel_tol or max_doublings
    is exhausted.
    """

    half_width: float = 8.5
    rel_tol: float = 1e-8
    max_doublings: int = 12
    n0: int = 32

    def __post_init__(self):
        ok = (self.half_width > 0 and math.isfinite(self.half_width)
              and self.rel_tol > 0 and math.isfinite(self.rel_tol)
              and self.max_doublings >= 1 and self.n0 >= 4)
        if not ok:
            raise InvalidParamsError("quadrature spec fields must be positive and finite")


DEFAULT_QUADRATURE = QuadratureSpec()


def _simpson_weights(n):
    w = np.ones(n + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w / 3.0


def adaptive_simpson(f, a, b, spec: QuadratureSpec = DEFAULT_QUADRATURE):
    """Composite Simpson with dyadic refinement on [a, b].

    f must accept an ndarray of nodes.  Convergence is declared when the
    change between successive levels is within 15 * rel_tol * |integral|
    (the factor 15 is the usual Simpson Richardson constant).
    """
    n = spec.n0
    prev = None
    for _ in range(spec.max_doublings + 1):
        x = np.linspace(a, b, n + 1)
        h = (b - a) / n
        val = h * np.sum(_simpson_weights(n) * f(x))
        if prev is not None:
            if abs(val - prev) <= 15.0 * spec.rel_tol * max(abs(val), 1e-300):
                return val
        prev = val
        n *= 2
    raise QuadratureError(f"1-D Simpson did not converge to rel_tol={spec.rel_tol}")


def _simpson_2d(f, ax, bx, ay, by, spec: QuadratureSpec):
    # tensor-product Simpson per axis, both axes refined together
    n = spec.n0
    prev = None
    for _ in range(spec.max_doublings + 1):
        x = np.linspace(ax, bx, n + 1)
        y = np.linspace(ay, by, n + 1)
        hx = (bx - ax) / n
        hy = (by - ay) / n
        w = _simpson_weights(n)
        grid = f(x[:, None], y[None, :])
        val = hx * hy * (w @ grid @ w)
        if prev is not None:
            if abs(val - prev) <= 15.0 * spec.rel_tol * max(abs(val), 1e-300):
                return val
        prev = val
        n *= 2
    raise QuadratureError(f"2-D Simpson did not converge to rel_tol={spec.rel_tol}")


def _axis_half_width(state: ReducedGaussian, spec: QuadratureSpec) -> float:
    # x = R + r/2 with independent Gaussian envelopes in R and r
    sig_r_big, sig_r = state.envelope_widths()
    return spec.half_width * math.sqrt(sig_r_big ** 2 + 0.25 * sig_r ** 2)


def quad_l1_coherence(state: ReducedGaussian, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Numerical integral of |rho_A(x, y)| over the plane."""
    half = _axis_half_width(state, spec)
    return _simpson_2d(lambda x, y: np.abs(state.value(x, y)), -half, half, -half, half, spec)


def quad_purity(state: ReducedGaussian, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Numerical tr(rho_A^2) = integral of |rho_A(x, z)|^2."""
    half = _axis_half_width(state, spec)
    return _simpson_2d(lambda x, y: np.abs(state.value(x, y)) ** 2, -half, half, -half, half, spec)


def quad_trace(state: ReducedGaussian, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Numerical trace, integral of rho_A(x, x); equals one for a valid state."""
    sig_r_big, _ = state.envelope_widths()
    half = spec.half_width * sig_r_big
    return adaptive_simpson(lambda x: state.value(x, x).real, -half, half, spec)


# ---------------------------------------------------------------------------
# exact isolated-pair density matrix
# ---------------------------------------------------------------------------

def schrodinger_density(squeeze: float, r1, big_r1, r2, big_r2, t: float):
    """Exact two-particle density matrix of the isolated pair.

    Coordinates are relative/centre (r_i = x_i - y_i, R_i = (x_i + y_i)/2) for
    each particle.  Hermiticity reads rho(r1, R1; r2, R2)* =
    rho(-r1, R1; -r2, R2).  The prefactor is fixed by trace one,
    1/(pi sqrt((e^{4s} + t^2)(e^{-4s} + t^2))); tracing particle 2 (r2 = 0,
    integrate over R2) reproduces the zero-damping limit of the reduced state.
    """
    s = check_squeeze(squeeze)
    t = check_time(t)
    e2s = math.exp(2 * s)
    e4s = e2s * e2s
    t2 = t * t
    beta = 8.0 * (e4s + t2) * (e4s * t2 + 1.0)
    sum_r, diff_r = r1 + r2, np.asarray(r1) - np.asarray(r2)
    sum_R, diff_R = big_r1 + big_r2, np.asarray(big_r1) - np.asarray(big_r2)
    alpha = (
        8j * e4s * t ** 3 * (np.asarray(r1) * big_r1 + np.asarray(r2) * big_r2)
        - e2s * (t2 * (diff_r ** 2 + 4 * diff_R ** 2) + sum_r ** 2 + 4 * sum_R ** 2)
        - e2s * e4s * (t2 * (sum_r ** 2 + 4 * sum_R ** 2) + diff_r ** 2 + 4 * diff_R ** 2)
        + 4j * e4s * e4s * t * diff_r * diff_R
        + 4j * t * sum_r * sum_R
    )
    norm = 1.0 / (math.pi * math.sqrt((e4s + t2) * (1.0 / e4s + t2)))
    return norm * np.exp(alpha / beta)


def schrodinger_partial_trace(squeeze: float, r1, big_r1, t: float,
                              spec: QuadratureSpec = DEFAULT_QUADRATURE):
    """Reduced state of particle 1 by numerical trace over particle 2."""
    s = check_squeeze(squeeze)
    width = math.sqrt((1.0 + t * t) * math.cosh(2 * s) / 2.0)
    half = spec.half_width * width

    def integrand(big_r2):
        return schrodinger_density(s, r1, big_r1, 0.0, big_r2, t)

    n = spec.n0
    prev = None
    for _ in range(spec.max_doublings + 1):
        x = np.linspace(-half, half, n + 1)
        h = 2 * half / n
        vals = np.stack([integrand(xi) for xi in x])
        w = _simpson_weights(n)
        val = h * np.tensordot(w, vals, axes=(0, 0))
        if prev is not None and np.all(
            np.abs(val - prev) <= 15.0 * spec.rel_tol * np.maximum(np.abs(val), 1e-300)
        ):
            return val
        prev = val
        n *= 2
    raise QuadratureError("partial trace quadrature did not converge")
