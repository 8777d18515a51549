"""Parameter sweeps over the closed-form curves, figure presets, CSV output.

CSV files are RFC-4180 style: LF line endings, '.' decimal separator, 17
significant digits, one column per parameter tuple with the tuple encoded in
the column name.  Identical sweep specifications produce byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bath import BathParams, Regime, recommended_t_max
from .covariance import covariance, symplectic_analysis
from .epr import epr_measures
from .errors import InvalidParamsError, StabilityBoundError
from .events import find_death_time
from .reduced import l1_coherence, purity_entropy

QUANTITIES = ("coherence", "entropy", "xi", "eta", "negativity")

_REGIME_RANK = {Regime.SCHRODINGER: 0, Regime.DISTINCT: 1, Regime.COMMON: 2}


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: a quantity evaluated on a time grid for a parameter grid."""

    regimes: tuple[Regime, ...]
    squeezes: tuple[float, ...]
    gammas: tuple[float, ...]
    temperatures: tuple[float, ...]
    t_max: float
    out: Path
    steps: int = 2000
    quantity: str = "coherence"

    def validate(self):
        if self.quantity not in QUANTITIES:
            raise InvalidParamsError(f"unknown quantity {self.quantity!r}; pick from {QUANTITIES}")
        if not self.regimes:
            raise InvalidParamsError("at least one regime is required")
        if not self.squeezes:
            raise InvalidParamsError("at least one squeeze value is required")
        needs_bath = any(r is not Regime.SCHRODINGER for r in self.regimes)
        if needs_bath and (not self.gammas or not self.temperatures):
            raise InvalidParamsError("environment regimes need gamma and temperature lists")
        if self.steps < 2:
            raise InvalidParamsError("steps must be >= 2")
        if not self.t_max > 0:
            raise InvalidParamsError("t-max must be > 0")
        for tup in self.tuples():
            regime, s, g, temp = tup
            if g is not None and self.t_max > recommended_t_max(g):
                raise StabilityBoundError(
                    f"t-max {self.t_max} exceeds the recommended bound "
                    f"{recommended_t_max(g):.6g} for tuple (regime={regime}, s={s}, "
                    f"gamma={g}, T={temp})"
                )

    def tuples(self):
        """Deduplicated (regime, s, gamma, T) tuples in deterministic order."""
        seen = {}
        for regime in self.regimes:
            for s in self.squeezes:
                if regime is Regime.SCHRODINGER:
                    seen[(regime, float(s), None, None)] = True
                else:
                    for g in self.gammas:
                        for temp in self.temperatures:
                            seen[(regime, float(s), float(g), float(temp))] = True
        return sorted(
            seen,
            key=lambda k: (_REGIME_RANK[k[0]], k[1], k[2] or 0.0, k[3] or 0.0),
        )


def column_label(quantity, regime, s, gamma=None, temp=None) -> str:
    if regime is Regime.SCHRODINGER:
        return f"{quantity}|{regime}|s={s:.9g}"
    return f"{quantity}|{regime}|s={s:.9g}|g={gamma:.9g}|T={temp:.9g}"


def evaluate_quantity(quantity: str, regime: Regime, squeeze: float, ts,
                      bath: BathParams | None):
    """Vectorized curve of one quantity on a time grid."""
    if quantity == "coherence":
        return l1_coherence(regime, squeeze, ts, bath).c_l1
    if quantity == "entropy":
        return purity_entropy(regime, squeeze, ts, bath).linear_entropy
    if quantity == "xi":
        return epr_measures(regime, squeeze, ts, bath).xi
    if quantity == "eta":
        return epr_measures(regime, squeeze, ts, bath).eta
    if quantity == "negativity":
        return symplectic_analysis(covariance(regime, squeeze, ts, bath)).log_negativity
    raise InvalidParamsError(f"unknown quantity {quantity!r}")


def _format(v: float) -> str:
    return f"{v:.17g}"


def write_csv(path: Path, x_name: str, x_values, labels, columns) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join([x_name] + list(labels)) + "\n")
        for i, x in enumerate(x_values):
            row = [_format(x)] + [_format(col[i]) for col in columns]
            fh.write(",".join(row) + "\n")
    return path


def run_sweep(spec: SweepSpec) -> Path:
    """Evaluate the spec's curves and write them as one CSV; returns the path.

    Every tuple is an independent pure-function evaluation; columns are
    assembled in the sorted tuple order, so reruns are byte-identical.
    """
    spec.validate()
    ts = np.linspace(0.0, spec.t_max, spec.steps)
    labels, columns = [], []
    for regime, s, g, temp in spec.tuples():
        bath = None if g is None else BathParams(gamma=g, temperature=temp)
        labels.append(column_label(spec.quantity, regime, s, g, temp))
        columns.append(np.asarray(evaluate_quantity(spec.quantity, regime, s, ts, bath), dtype=float))
    return write_csv(spec.out, "t", ts, labels, columns)


# ---------------------------------------------------------------------------
# figure presets
# ---------------------------------------------------------------------------

LOG10_HALF = float(np.log(10) / 2)   # ~1.1513
LN20_HALF = float(np.log(20) / 2)    # ~1.4979
LN10_HALF = LOG10_HALF
LN5_HALF = float(np.log(5) / 2)      # ~0.8047
S_WEAK = float(-np.log(0.9) / 2)     # ~0.0527
S_ENT1 = float(-np.log(0.5) / 2)     # ~0.3466
S_ENT2 = float(-np.log(0.3) / 2)     # ~0.6020
S_DIP = float(-np.log(0.01) / 2)     # ~2.3026


@dataclass(frozen=True)
class FigurePreset:
    """Parameter grid behind one preset figure.

    kind "curves" sweeps a quantity over time; kind "death_scan" tabulates the
    sudden-death time against temperature.  Time ranges are chosen so the
    documented features (revival, crossing, dip, dark period, regrowth) sit
    inside the window.
    """

    name: str
    description: str
    kind: str  # "curves" | "death_scan"
    quantity: str
    tuples: tuple = ()
    t_max: float = 10.0
    steps: int = 2000
    scan_squeezes: tuple[float, ...] = ()
    scan_temperatures: tuple[float, ...] = ()
    scan_gamma: float = 0.2
    ylabel: str = ""


def _grid(regime, squeezes, gammas, temps):
    out = []
    for s in squeezes:
        for g in gammas:
            for temp in temps:
                out.append((regime, s, g, temp))
    return tuple(out)


FIGURE_PRESETS: dict[str, FigurePreset] = {
    "fig1": FigurePreset(
        name="fig1",
        description="shared-bath local coherence, gamma=0.1, s in {0, log(10)/2}, T in {5, 10, 15}",
        kind="curves",
        quantity="coherence",
        tuples=_grid(Regime.COMMON, (0.0, LOG10_HALF), (0.1,), (5.0, 10.0, 15.0)),
        t_max=30.0,
        ylabel="l1 coherence",
    ),
    "fig2": FigurePreset(
        name="fig2",
        description="separate vs shared bath coherence, gamma=0.1, T=10, s in {0, log(10)/2}",
        kind="curves",
        quantity="coherence",
        tuples=(_grid(Regime.DISTINCT, (0.0, LOG10_HALF), (0.1,), (10.0,))
                + _grid(Regime.COMMON, (0.0, LOG10_HALF), (0.1,), (10.0,))),
        t_max=30.0,
        ylabel="l1 coherence",
    ),
    "fig3": FigurePreset(
        name="fig3",
        description="shared-bath linear entropy, gamma=0.1; s=0 at T in {5,10,15} and T=8 at s in {0, 0.35, 0.60}",
        kind="curves",
        quantity="entropy",
        tuples=(_grid(Regime.COMMON, (0.0,), (0.1,), (5.0, 10.0, 15.0))
                + _grid(Regime.COMMON, (0.0, S_ENT1, S_ENT2), (0.1,), (8.0,))),
        t_max=30.0,
        ylabel="linear entropy",
    ),
    "fig4": FigurePreset(
        name="fig4",
        description="separate vs shared bath linear entropy, gamma=0.1, T=10, s in {0, 2.30}",
        kind="curves",
        quantity="entropy",
        tuples=(_grid(Regime.DISTINCT, (0.0, S_DIP), (0.1,), (10.0,))
                + _grid(Regime.COMMON, (0.0, S_DIP), (0.1,), (10.0,))),
        t_max=30.0,
        ylabel="linear entropy",
    ),
    "fig5": FigurePreset(
        name="fig5",
        description="EPR product eta, isolated pair and shared bath (gamma=0.2, T=15), s in {0, 0.1, 0.4, 1}",
        kind="curves",
        quantity="eta",
        tuples=(tuple((Regime.SCHRODINGER, s, None, None) for s in (0.0, 0.1, 0.4, 1.0))
                + _grid(Regime.COMMON, (0.0, 0.1, 0.4, 1.0), (0.2,), (15.0,))),
        t_max=3.0,
        ylabel="eta",
    ),
    "fig6": FigurePreset(
        name="fig6",
        description="separate-bath log negativity, gamma=0.2; s=ln(20)/2 at T in {10,15,20,25} and T=10 at s in {ln20/2, ln10/2, ln5/2}",
        kind="curves",
        quantity="negativity",
        tuples=(_grid(Regime.DISTINCT, (LN20_HALF,), (0.2,), (10.0, 15.0, 20.0, 25.0))
                + _grid(Regime.DISTINCT, (LN10_HALF, LN5_HALF), (0.2,), (10.0,))),
        t_max=2.0,
        ylabel="log negativity",
    ),
    "fig7": FigurePreset(
        name="fig7",
        description="separate-bath sudden-death time vs temperature, gamma=0.2, s in {ln(20)/2, -ln(0.9)/2}",
        kind="death_scan",
        quantity="negativity",
        scan_squeezes=(LN20_HALF, S_WEAK),
        scan_temperatures=tuple(float(v) for v in range(10, 26)),
        scan_gamma=0.2,
        t_max=5.0,
        ylabel="death time",
    ),
    "fig8": FigurePreset(
        name="fig8",
        description="shared-bath log negativity, gamma=0.2; s=ln(20)/2 at T in {10,15,20,25} and T=10 at s in {ln20/2, ln10/2, ln5/2}",
        kind="curves",
        quantity="negativity",
        tuples=(_grid(Regime.COMMON, (LN20_HALF,), (0.2,), (10.0, 15.0, 20.0, 25.0))
                + _grid(Regime.COMMON, (LN10_HALF, LN5_HALF), (0.2,), (10.0,))),
        t_max=20.0,
        ylabel="log negativity",
    ),
}


def _dedupe_sorted(tuples):
    return sorted(set(tuples), key=lambda k: (_REGIME_RANK[k[0]], k[1], k[2] or 0.0, k[3] or 0.0))


def run_figure(name: str, out: Path | None = None, plot: bool = True):
    """Write one preset's CSV (and its rendered PNG unless plot=False).

    Returns (csv_path, png_path or None).
    """
    if name not in FIGURE_PRESETS:
        raise InvalidParamsError(f"unknown figure {name!r}; choose from {sorted(FIGURE_PRESETS)}")
    preset = FIGURE_PRESETS[name]
    csv_path = Path(out) if out is not None else Path(f"{name}.csv")

    if preset.kind == "curves":
        ts = np.linspace(0.0, preset.t_max, preset.steps)
        labels, columns = [], []
        for regime, s, g, temp in _dedupe_sorted(preset.tuples):
            bath = None if g is None else BathParams(gamma=g, temperature=temp)
            labels.append(column_label(preset.quantity, regime, s, g, temp))
            columns.append(np.asarray(
                evaluate_quantity(preset.quantity, regime, s, ts, bath), dtype=float))
        write_csv(csv_path, "t", ts, labels, columns)
        x_values, x_name = ts, "t"
    else:
        temps = np.asarray(preset.scan_temperatures, dtype=float)
        labels, columns = [], []
        for s in preset.scan_squeezes:
            col = []
            for temp in temps:
                bath = BathParams(gamma=preset.scan_gamma, temperature=float(temp))
                col.append(find_death_time(s, bath, preset.t_max).death_time)
            labels.append(f"death_time|{Regime.DISTINCT}|s={s:.9g}|g={preset.scan_gamma:.9g}")
            columns.append(np.asarray(col))
        write_csv(csv_path, "T", temps, labels, columns)
        x_values, x_name = temps, "T"

    png_path = None
    if plot:
        from .plotting import render_curves

        png_path = csv_path.with_suffix(".png")
        render_curves(x_values, labels, columns, png_path,
                      xlabel=x_name, ylabel=preset.ylabel, title=preset.description)
    return csv_path, png_path
