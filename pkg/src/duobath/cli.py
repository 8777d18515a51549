"""Command-line front end: sweeps, figure presets, event searches, self-check.

Exit codes: 0 success, 1 usage error, 2 validation or numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .bath import BathParams, Regime, recommended_t_max
from .covariance import covariance, delta_det_common, log_negativity, symplectic_analysis
from .epr import epr_measures
from .errors import (DivergenceError, EventSearchError, InvalidParamsError,
                     NumericalDomainError, OverflowDomainError, QuadratureError)
from .events import find_dark_period, find_death_time
from .numerics import (MOMENT_LABELS, QuadratureSpec, integrate_moments,
                       quad_l1_coherence, quad_purity)
from .reduced import l1_coherence, purity_entropy, reduced_gaussian
from .sweep import FIGURE_PRESETS, QUANTITIES, SweepSpec, run_figure, run_sweep

_FAILURES = (InvalidParamsError, OverflowDomainError, NumericalDomainError,
             QuadratureError, DivergenceError, EventSearchError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_config(path: Path) -> dict:
    """Flat key=value file; '#' starts a comment, lists are comma or space separated."""
    values = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidParamsError(f"bad config line (expected key=value): {raw!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        values[key.replace("-", "_")] = val
    return values


def _floats(text: str) -> list[float]:
    return [float(tok) for tok in text.replace(",", " ").split()]


def _merge(args, config: dict, key: str, parse, default):
    """Command-line flags win over config entries, which win over defaults."""
    flag = getattr(args, key, None)
    if flag not in (None, []):
        return flag
    if key in config:
        return parse(config[key])
    return default


def _build_common(sub, with_regime=True):
    if with_regime:
        sub.add_argument("--regime", action="append", choices=[r.value for r in Regime])
    sub.add_argument("--gamma", action="append", type=float)
    sub.add_argument("--temp", action="append", type=float)
    sub.add_argument("--squeeze", action="append", type=float)
    sub.add_argument("--t-max", dest="t_max", type=float)
    sub.add_argument("--steps", type=int)
    sub.add_argument("--config", type=Path)


def build_parser() -> _Parser:
    parser = _Parser(prog="duobath",
                     description="Quantum-correlation dynamics of two particles "
                                 "in shared or separate high-temperature baths")
    subs = parser.add_subparsers(dest="command", required=True)

    sweep = subs.add_parser("sweep", help="evaluate a quantity over a parameter grid")
    _build_common(sweep)
    sweep.add_argument("--quantity", choices=QUANTITIES)
    sweep.add_argument("--out", type=Path)
    sweep.add_argument("--plot", action="store_true", help="also render a PNG next to the CSV")

    fig = subs.add_parser("figure", help="reproduce a preset figure as CSV + PNG")
    fig.add_argument("name", choices=sorted(FIGURE_PRESETS))
    fig.add_argument("--out", type=Path)
    fig.add_argument("--no-plot", action="store_true", help="write only the CSV")

    death = subs.add_parser("death-time", help="separate-bath entanglement sudden death")
    _build_common(death, with_regime=False)

    dark = subs.add_parser("dark-period", help="shared-bath zero-entanglement interval")
    _build_common(dark, with_regime=False)
    dark.add_argument("--resolution", type=float, default=1e-3)

    subs.add_parser("validate", help="run the numerical cross-checks")
    return parser


def _single(args, config, key, default=None):
    vals = _merge(args, config, key, _floats, default)
    if vals is None:
        raise InvalidParamsError(f"--{key.replace('_', '-')} is required")
    if isinstance(vals, list):
        if len(vals) != 1:
            raise InvalidParamsError(f"--{key.replace('_', '-')} takes one value here")
        return vals[0]
    return float(vals)


def _cmd_sweep(args) -> int:
    config = _read_config(args.config) if args.config else {}
    regimes = _merge(args, config, "regime", lambda s: s.replace(",", " ").split(), None)
    if not regimes:
        raise InvalidParamsError("--regime is required (repeatable)")
    spec = SweepSpec(
        regimes=tuple(Regime(r) for r in regimes),
        squeezes=tuple(_merge(args, config, "squeeze", _floats, None) or ()),
        gammas=tuple(_merge(args, config, "gamma", _floats, []) or ()),
        temperatures=tuple(_merge(args, config, "temp", _floats, []) or ()),
        t_max=float(_single(args, config, "t_max")),
        steps=int(_merge(args, config, "steps", int, 2000)),
        quantity=_merge(args, config, "quantity", str, "coherence"),
        out=Path(_merge(args, config, "out", Path, Path("sweep.csv"))),
    )
    path = run_sweep(spec)
    print(f"wrote {path}")
    if args.plot:
        from .plotting import render_curves

        ts = np.linspace(0.0, spec.t_max, spec.steps)
        labels, columns = [], []
        import csv as _csv

        with open(path) as fh:
            rows = list(_csv.reader(fh))
        labels = rows[0][1:]
        data = np.array(rows[1:], dtype=float)
        png = path.with_suffix(".png")
        render_curves(data[:, 0], labels, data[:, 1:].T, png,
                      ylabel=spec.quantity)
        print(f"wrote {png}")
    return 0


def _cmd_figure(args) -> int:
    csv_path, png_path = run_figure(args.name, out=args.out, plot=not args.no_plot)
    print(f"wrote {csv_path}")
    if png_path is not None:
        print(f"wrote {png_path}")
    return 0


def _cmd_death(args) -> int:
    config = _read_config(args.config) if args.config else {}
    bath = BathParams(gamma=_single(args, config, "gamma"),
                      temperature=_single(args, config, "temp"))
    squeeze = _single(args, config, "squeeze")
    t_max = _single(args, config, "t_max", default=[recommended_t_max(bath.gamma)])
    report = find_death_time(squeeze, bath, t_max)
    print(f"death_time = {report.death_time:.9g}")
    return 0


def _cmd_dark(args) -> int:
    config = _read_config(args.config) if args.config else {}
    bath = BathParams(gamma=_single(args, config, "gamma"),
                      temperature=_single(args, config, "temp"))
    squeeze = _single(args, config, "squeeze")
    t_max = _single(args, config, "t_max", default=[recommended_t_max(bath.gamma)])
    report = find_dark_period(squeeze, bath, t_max, resolution=args.resolution)
    if report.never_entangled:
        print("never entangled")
    elif report.dark_period is None:
        print("no dark period found")
    else:
        off, on = report.dark_period
        print(f"dark_period = [{off:.9g}, {on:.9g}]")
    return 0


def _cmd_validate(_args) -> int:
    """Condensed oracle cross-checks; exit 2 on any failure."""
    failures = 0

    def check(name, value, bound):
        nonlocal failures
        ok = value <= bound
        print(f"{'ok  ' if ok else 'FAIL'} {name}: {value:.3e} (bound {bound:.0e})")
        failures += 0 if ok else 1

    bath = BathParams(gamma=0.1, temperature=10.0)
    s = 1.15
    for regime in (Regime.DISTINCT, Regime.COMMON):
        times, traj = integrate_moments(regime, s, bath, 5.0, 5000)
        cov = covariance(regime, s, times, bath)
        closed = np.stack([np.asarray(getattr(cov, k), dtype=float) for k in MOMENT_LABELS], axis=1)
        check(f"moment ODE vs closed forms ({regime})", float(np.max(np.abs(traj - closed))), 1e-6)

    spec = QuadratureSpec(rel_tol=1e-9)
    for regime in (Regime.DISTINCT, Regime.COMMON):
        state = reduced_gaussian(regime, s, bath, 2.0)
        c_closed = l1_coherence(regime, s, 2.0, bath).c_l1
        p_closed = purity_entropy(regime, s, 2.0, bath).purity
        check(f"quadrature coherence vs closed form ({regime})",
              abs(quad_l1_coherence(state, spec) / c_closed - 1.0), 1e-6)
        check(f"quadrature purity vs closed form ({regime})",
              abs(quad_purity(state, spec) / p_closed - 1.0), 1e-6)

    ts = np.linspace(0.0, 10.0, 101)
    en = log_negativity(Regime.SCHRODINGER, s, ts)
    check("isolated-pair E_N constancy", float(np.max(np.abs(en - 2 * s / np.log(2)))), 1e-9)

    rep = epr_measures(Regime.SCHRODINGER, s, 0.0)
    check("eta(0) = exp(-4s)", abs(rep.eta - np.exp(-4 * s)), 1e-12)

    bath2 = BathParams(gamma=0.2, temperature=10.0)
    worst = 0.0
    for t in (0.0, 0.5, 1.0, 2.5, 5.0):
        rep = symplectic_analysis(covariance(Regime.COMMON, 1.5, t, bath2))
        d, ds = delta_det_common(1.5, bath2, t)
        worst = max(worst, abs(rep.delta_tilde / d - 1.0), abs(rep.det_sigma / ds - 1.0))
    check("shared-bath invariants: blocks vs closed forms", worst, 1e-9)

    print("validate:", "ok" if failures == 0 else f"{failures} failure(s)")
    return 0 if failures == 0 else 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "sweep": _cmd_sweep,
        "figure": _cmd_figure,
        "death-time": _cmd_death,
        "dark-period": _cmd_dark,
        "validate": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except _FAILURES as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
