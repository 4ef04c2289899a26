from __future__ import annotations

# Standard Library
import dataclasses
import sys
from pathlib import Path
from typing import Callable, Dict, Optional

# Third Party
import numpy as np
import pandas as pd
import simplejson

# GiantAtom
from giantatom.design.fitting import DesignBounds, FitConfig, fit_layout
from giantatom.design.objective import DesignTarget, response
from giantatom.design.presets import find_local_extrema, preset_fig3
from giantatom.design.scenarios import (
    scenario_anharmonicity,
    scenario_inversion,
    scenario_multiphoton,
)
from giantatom.dynamics.generator import build_generator, transition_rates
from giantatom.dynamics.solver import evolve, steady_state
from giantatom.dynamics.types import basis_state
from giantatom.errors import ConfigError, GiantAtomError, UnknownPresetError
from giantatom.slh.equivalence import equivalence_report
from giantatom.spectral.coupling import mirror_lamb_correction, mirror_rate, relaxation_rate
from giantatom.spectral.lamb import ShiftMode
from giantatom.spectral.sweep import spectrum_sweep
from giantatom.spectral.symmetric import (
    symmetric_lamb,
    symmetric_mirror_lamb,
    symmetric_mirror_rate,
    symmetric_rate,
)
from giantatom.cli.run_config import (
    RunConfig,
    frequency_unit,
    make_atom,
    make_drive,
    make_environment,
    make_grid,
    make_layout,
    make_mirror,
    make_quadrature,
)
from giantatom.utils.logging import get_logger
from giantatom.utils.timer import Timer

logger = get_logger(__name__)

SCENARIOS = ("inversion", "multiphoton", "anharmonicity")

# Natural-unit window of the designed-response plots.
PRESET_WINDOW = (0.5, 1.5)
PRESET_POINTS = 1001


def _shift_mode(cfg: RunConfig) -> Optional[ShiftMode]:
    return ShiftMode(cfg.shift_mode) if cfg.shift_mode is not None else None


def run_spectrum(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    layout = make_layout(cfg)
    grid = make_grid(cfg, layout)
    atom = make_atom(cfg, layout, omega10=float(grid[0]))
    result = spectrum_sweep(
        layout,
        atom,
        make_environment(cfg),
        grid,
        mirror=make_mirror(cfg),
        shift_mode=_shift_mode(cfg),
        quad=make_quadrature(cfg),
        n_jobs=cfg.n_jobs,
        progress=cfg.progress,
    )
    return result.to_frame()


def run_symmetric(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    """Closed forms of the symmetric layout built from the first two points."""
    layout = make_layout(cfg)
    env = make_environment(cfg)
    omegas = make_grid(cfg, layout)
    spacing = layout.positions[1] - layout.positions[0] if layout.n_points > 1 else 1.0
    n = layout.n_points
    rows = []
    for omega in omegas:
        gamma = float(layout.point_rates(omega, env)[0])
        phi = omega * spacing / layout.velocity
        rows.append(
            dict(
                phi_over_2pi=phi / (2 * np.pi),
                gamma=symmetric_rate(gamma, n, phi),
                delta=symmetric_lamb(gamma, n, phi),
                gamma_mirror=symmetric_mirror_rate(gamma, n, phi),
                delta_mirror=symmetric_mirror_lamb(gamma, n, phi),
            )
        )
    return pd.DataFrame(rows, columns=["phi_over_2pi", "gamma", "delta", "gamma_mirror", "delta_mirror"])


def run_mirror(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    layout = make_layout(cfg)
    env = make_environment(cfg)
    mirror = make_mirror(cfg, force=True)
    omegas = make_grid(cfg, layout)
    unit = frequency_unit("natural", layout)
    return pd.DataFrame(
        dict(
            omega=omegas,
            phi_over_2pi=omegas / unit,
            gamma=relaxation_rate(omegas, 0, layout, env),
            gamma_mirror=[mirror_rate(w, layout, mirror, env) for w in omegas],
            delta_mirror_correction=[mirror_lamb_correction(w, layout, mirror, env) for w in omegas],
        )
    )


def run_slh_check(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    report = equivalence_report(
        n_layouts=cfg.slh_check.n_layouts,
        max_points=cfg.slh_check.max_points,
        seed=cfg.seed,
        with_hilbert=cfg.slh_check.hilbert,
        quad=make_quadrature(cfg),
        progress=cfg.progress,
    )
    return report.table


def _generator(cfg: RunConfig):
    layout = make_layout(cfg)
    atom = make_atom(cfg, layout)
    env = make_environment(cfg)
    mirror = make_mirror(cfg)
    gen = build_generator(
        atom,
        layout,
        env,
        mirror=mirror,
        drive=make_drive(cfg),
        shift_mode=_shift_mode(cfg),
        quad=make_quadrature(cfg),
    )
    return gen, transition_rates(atom, layout, env, mirror)


def run_simulate(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    gen, rates = _generator(cfg)
    t_max = cfg.simulation.t_max
    if t_max is None:
        if rates.max() <= 0:
            raise ConfigError("simulation.t_max is required for an uncoupled atom", "simulation.t_max")
        t_max = 10.0 / rates.max()
    if not 0 <= cfg.simulation.initial_level < gen.dim:
        raise ConfigError(
            f"initial level {cfg.simulation.initial_level} outside a {gen.dim}-level atom",
            "simulation.initial_level",
        )
    times = np.linspace(0.0, t_max, cfg.simulation.points)
    trajectory = evolve(gen, basis_state(cfg.simulation.initial_level, gen.dim), times)
    return trajectory.to_frame()


def run_steady(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    gen, _ = _generator(cfg)
    rho = steady_state(gen)
    return pd.DataFrame(
        dict(level=np.arange(gen.dim), population=np.real(np.diagonal(rho))),
    )


def run_design(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    design = cfg.design
    layout = make_layout(cfg)
    env = make_environment(cfg)
    target_name = name or design.target
    source = layout if target_name == "layout" else preset_fig3(target_name, velocity=layout.velocity)
    omegas = make_grid(cfg, source, *PRESET_WINDOW)
    target = DesignTarget.from_layout(source, omegas, env, normalization=design.normalization)
    initial = layout if design.initial == "layout" else None
    if initial is not None and initial.n_points != design.n_points:
        raise ConfigError(
            f"design.initial=layout needs {design.n_points} points, got {initial.n_points}", "design.n_points"
        )
    result = fit_layout(
        target,
        design.n_points,
        bounds=DesignBounds(design.min_gap, design.max_gap, design.max_weight),
        seed=cfg.seed,
        initial=initial,
        cfg=FitConfig(n_restarts=design.n_restarts, max_iter=design.max_iter, n_jobs=design.n_jobs),
    )
    return result.to_frame()


def run_scenario(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    if name not in SCENARIOS:
        raise ConfigError(f"scenario must be one of {list(SCENARIOS)}, got {name!r}", "scenario")
    sc = cfg.scenario
    if name == "inversion":
        return scenario_inversion(sc.n_points, sc.gamma, sc.amplitudes).to_frame()
    if name == "multiphoton":
        return scenario_multiphoton(sc.n_points, sc.gamma).to_frame()
    grid = None
    if cfg.grid.min is not None and cfg.grid.max is not None:
        grid = np.linspace(cfg.grid.min, cfg.grid.max, cfg.grid.points)
    mode = _shift_mode(cfg) or ShiftMode.HILBERT
    return scenario_anharmonicity(sc.n_points, sc.gamma, grid, mode, make_quadrature(cfg)).to_frame()


def run_preset(cfg: RunConfig, name: Optional[str] = None) -> pd.DataFrame:
    if name is None:
        raise UnknownPresetError("preset needs a name, e.g. fig3-a")
    layout = preset_fig3(name, mode_coupling=cfg.layout.mode_coupling, velocity=cfg.layout.velocity)
    env = make_environment(cfg)
    if cfg.grid.min is None and cfg.grid.max is None:
        cfg = dataclasses.replace(cfg, grid=dataclasses.replace(cfg.grid, points=PRESET_POINTS))
    omegas = make_grid(cfg, layout, *PRESET_WINDOW)
    unit = layout.natural_frequency()
    rates = response(layout, omegas, env)
    for x, value in find_local_extrema(omegas / unit, rates, "max"):
        logger.info(f"{name}: local maximum {value:.6g} at phi/2pi = {x:.6f}")
    return pd.DataFrame(dict(omega=omegas, phi_over_2pi=omegas / unit, gamma=rates))


COMMANDS: Dict[str, Callable[[RunConfig, Optional[str]], pd.DataFrame]] = {
    "spectrum": run_spectrum,
    "symmetric": run_symmetric,
    "mirror": run_mirror,
    "slh-check": run_slh_check,
    "simulate": run_simulate,
    "steady": run_steady,
    "design": run_design,
    "scenario": run_scenario,
    "preset": run_preset,
}


def write_frame(df: pd.DataFrame, output: Optional[str], fmt: str, command: str) -> None:
    """CSV with 17 significant digits and '\\n' line ends, or a JSON table."""
    if fmt == "csv":
        text = df.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    else:
        document = dict(
            command=command,
            columns=list(df.columns),
            data={str(c): df[c].tolist() for c in df.columns},
        )
        text = simplejson.dumps(document, indent=2, ignore_nan=True) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        path = Path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="") as f:
            f.write(text)


def error_record(error: Exception) -> str:
    return simplejson.dumps(
        dict(
            error=type(error).__name__,
            message=str(error.args[0]) if error.args else str(error),
            field=getattr(error, "field", None),
        )
    )


def run(command: str, cfg: RunConfig, name: Optional[str] = None) -> int:
    """Runs one subcommand and writes its table, returns the exit status."""
    if command not in COMMANDS:
        sys.stderr.write(error_record(ConfigError(f"Unknown command {command}", "command")) + "\n")
        return 2
    try:
        with Timer() as timer:
            df = COMMANDS[command](cfg, name)
            write_frame(df, cfg.output, cfg.format, command)
    except (GiantAtomError, ValueError, KeyError, IndexError) as e:
        logger.debug(f"{command} failed", exc_info=True)
        sys.stderr.write(error_record(e) + "\n")
        return 1
    logger.info(f"{command}: {len(df)} rows in {timer.elapsed}")
    return 0
