"""Structured run configuration read from a single JSON document.

The document is decoded with simplejson, merged into the structured schema
below (type checks and unknown keys are reported with their dotted path),
converted back to dataclasses and finally checked by building the domain
objects it describes.
"""

from __future__ import annotations

# Standard Library
import dataclasses
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

# Third Party
import numpy as np
import simplejson

# GiantAtom
from giantatom.config import DEFAULT_HILBERT_WINDOW, FREQUENCY_UNITS, natural_unit
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import Environment, make_dos
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.dynamics.types import DriveSpec
from giantatom.errors import ConfigError
from giantatom.spectral.lamb import ShiftMode
from giantatom.spectral.quadrature import PVQuadratureConfig
from giantatom.utils.omegaconf import make_cli_cfg, merge_structured, to_object
from giantatom.utils.types import RealArray

OUTPUT_FORMATS = ("csv", "json")


@dataclass
class AtomConfig:
    levels: int = 2
    omega10: Optional[float] = None
    anharmonicity: float = 0.0
    ladder_model: str = "transmon"
    # "natural" reads omega10 and anharmonicity in units of 2 pi v / (x_2 - x_1).
    unit: str = "natural"


@dataclass
class LayoutConfig:
    positions: List[float] = field(default_factory=lambda: [0.0])
    # None means unit weights.
    weights: Optional[List[float]] = None
    velocity: float = 1.0
    mode_coupling: float = 1.0


@dataclass
class DosConfig:
    type: str = "constant"
    value: float = 1.0


@dataclass
class EnvironmentConfig:
    dos: DosConfig = field(default_factory=DosConfig)
    temperature: float = 0.0
    cutoff: Optional[float] = None


@dataclass
class MirrorConfig:
    enabled: bool = False
    phase: float = 0.0
    distance: Optional[float] = None


@dataclass
class DriveConfig:
    amplitude: float = 0.0
    pair: List[int] = field(default_factory=lambda: [0, 2])
    detuning: float = 0.0


@dataclass
class GridConfig:
    min: Optional[float] = None
    max: Optional[float] = None
    points: int = 201
    unit: str = "natural"


@dataclass
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    pole_window: float = 0.1
    max_subdivisions: int = 2000
    hilbert_window: float = DEFAULT_HILBERT_WINDOW


@dataclass
class SimulationConfig:
    # None means 10 / Gamma_max.
    t_max: Optional[float] = None
    points: int = 101
    initial_level: int = 1


@dataclass
class DesignConfig:
    n_points: int = 4
    # Preset name whose response is the target, or "layout" for the layout section.
    target: str = "two-maxima"
    normalization: str = "absolute"
    initial: str = "symmetric"
    n_restarts: int = 16
    max_iter: int = 4000
    min_gap: float = 0.05
    max_gap: float = 4.0
    max_weight: float = 10.0
    n_jobs: int = 1


@dataclass
class ScenarioConfig:
    n_points: int = 10
    gamma: float = 1e-4
    amplitudes: Optional[List[float]] = None


@dataclass
class EquivalenceConfig:
    n_layouts: int = 200
    max_points: int = 6
    hilbert: bool = True


@dataclass
class RunConfig:
    atom: AtomConfig = field(default_factory=AtomConfig)
    layout: LayoutConfig = field(default_factory=LayoutConfig)
    environment: EnvironmentConfig = field(default_factory=EnvironmentConfig)
    mirror: MirrorConfig = field(default_factory=MirrorConfig)
    drive: DriveConfig = field(default_factory=DriveConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    design: DesignConfig = field(default_factory=DesignConfig)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    slh_check: EquivalenceConfig = field(default_factory=EquivalenceConfig)
    shift_mode: Optional[str] = None
    output: Optional[str] = None
    format: str = "csv"
    seed: int = 42
    n_jobs: int = 1
    # tqdm bars on stderr for the spectrum sweep and the network check.
    progress: bool = False


def parse_config(text: str, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Validated RunConfig from a JSON document, dotted-key overrides applied last."""
    try:
        data = simplejson.loads(text) if text.strip() else {}
    except simplejson.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError("config document must be a JSON object")
    cfg = merge_structured(RunConfig, data)
    if overrides:
        cfg = make_cli_cfg(cfg, overrides)
    run_cfg: RunConfig = to_object(cfg)
    validate_run_config(run_cfg)
    return run_cfg


def serialize_config(cfg: RunConfig) -> str:
    return simplejson.dumps(dataclasses.asdict(cfg), sort_keys=True, indent=2)


def _check_choice(value: Optional[str], choices, path: str) -> None:
    if value is not None and value not in choices:
        raise ConfigError(f"{path} must be one of {list(choices)}, got {value!r}", path)


def validate_run_config(cfg: RunConfig) -> None:
    _check_choice(cfg.format, OUTPUT_FORMATS, "format")
    _check_choice(cfg.atom.unit, FREQUENCY_UNITS, "atom.unit")
    _check_choice(cfg.grid.unit, FREQUENCY_UNITS, "grid.unit")
    _check_choice(cfg.shift_mode, [m.value for m in ShiftMode], "shift_mode")
    layout = make_layout(cfg)
    make_environment(cfg)
    make_mirror(cfg)
    make_drive(cfg)
    if cfg.atom.omega10 is not None:
        make_atom(cfg, layout)
    if cfg.grid.min is not None or cfg.grid.max is not None:
        make_grid(cfg, layout)


def make_layout(cfg: RunConfig) -> CouplingLayout:
    weights = cfg.layout.weights
    if weights is None:
        weights = [1.0] * len(cfg.layout.positions)
    return CouplingLayout(
        positions=tuple(cfg.layout.positions),
        weights=tuple(weights),
        mode_coupling=cfg.layout.mode_coupling,
        velocity=cfg.layout.velocity,
    )


def frequency_unit(unit: str, layout: CouplingLayout) -> float:
    if unit == "angular":
        return 1.0
    return layout.natural_frequency() if layout.n_points > 1 else natural_unit(layout.velocity, 1.0)


def make_atom(cfg: RunConfig, layout: CouplingLayout, omega10: Optional[float] = None) -> AtomSpec:
    """AtomSpec in angular units. omega10, when given, is already angular."""
    unit = frequency_unit(cfg.atom.unit, layout)
    if omega10 is None:
        if cfg.atom.omega10 is None:
            raise ConfigError("atom.omega10 is required for this command", "atom.omega10")
        omega10 = cfg.atom.omega10 * unit
    return AtomSpec(
        levels=cfg.atom.levels,
        omega10=omega10,
        anharmonicity=cfg.atom.anharmonicity * unit,
        ladder_model=cfg.atom.ladder_model,
    )


def make_environment(cfg: RunConfig) -> Environment:
    env_cfg = cfg.environment
    return Environment(
        dos=make_dos(env_cfg.dos.type, env_cfg.dos.value),
        temperature=env_cfg.temperature,
        cutoff=env_cfg.cutoff,
    )


def make_mirror(cfg: RunConfig, force: bool = False) -> Optional[MirrorSpec]:
    if not (cfg.mirror.enabled or force):
        return None
    return MirrorSpec(phase=cfg.mirror.phase, enabled=True, distance=cfg.mirror.distance)


def make_drive(cfg: RunConfig) -> Optional[DriveSpec]:
    if cfg.drive.amplitude == 0:
        return None
    return DriveSpec(amplitude=cfg.drive.amplitude, pair=tuple(cfg.drive.pair), detuning=cfg.drive.detuning)


def make_quadrature(cfg: RunConfig) -> PVQuadratureConfig:
    return PVQuadratureConfig(**dataclasses.asdict(cfg.quadrature))


def make_grid(
    cfg: RunConfig,
    layout: CouplingLayout,
    default_min: Optional[float] = None,
    default_max: Optional[float] = None,
) -> RealArray:
    """Angular frequency grid from the grid section."""
    lo = cfg.grid.min if cfg.grid.min is not None else default_min
    hi = cfg.grid.max if cfg.grid.max is not None else default_max
    if lo is None or hi is None:
        raise ConfigError("grid.min and grid.max are required for this command", "grid")
    if not 0 < lo < hi:
        raise ConfigError(f"grid needs 0 < min < max, got [{lo}, {hi}]", "grid.min")
    if cfg.grid.points < 1:
        raise ConfigError("grid.points must be >= 1", "grid.points")
    if cfg.grid.points == 1:
        return np.array([lo]) * frequency_unit(cfg.grid.unit, layout)
    return np.linspace(lo, hi, cfg.grid.points) * frequency_unit(cfg.grid.unit, layout)
