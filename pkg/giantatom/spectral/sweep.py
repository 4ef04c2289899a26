from __future__ import annotations

# Standard Library
import dataclasses
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

# Third Party
import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

# GiantAtom
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import Environment
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.errors import QuadratureError
from giantatom.spectral.coupling import mirror_rate, relaxation_rate
from giantatom.spectral.lamb import (
    ShiftMode,
    default_shift_mode,
    hilbert_tail,
    transition_shifts,
)
from giantatom.spectral.quadrature import PVQuadratureConfig
from giantatom.utils.logging import get_logger
from giantatom.utils.types import RealArray

logger = get_logger(__name__)


def rate_column(m: int) -> str:
    return f"gamma_{m + 1}{m}"


def shift_column(m: int) -> str:
    # Transition m+1 -> m, named after its upper level.
    return f"delta_{m + 1}"


@dataclass
class SpectralResponse:
    """Rates and transition shifts tabulated against omega_10.

    rates[i, m] is Gamma_{m+1,m} and shifts[i, m] is Delta_{m+1} - Delta_m
    for the atom with first transition frequency grid[i].
    """

    grid: RealArray
    rates: RealArray
    shifts: RealArray
    natural_frequency: float = 1.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert self.rates.shape == self.shifts.shape, "rates and shifts must align"
        assert self.rates.shape[0] == len(self.grid), "one row per grid point"

    @property
    def n_transitions(self) -> int:
        return self.rates.shape[1]

    def to_frame(self) -> pd.DataFrame:
        columns: Dict[str, RealArray] = {
            "omega": self.grid,
            "phi_over_2pi": self.grid / self.natural_frequency,
        }
        for m in range(self.n_transitions):
            columns[rate_column(m)] = self.rates[:, m]
        for m in range(self.n_transitions):
            columns[shift_column(m)] = self.shifts[:, m]
        return pd.DataFrame(columns)


def validate_grid(grid: Sequence[float]) -> RealArray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0:
        raise ValueError("frequency grid must be a nonempty 1D sequence")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("frequency grid must be strictly increasing")
    if grid[0] <= 0:
        raise ValueError("frequency grid must be positive")
    return grid


def _sweep_point(
    omega10: float,
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    mirror: Optional[MirrorSpec],
    mode: ShiftMode,
    quad: PVQuadratureConfig,
) -> Tuple[RealArray, RealArray]:
    point_atom = dataclasses.replace(atom, omega10=float(omega10))
    frequencies = point_atom.transition_frequencies()
    rates = np.empty(point_atom.n_transitions)
    for m, omega in enumerate(frequencies):
        if mirror is not None and mirror.enabled:
            rate = mirror_rate(omega, layout, mirror, env)
        else:
            rate = relaxation_rate(omega, 0, layout, env)
        rates[m] = point_atom.coupling(m) ** 2 * rate
    try:
        shifts = transition_shifts(point_atom, layout, env, mode, quad, mirror)
    except QuadratureError as e:
        raise e.at_grid_point(float(omega10)) from e
    return rates, shifts


def spectrum_sweep(
    layout: CouplingLayout,
    atom: AtomSpec,
    env: Environment,
    grid: Sequence[float],
    mirror: Optional[MirrorSpec] = None,
    shift_mode: Optional[ShiftMode] = None,
    quad: Optional[PVQuadratureConfig] = None,
    n_jobs: int = 1,
    progress: bool = False,
) -> SpectralResponse:
    """Tabulates every transition's rate and shift while sweeping omega_10.

    The anharmonicity is kept fixed, so transition m sits at
    grid[i] + m * anharmonicity. Grid points are independent and are
    distributed over n_jobs joblib workers when n_jobs != 1.
    """
    grid = validate_grid(grid)
    mode = ShiftMode(shift_mode) if shift_mode is not None else default_shift_mode(env)
    quad = quad or PVQuadratureConfig()
    logger.debug(f"Sweeping {len(grid)} points, {atom.n_transitions} transitions, shifts: {mode.value}")

    points = tqdm(grid, disable=not progress)
    if n_jobs == 1:
        results = [_sweep_point(w, atom, layout, env, mirror, mode, quad) for w in points]
    else:
        results = Parallel(n_jobs=n_jobs)(
            delayed(_sweep_point)(w, atom, layout, env, mirror, mode, quad) for w in points
        )
    rates = np.stack([r for r, _ in results])
    shifts = np.stack([s for _, s in results])

    metadata: Dict[str, Any] = dict(
        layout=dataclasses.asdict(layout),
        atom=dataclasses.asdict(atom),
        environment=dict(
            dos=env.kind,
            dos_value=float(env.density(1.0)),
            temperature=env.temperature,
            cutoff=env.cutoff,
        ),
        mirror=dataclasses.asdict(mirror) if mirror is not None else None,
        shift_mode=mode.value,
    )
    if mode == ShiftMode.HILBERT_QUADRATURE:
        metadata["hilbert_window"] = quad.hilbert_window
        tails = [abs(hilbert_tail(w, layout, quad)) for w in grid]
        metadata["hilbert_tail_max"] = float(max(tails))
    return SpectralResponse(
        grid=grid,
        rates=rates,
        shifts=shifts,
        natural_frequency=layout.natural_frequency(),
        metadata=metadata,
    )
