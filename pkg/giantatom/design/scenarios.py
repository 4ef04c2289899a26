"""Three-level applications of a symmetric giant atom.

Frequencies are set in natural units 2 pi v / (x_2 - x_1), where the
symmetric layout's rate has its maxima at integers and zeros at multiples
of 1/N.
"""

from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass
from typing import Optional, Sequence

# Third Party
import numpy as np
import pandas as pd

# GiantAtom
from giantatom.config import SCENARIO_LEVELS
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import ConstantDOS, Environment
from giantatom.core.layout import CouplingLayout
from giantatom.dynamics.generator import build_generator, transition_rates
from giantatom.dynamics.solver import evolve, steady_state
from giantatom.dynamics.types import DriveSpec, basis_state, populations
from giantatom.errors import DegenerateSteadyStateError, ValidationError
from giantatom.spectral.coupling import coupling_strength
from giantatom.spectral.lamb import ShiftMode, level_shifts
from giantatom.spectral.quadrature import PVQuadratureConfig
from giantatom.utils.logging import get_logger
from giantatom.utils.types import RealArray

logger = get_logger(__name__)

# Per-point rate small enough for the rotating-wave approximation at N = 10.
DEFAULT_POINT_RATE = 1e-4

# Rates below this fraction of N^2 gamma count as interference zeros.
ZERO_TOL = 1e-12


def symmetric_atom_layout(
    n_points: int, gamma: float, spacing: float = 1.0, velocity: float = 1.0
) -> CouplingLayout:
    """Symmetric layout whose per-point rate at J = 1 is gamma."""
    if n_points < 2:
        raise ValidationError(f"scenarios need a giant atom, got N = {n_points}", "n_points")
    weight = math.sqrt(gamma / (4 * math.pi))
    return CouplingLayout.symmetric(n_points, spacing=spacing, weight=weight, velocity=velocity)


def scenario_atom(layout: CouplingLayout, omega10: float, anharmonicity: float) -> AtomSpec:
    unit = layout.natural_frequency()
    return AtomSpec(levels=SCENARIO_LEVELS, omega10=omega10 * unit, anharmonicity=anharmonicity * unit)


@dataclass
class InversionReport:
    n_points: int
    gamma: float
    omega10: float
    anharmonicity: float
    gamma_10: float
    gamma_21: float
    amplitudes: RealArray
    populations: RealArray

    @property
    def inverted(self) -> np.ndarray:
        return self.populations[:, 1] > self.populations[:, 0]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame({"amplitude": self.amplitudes})
        for m in range(self.populations.shape[1]):
            frame[f"p{m}"] = self.populations[:, m]
        frame["inverted"] = self.inverted.astype(int)
        frame["gamma_10"] = self.gamma_10
        frame["gamma_21"] = self.gamma_21
        return frame


def driven_populations(gen, relax_time: float) -> RealArray:
    """Stationary populations, or the state reached from the ground state
    after relax_time when the stationary state is not unique."""
    try:
        return populations(steady_state(gen))
    except DegenerateSteadyStateError as e:
        logger.debug(f"{e}, evolving from the ground state instead")
        trajectory = evolve(gen, basis_state(0, gen.dim), [0.0, relax_time])
        return trajectory.populations()[-1]


def scenario_inversion(
    n_points: int = 10,
    gamma: float = DEFAULT_POINT_RATE,
    amplitudes: Optional[Sequence[float]] = None,
    temperature: float = 0.0,
) -> InversionReport:
    """Pump |0> -> |2>, fast decay |2> -> |1>, dark |1> -> |0>.

    omega10 = 1.1 and anharmonicity -0.1 natural units put transition 1-0 on
    an interference zero and transition 2-1 on the N^2 maximum. Drive
    amplitudes default to multiples of Gamma_21.
    """
    layout = symmetric_atom_layout(n_points, gamma)
    atom = scenario_atom(layout, 1.1, -0.1)
    env = Environment(dos=ConstantDOS(1.0), temperature=temperature)
    gamma_10, gamma_21 = transition_rates(atom, layout, env)
    if amplitudes is None:
        amplitudes = np.array([0.0, 0.1, 0.5, 1.0, 2.0, 5.0]) * gamma_21
    amplitudes = np.asarray(amplitudes, dtype=float)

    relax_time = 100.0 / max(gamma_21, 1e-300)
    rows = []
    for amplitude in amplitudes:
        gen = build_generator(atom, layout, env, drive=DriveSpec(amplitude, (0, 2)))
        rows.append(driven_populations(gen, relax_time))
    report = InversionReport(
        n_points=n_points,
        gamma=gamma,
        omega10=atom.omega10,
        anharmonicity=atom.anharmonicity,
        gamma_10=float(gamma_10),
        gamma_21=float(gamma_21),
        amplitudes=amplitudes,
        populations=np.array(rows),
    )
    logger.info(
        f"Inversion N={n_points}: gamma_10={gamma_10:.3e}, gamma_21={gamma_21:.3e}, "
        f"inverted for {int(report.inverted.sum())} of {len(amplitudes)} drive amplitudes"
    )
    return report


@dataclass
class MultiphotonReport:
    n_points: int
    gamma: float
    omega10: float
    omega21: float
    gamma_10: float
    gamma_21: float
    two_photon_strength: float
    max_strength: float

    @property
    def at_maximum(self) -> bool:
        return math.isclose(self.two_photon_strength, self.max_strength, rel_tol=1e-9)

    @property
    def ideal(self) -> bool:
        zero = ZERO_TOL * self.n_points**2 * self.gamma
        return self.gamma_10 <= zero and self.gamma_21 <= zero and self.at_maximum

    def to_frame(self) -> pd.DataFrame:
        rows = [
            ("omega10", self.omega10),
            ("omega21", self.omega21),
            ("gamma_10", self.gamma_10),
            ("gamma_21", self.gamma_21),
            ("two_photon_strength", self.two_photon_strength),
            ("max_strength", self.max_strength),
            ("ideal", float(self.ideal)),
        ]
        return pd.DataFrame(rows, columns=["quantity", "value"])


def scenario_multiphoton(n_points: int = 10, gamma: float = DEFAULT_POINT_RATE) -> MultiphotonReport:
    """Both single-photon transitions on zeros, |A|^2 maximal at omega20 / 2."""
    layout = symmetric_atom_layout(n_points, gamma)
    atom = scenario_atom(layout, 1.1, -0.2)
    env = Environment(dos=ConstantDOS(1.0))
    gamma_10, gamma_21 = transition_rates(atom, layout, env)
    omega10, omega21 = atom.transition_frequencies()
    report = MultiphotonReport(
        n_points=n_points,
        gamma=gamma,
        omega10=float(omega10),
        omega21=float(omega21),
        gamma_10=float(gamma_10),
        gamma_21=float(gamma_21),
        two_photon_strength=float(coupling_strength(0.5 * (omega10 + omega21), layout)),
        max_strength=float((layout.mode_coupling * sum(layout.weights)) ** 2),
    )
    if not report.ideal:
        logger.warning(
            f"N={n_points} does not place both transitions on interference zeros "
            f"(gamma_10={gamma_10:.3e}, gamma_21={gamma_21:.3e})"
        )
    return report


@dataclass
class AnharmonicityReport:
    n_points: int
    gamma: float
    anharmonicity: float
    shift_mode: str
    natural_frequency: float
    omega10: RealArray
    delta_10: RealArray
    delta_21: RealArray
    # Changes larger than this fraction of |anharmonicity| are flagged.
    validity_fraction: float = 0.5

    @property
    def anharmonicity_change(self) -> RealArray:
        return self.delta_21 - self.delta_10

    @property
    def valid(self) -> np.ndarray:
        return np.abs(self.anharmonicity_change) < self.validity_fraction * abs(self.anharmonicity)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "omega10": self.omega10,
                "phi_over_2pi": self.omega10 / self.natural_frequency,
                "delta_10": self.delta_10,
                "delta_21": self.delta_21,
                "anharmonicity_change": self.anharmonicity_change,
                "valid": self.valid.astype(int),
            }
        )


def scenario_anharmonicity(
    n_points: int = 10,
    gamma: float = DEFAULT_POINT_RATE,
    grid: Optional[Sequence[float]] = None,
    shift_mode: ShiftMode = ShiftMode.HILBERT,
    quad: Optional[PVQuadratureConfig] = None,
) -> AnharmonicityReport:
    """Transition shifts of the two lowest transitions while omega10 crosses
    the N^2 maximum at 1 natural unit. grid is in natural units."""
    layout = symmetric_atom_layout(n_points, gamma)
    unit = layout.natural_frequency()
    grid = np.linspace(0.9, 1.1, 201) if grid is None else np.asarray(grid, dtype=float)
    env = Environment(dos=ConstantDOS(1.0))
    delta_10 = np.empty(len(grid))
    delta_21 = np.empty(len(grid))
    for i, f in enumerate(grid):
        atom = scenario_atom(layout, f, -0.1)
        shifts = level_shifts(atom, layout, env, shift_mode, quad)
        delta_10[i] = shifts[1] - shifts[0]
        delta_21[i] = shifts[2] - shifts[1]
    report = AnharmonicityReport(
        n_points=n_points,
        gamma=gamma,
        anharmonicity=-0.1 * unit,
        shift_mode=ShiftMode(shift_mode).value,
        natural_frequency=unit,
        omega10=grid * unit,
        delta_10=delta_10,
        delta_21=delta_21,
    )
    if not report.valid.all():
        logger.warning("Anharmonicity change is not small against the anharmonicity for part of the sweep")
    return report
