from __future__ import annotations

# Standard Library
from typing import Optional

# Third Party
import numpy as np

# GiantAtom
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import Environment, thermal_occupation
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.dynamics.types import DriveSpec, LindbladGenerator
from giantatom.errors import ValidationError
from giantatom.slh.operators import ket_bra, lowering, projector, raising
from giantatom.spectral.coupling import mirror_rate, relaxation_rate
from giantatom.spectral.lamb import ShiftMode, default_shift_mode, level_shifts
from giantatom.spectral.quadrature import PVQuadratureConfig
from giantatom.utils.logging import get_logger
from giantatom.utils.types import Operator, RealArray

logger = get_logger(__name__)


def transition_rates(
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    mirror: Optional[MirrorSpec] = None,
) -> RealArray:
    """Gamma_{m+1,m} for every transition, g_m^2 included."""
    rates = np.empty(atom.n_transitions)
    for m, omega in enumerate(atom.transition_frequencies()):
        if mirror is not None and mirror.enabled:
            rate = mirror_rate(omega, layout, mirror, env)
        else:
            rate = relaxation_rate(omega, 0, layout, env)
        rates[m] = atom.coupling(m) ** 2 * rate
    return rates


def _drive_hamiltonian(dim: int, drive: DriveSpec) -> Operator:
    # Frame: every level rotates at its own shifted energy except the upper
    # driven level, which rotates with the lower one plus the drive frequency.
    m, n = drive.lower, drive.upper
    if n >= dim:
        raise ValidationError(f"drive pair {drive.pair} outside a {dim}-level atom", "drive.pair")
    H = drive.detuning * projector(n, dim)
    H += 0.5 * drive.amplitude * (ket_bra(m, n, dim) + ket_bra(n, m, dim))
    return H


def build_generator(
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    mirror: Optional[MirrorSpec] = None,
    drive: Optional[DriveSpec] = None,
    shift_mode: Optional[ShiftMode] = None,
    quad: Optional[PVQuadratureConfig] = None,
) -> LindbladGenerator:
    """Multi-level master equation of the giant atom.

    Without a drive the Hamiltonian is sum_m (omega_m + Delta_m) |m><m| in the
    lab frame. With a drive it is written in the frame rotating with the
    drive, where only the upper driven level keeps its detuning.
    """
    mode = ShiftMode(shift_mode) if shift_mode is not None else default_shift_mode(env)
    rates = transition_rates(atom, layout, env, mirror)
    if atom.levels > 2 and np.any(rates >= abs(atom.anharmonicity)):
        logger.warning(
            f"Relaxation rate {rates.max():.3g} is not small against the anharmonicity "
            f"{atom.anharmonicity:.3g}, the rotating-wave approximation is questionable"
        )

    energies = atom.level_energies() + level_shifts(atom, layout, env, mode, quad, mirror)
    if drive is None:
        hamiltonian = np.diag(energies).astype(complex)
    else:
        hamiltonian = _drive_hamiltonian(atom.levels, drive)

    channels = []
    for m, (rate, omega) in enumerate(zip(rates, atom.transition_frequencies())):
        if rate == 0:
            continue
        nbar = thermal_occupation(omega, env.temperature)
        channels.append((rate * (1 + nbar), lowering(m, atom.levels)))
        if nbar > 0:
            channels.append((rate * nbar, raising(m, atom.levels)))
    return LindbladGenerator(hamiltonian=hamiltonian, channels=channels)
