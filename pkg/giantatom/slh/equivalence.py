"""Cross-check of the cascaded-network triplet against the continuum formulas.

Random layouts are drawn as per-point rates gamma_k in [0, 1) and phase
shifts phi_k in [0, 2 pi). The matching continuum layout has J = 1, g_j = 1,
v = 1, omega10 = 1, weights sqrt(gamma_k / 4 pi) and positions given by the
cumulative phases.
"""

from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass
from typing import Optional

# Third Party
import numpy as np
import pandas as pd
from tqdm import tqdm

# GiantAtom
from giantatom.core.bath import ConstantDOS, Environment
from giantatom.core.layout import CouplingLayout
from giantatom.slh.giant_atom import giant_atom_triplet, rate_and_shift_from_triplet
from giantatom.slh.operators import lowering
from giantatom.spectral.coupling import relaxation_rate
from giantatom.spectral.lamb import hilbert_shift_closed_form, lamb_shift_hilbert
from giantatom.spectral.quadrature import PVQuadratureConfig
from giantatom.utils.logging import get_logger

logger = get_logger(__name__)

EQUIVALENCE_COLUMNS = (
    "layout",
    "n_points",
    "gamma_slh",
    "gamma_continuum",
    "delta_slh",
    "delta_b",
    "delta_hilbert",
)


def continuum_layout(gammas: np.ndarray, phases: np.ndarray) -> CouplingLayout:
    positions = np.concatenate([[0.0], np.cumsum(phases)])
    weights = np.sqrt(np.asarray(gammas) / (4 * math.pi))
    return CouplingLayout(positions=tuple(positions), weights=tuple(weights))


@dataclass
class EquivalenceReport:
    table: pd.DataFrame

    @property
    def max_rate_error(self) -> float:
        return float(np.max(np.abs(self.table.gamma_slh - self.table.gamma_continuum)))

    @property
    def max_shift_error(self) -> float:
        return float(np.max(np.abs(self.table.delta_slh - self.table.delta_b)))

    @property
    def max_hilbert_error(self) -> float:
        """Largest |Hilbert - B| relative to the total rate scale sum_k gamma_k."""
        if self.table.delta_hilbert.isna().all():
            return float("nan")
        error = np.abs(self.table.delta_hilbert - self.table.delta_b) / np.maximum(
            self.table.gamma_continuum.abs(), 1.0
        )
        return float(np.max(error))

    def summary(self) -> str:
        return (
            f"max |gamma_slh - gamma_continuum| = {self.max_rate_error:.3e}, "
            f"max |delta_slh - delta_b| = {self.max_shift_error:.3e}, "
            f"max relative |delta_hilbert - delta_b| = {self.max_hilbert_error:.3e}"
        )


def equivalence_report(
    n_layouts: int = 200,
    max_points: int = 6,
    seed: int = 42,
    with_hilbert: bool = True,
    quad: Optional[PVQuadratureConfig] = None,
    progress: bool = False,
) -> EquivalenceReport:
    rng = np.random.default_rng(seed)
    env = Environment(dos=ConstantDOS(1.0))
    jump = lowering(0, 2)
    rows = []
    for i in tqdm(range(n_layouts), disable=not progress):
        n = int(rng.integers(1, max_points + 1))
        gammas = rng.uniform(0.0, 1.0, size=n)
        phases = rng.uniform(0.0, 2 * math.pi, size=n - 1)
        # Coincident points are not a valid layout.
        phases = np.maximum(phases, 1e-9)

        gamma_slh, delta_slh = rate_and_shift_from_triplet(giant_atom_triplet(gammas, phases, jump))
        layout = continuum_layout(gammas, phases)
        delta_hilbert = lamb_shift_hilbert(1.0, layout, env, quad) if with_hilbert else float("nan")
        rows.append(
            dict(
                layout=i,
                n_points=n,
                gamma_slh=gamma_slh,
                gamma_continuum=relaxation_rate(1.0, 0, layout, env),
                delta_slh=delta_slh,
                delta_b=hilbert_shift_closed_form(1.0, layout, env),
                delta_hilbert=delta_hilbert,
            )
        )
    report = EquivalenceReport(pd.DataFrame(rows, columns=list(EQUIVALENCE_COLUMNS)))
    logger.info(report.summary())
    return report
