"""Multi-start Nelder-Mead fit of a coupling layout to a target response.

Layouts are parameterized as (gaps, weights): x_1 = 0 and x_{k+1} = x_k + gap_k
with every gap bounded below by min_gap, so positions stay ordered for any
point the simplex visits.
"""

from __future__ import annotations

# Standard Library
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

# Third Party
import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy.optimize import minimize

# GiantAtom
from giantatom.core.layout import CouplingLayout
from giantatom.design.objective import DesignTarget, evaluate_objective
from giantatom.errors import ValidationError
from giantatom.utils.logging import get_logger
from giantatom.utils.random import spawn_generators
from giantatom.utils.types import RealArray

logger = get_logger(__name__)


@dataclass(frozen=True)
class DesignBounds:
    min_gap: float = 0.05
    max_gap: float = 4.0
    max_weight: float = 10.0

    def __post_init__(self):
        if not 0 < self.min_gap < self.max_gap:
            raise ValidationError("need 0 < min_gap < max_gap", "bounds.min_gap")
        if not self.max_weight > 0:
            raise ValidationError("max_weight must be > 0", "bounds.max_weight")


@dataclass(frozen=True)
class FitConfig:
    n_restarts: int = 16
    max_iter: int = 4000
    xatol: float = 1e-10
    fatol: float = 1e-16
    # Relative size of the random kick applied to restarts 1..n-1.
    perturbation: float = 0.2
    n_jobs: int = 1


@dataclass
class DesignResult:
    layout: CouplingLayout
    residual: float
    iterations: int
    restart: int
    residuals: List[float] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        rows = [
            ("residual", self.residual),
            ("iterations", self.iterations),
            ("restart", self.restart),
        ]
        rows += [(f"position_{k}", x) for k, x in enumerate(self.layout.positions)]
        rows += [(f"weight_{k}", g) for k, g in enumerate(self.layout.weights)]
        return pd.DataFrame(rows, columns=["parameter", "value"])


def pack(layout: CouplingLayout) -> RealArray:
    return np.concatenate([np.diff(layout.x), layout.g])


def unpack(params: RealArray, template: CouplingLayout) -> CouplingLayout:
    n = template.n_points
    gaps, weights = params[: n - 1], params[n - 1 :]
    positions = np.concatenate([[0.0], np.cumsum(gaps)])
    return CouplingLayout(
        positions=tuple(positions),
        weights=tuple(np.maximum(weights, 0.0)),
        mode_coupling=template.mode_coupling,
        velocity=template.velocity,
    )


def _bounds(n_points: int, bounds: DesignBounds) -> List[Tuple[float, float]]:
    return [(bounds.min_gap, bounds.max_gap)] * (n_points - 1) + [(0.0, bounds.max_weight)] * n_points


def _clip(params: RealArray, limits: List[Tuple[float, float]]) -> RealArray:
    lo, hi = np.array(limits).T
    return np.clip(params, lo, hi)


def _run_restart(
    x0: RealArray,
    target: DesignTarget,
    template: CouplingLayout,
    limits: List[Tuple[float, float]],
    cfg: FitConfig,
) -> Tuple[float, RealArray, int, float]:
    def objective(params: RealArray) -> float:
        return evaluate_objective(unpack(params, template), target)

    start = objective(x0)
    result = minimize(
        objective,
        x0,
        method="Nelder-Mead",
        bounds=limits,
        options=dict(maxiter=cfg.max_iter, xatol=cfg.xatol, fatol=cfg.fatol, adaptive=True),
    )
    if result.fun <= start:
        return float(result.fun), np.asarray(result.x), int(result.nit), start
    return start, x0, int(result.nit), start


def fit_layout(
    target: DesignTarget,
    n_points: int,
    bounds: Optional[DesignBounds] = None,
    seed: int = 0,
    initial: Optional[CouplingLayout] = None,
    cfg: Optional[FitConfig] = None,
) -> DesignResult:
    """Best of cfg.n_restarts local searches.

    Restart 0 starts from `initial` (the symmetric layout with unit spacing
    and weights by default), the others from seeded perturbations of it.
    """
    bounds = bounds or DesignBounds()
    cfg = cfg or FitConfig()
    if n_points < 1:
        raise ValidationError(f"need at least one connection point, got {n_points}", "n_points")
    if initial is None:
        initial = CouplingLayout.symmetric(n_points)
    elif initial.n_points != n_points:
        raise ValidationError(
            f"initial layout has {initial.n_points} points, expected {n_points}", "initial"
        )

    limits = _bounds(n_points, bounds)
    x_init = _clip(pack(initial), limits)
    starts = [x_init]
    for rng in spawn_generators(seed, cfg.n_restarts)[1:]:
        kick = cfg.perturbation * rng.standard_normal(len(x_init)) * np.maximum(np.abs(x_init), 1.0)
        starts.append(_clip(x_init + kick, limits))

    if cfg.n_jobs == 1:
        results = [_run_restart(x0, target, initial, limits, cfg) for x0 in starts]
    else:
        results = Parallel(n_jobs=cfg.n_jobs)(
            delayed(_run_restart)(x0, target, initial, limits, cfg) for x0 in starts
        )

    residuals = [r[0] for r in results]
    best = int(np.argmin(residuals))
    residual, params, iterations, _ = results[best]
    if all(r[0] >= r[3] for r in results) and residual > 0:
        logger.warning("No restart improved on its starting layout")
    logger.info(f"fit_layout: best residual {residual:.3e} from restart {best} of {len(results)}")
    return DesignResult(
        layout=unpack(params, initial),
        residual=residual,
        iterations=iterations,
        restart=best,
        residuals=residuals,
    )
