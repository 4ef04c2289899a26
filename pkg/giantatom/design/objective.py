from __future__ import annotations

# Standard Library
from dataclasses import dataclass, field
from typing import Optional, Sequence

# Third Party
import numpy as np

# GiantAtom
from giantatom.core.bath import Environment
from giantatom.core.layout import CouplingLayout
from giantatom.errors import ValidationError
from giantatom.spectral.coupling import relaxation_rate
from giantatom.utils.types import RealArray

NORMALIZATIONS = ("absolute", "shape")


@dataclass
class DesignTarget:
    """Target relaxation rate Gamma_10(omega) sampled on a grid.

    With normalization "shape" only the form of the curve matters, the
    response is rescaled by its best-fit amplitude before comparing.
    """

    omegas: RealArray
    rates: RealArray
    weights: Optional[RealArray] = None
    normalization: str = "absolute"
    env: Environment = field(default_factory=Environment)

    def __post_init__(self):
        self.omegas = np.asarray(self.omegas, dtype=float)
        self.rates = np.asarray(self.rates, dtype=float)
        if self.weights is None:
            self.weights = np.ones_like(self.omegas)
        self.weights = np.asarray(self.weights, dtype=float)
        if not (self.omegas.shape == self.rates.shape == self.weights.shape) or self.omegas.ndim != 1:
            raise ValidationError("target grid, rates and weights must be 1D of equal length", "target")
        if len(self.omegas) == 0 or np.any(np.diff(self.omegas) <= 0) or self.omegas[0] <= 0:
            raise ValidationError("target grid must be positive and strictly increasing", "target.omegas")
        if np.any(self.rates < 0):
            raise ValidationError("target rates must be >= 0", "target.rates")
        if np.any(self.weights < 0):
            raise ValidationError("target weights must be >= 0", "target.weights")
        if self.normalization not in NORMALIZATIONS:
            raise ValidationError(f"Unknown normalization {self.normalization}", "target.normalization")

    @classmethod
    def from_layout(
        cls,
        layout: CouplingLayout,
        omegas: Sequence[float],
        env: Optional[Environment] = None,
        normalization: str = "absolute",
    ) -> "DesignTarget":
        env = env or Environment()
        return cls(
            omegas=np.asarray(omegas, dtype=float),
            rates=response(layout, omegas, env),
            normalization=normalization,
            env=env,
        )

    @property
    def norm(self) -> float:
        return float(np.sum(self.weights * self.rates**2))


def response(layout: CouplingLayout, omegas: Sequence[float], env: Environment) -> RealArray:
    """Gamma_10 of `layout` on the grid."""
    return np.asarray(relaxation_rate(np.asarray(omegas, dtype=float), 0, layout, env), dtype=float)


def best_fit_scale(values: RealArray, target: DesignTarget) -> float:
    """c minimizing sum_i w_i (c values_i - target_i)^2."""
    denominator = float(np.sum(target.weights * values**2))
    if denominator == 0:
        return 0.0
    return float(np.sum(target.weights * values * target.rates)) / denominator


def evaluate_objective(layout: CouplingLayout, target: DesignTarget) -> float:
    """Weighted least squares between the layout's response and the target."""
    values = response(layout, target.omegas, target.env)
    if target.normalization == "shape":
        values = best_fit_scale(values, target) * values
    return float(np.sum(target.weights * (values - target.rates) ** 2))
