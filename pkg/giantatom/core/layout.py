from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass
from typing import Optional, Tuple

# Third Party
import numpy as np

# GiantAtom
from giantatom.config import natural_unit
from giantatom.core.bath import Environment
from giantatom.errors import ValidationError
from giantatom.utils.types import RealArray

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class CouplingLayout:
    """Connection points x_k with relative weights g_k.

    mode_coupling is the frequency-independent g_j, velocity is v.
    """

    positions: Tuple[float, ...]
    weights: Tuple[float, ...]
    mode_coupling: float = 1.0
    velocity: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(float(x) for x in self.positions))
        object.__setattr__(self, "weights", tuple(float(g) for g in self.weights))
        if len(self.positions) < 1:
            raise ValidationError("layout needs at least one connection point", "layout.positions")
        if len(self.positions) != len(self.weights):
            raise ValidationError(
                f"{len(self.positions)} positions but {len(self.weights)} weights",
                "layout.weights",
            )
        for k in range(1, len(self.positions)):
            if not self.positions[k] > self.positions[k - 1]:
                raise ValidationError(
                    "connection points must be strictly increasing", f"layout.positions[{k}]"
                )
        for k, g in enumerate(self.weights):
            if not g >= 0:
                raise ValidationError(f"weight must be >= 0, got {g}", f"layout.weights[{k}]")
        if not self.velocity > 0:
            raise ValidationError("velocity must be > 0", "layout.velocity")

    @classmethod
    def symmetric(
        cls,
        n_points: int,
        spacing: float = 1.0,
        weight: float = 1.0,
        mode_coupling: float = 1.0,
        velocity: float = 1.0,
    ) -> "CouplingLayout":
        return cls(
            positions=tuple(spacing * k for k in range(n_points)),
            weights=(weight,) * n_points,
            mode_coupling=mode_coupling,
            velocity=velocity,
        )

    @property
    def n_points(self) -> int:
        return len(self.positions)

    @property
    def coupled(self) -> bool:
        return any(g > 0 for g in self.weights)

    @property
    def x(self) -> RealArray:
        return np.asarray(self.positions)

    @property
    def g(self) -> RealArray:
        return np.asarray(self.weights)

    def point_rates(self, omega: float, env: Environment) -> RealArray:
        """gamma_k = 4 pi g_j^2 g_k^2 J(omega)."""
        return 4 * math.pi * self.mode_coupling**2 * self.g**2 * float(env.density(omega))

    def phase_shifts(self, omega: float) -> RealArray:
        """phi_k = omega (x_{k+1} - x_k) / v, N - 1 values."""
        return omega * np.diff(self.x) / self.velocity

    def natural_frequency(self) -> float:
        spacing = self.positions[1] - self.positions[0] if self.n_points > 1 else 1.0
        return natural_unit(self.velocity, spacing)

    def scaled(self, factor: float) -> "CouplingLayout":
        return CouplingLayout(
            self.positions, tuple(factor * g for g in self.weights), self.mode_coupling, self.velocity
        )


@dataclass(frozen=True)
class MirrorSpec:
    """Perfect mirror to the right of the last connection point.

    phase is the round trip phase phi_M. When distance is set the phase is
    frequency dependent instead: phi_M = 2 omega d / v.
    """

    phase: float = 0.0
    enabled: bool = True
    distance: Optional[float] = None

    def __post_init__(self):
        if not math.isfinite(self.phase):
            raise ValidationError(f"mirror.phase must be finite, got {self.phase}", "mirror.phase")
        object.__setattr__(self, "phase", float(self.phase) % TWO_PI)
        if self.distance is not None and not self.distance >= 0:
            raise ValidationError("mirror.distance must be >= 0", "mirror.distance")

    def phase_at(self, omega: float, velocity: float = 1.0) -> float:
        if self.distance is None:
            return self.phase
        return (2 * omega * self.distance / velocity) % TWO_PI
