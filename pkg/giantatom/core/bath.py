from __future__ import annotations

# Standard Library
from dataclasses import dataclass, field
from typing import Optional, Union

# Third Party
import numpy as np

# GiantAtom
from giantatom.config import DEFAULT_CUTOFF_RATIO
from giantatom.errors import ValidationError
from giantatom.utils.types import FloatLike


@dataclass(frozen=True)
class ConstantDOS:
    value: float = 1.0
    kind: str = field(default="constant", init=False)

    def __call__(self, omega: FloatLike):
        return self.value * np.ones_like(np.asarray(omega, dtype=float))


@dataclass(frozen=True)
class OhmicDOS:
    """J(omega) = slope * omega, the 1D transmission line."""

    slope: float = 1.0
    kind: str = field(default="ohmic", init=False)

    def __call__(self, omega: FloatLike):
        return self.slope * np.asarray(omega, dtype=float)


DensityOfStates = Union[ConstantDOS, OhmicDOS]


def make_dos(kind: str, value: float) -> DensityOfStates:
    if kind == "constant":
        return ConstantDOS(value)
    elif kind == "ohmic":
        return OhmicDOS(value)
    raise ValidationError(f"Unknown density of states {kind}", "environment.dos.type")


@dataclass(frozen=True)
class Environment:
    """The traced-out 1D field: density of states, temperature and cutoff."""

    dos: DensityOfStates = ConstantDOS()
    temperature: float = 0.0
    # None resolves to DEFAULT_CUTOFF_RATIO * omega10.
    cutoff: Optional[float] = None

    def __post_init__(self):
        if not self.temperature >= 0:
            raise ValidationError("environment.temperature must be >= 0", "environment.temperature")
        if self.cutoff is not None and not self.cutoff > 0:
            raise ValidationError("environment.cutoff must be > 0", "environment.cutoff")
        if self.dos.kind == "constant" and not self.dos.value >= 0:
            raise ValidationError("J(omega) must be >= 0", "environment.dos.value")
        if self.dos.kind == "ohmic" and not self.dos.slope >= 0:
            raise ValidationError("J(omega) must be >= 0", "environment.dos.value")

    def density(self, omega: FloatLike):
        return self.dos(omega)

    @property
    def kind(self) -> str:
        return self.dos.kind

    def cutoff_for(self, omega10: float) -> float:
        if self.cutoff is None:
            return DEFAULT_CUTOFF_RATIO * omega10
        return self.cutoff


def thermal_occupation(omega: FloatLike, T: float):
    """Mean boson number exp(-w/T) / (1 - exp(-w/T)), hbar = k_B = 1.

    T = 0 is exact: the result is identically zero.
    """
    omega_arr = np.asarray(omega, dtype=float)
    if np.any(omega_arr <= 0):
        raise ValueError("thermal_occupation requires omega > 0")
    if T < 0:
        raise ValueError("temperature must be >= 0")
    if T == 0:
        n = np.zeros_like(omega_arr)
    else:
        with np.errstate(over="ignore"):
            n = 1.0 / np.expm1(omega_arr / T)
    if n.ndim == 0:
        return float(n)
    return n
