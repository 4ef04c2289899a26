from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass
from typing import Callable, Dict

# Third Party
import numpy as np

# GiantAtom
from giantatom.errors import ValidationError
from giantatom.utils.types import RealArray

LadderRule = Callable[[int], float]

LADDER_MODELS: Dict[str, LadderRule] = {
    # Transmon and other near-harmonic atoms.
    "transmon": lambda m: math.sqrt(m + 1),
    "two-level": lambda m: 1.0 if m == 0 else 0.0,
    "constant": lambda m: 1.0,
}


def ladder_coupling(m: int, model: str = "transmon") -> float:
    """g_m, the matrix element of transition |m> <-> |m+1>."""
    if m < 0:
        raise ValueError(f"level index must be >= 0, got {m}")
    if model not in LADDER_MODELS:
        raise ValueError(f"Unknown ladder model {model}")
    return LADDER_MODELS[model](m)


@dataclass(frozen=True)
class AtomSpec:
    """Truncated ladder with linear anharmonicity.

    omega_{m+1,m} = omega10 + m * anharmonicity, hbar = 1.
    """

    levels: int
    omega10: float
    anharmonicity: float = 0.0
    ladder_model: str = "transmon"

    def __post_init__(self):
        if self.levels < 2:
            raise ValidationError(f"atom.levels must be >= 2, got {self.levels}", "atom.levels")
        if self.ladder_model not in LADDER_MODELS:
            raise ValidationError(f"Unknown ladder model {self.ladder_model}", "atom.ladder_model")
        top = self.omega10 + (self.levels - 2) * self.anharmonicity
        if self.omega10 <= 0 or top <= 0:
            raise ValidationError(
                "all transition frequencies must be positive "
                f"(omega10={self.omega10}, highest={top})",
                "atom.anharmonicity" if self.omega10 > 0 else "atom.omega10",
            )

    def coupling(self, m: int) -> float:
        """g_m with the truncation applied: zero outside 0 <= m < levels - 1."""
        if m < 0 or m >= self.levels - 1:
            return 0.0
        return ladder_coupling(m, self.ladder_model)

    def transition_frequencies(self) -> RealArray:
        m = np.arange(self.levels - 1)
        return self.omega10 + m * self.anharmonicity

    def level_energies(self) -> RealArray:
        return np.concatenate([[0.0], np.cumsum(self.transition_frequencies())])

    @property
    def n_transitions(self) -> int:
        return self.levels - 1


def transition_frequency(atom: AtomSpec, m: int) -> float:
    if m < 0 or m >= atom.levels - 1:
        raise IndexError(f"transition index {m} out of range for a {atom.levels}-level atom")
    return atom.omega10 + m * atom.anharmonicity
