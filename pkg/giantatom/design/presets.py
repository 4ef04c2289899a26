from __future__ import annotations

# Standard Library
from typing import List, Tuple

# Third Party
import numpy as np

# GiantAtom
from giantatom.config import PRESET_ALIASES, DESIGNED_LAYOUTS
from giantatom.core.layout import CouplingLayout
from giantatom.errors import UnknownPresetError
from giantatom.utils.types import RealArray

Extremum = Tuple[float, float]


def preset_names() -> List[str]:
    return list(DESIGNED_LAYOUTS) + list(PRESET_ALIASES)


def preset_fig3(
    name: str,
    spacing: float = 1.0,
    mode_coupling: float = 1.0,
    velocity: float = 1.0,
) -> CouplingLayout:
    """Designed four-point layouts, positions in units of x_2 - x_1 = spacing."""
    key = PRESET_ALIASES.get(name, name)
    if key not in DESIGNED_LAYOUTS:
        raise UnknownPresetError(f"Unknown preset {name}, expected one of {preset_names()}")
    preset = DESIGNED_LAYOUTS[key]
    return CouplingLayout(
        positions=tuple(spacing * x for x in preset["positions"]),
        weights=preset["weights"],
        mode_coupling=mode_coupling,
        velocity=velocity,
    )


def _refine(grid: RealArray, values: RealArray, i: int) -> Extremum:
    # Vertex of the parabola through three neighbouring samples.
    x0, x1, x2 = grid[i - 1 : i + 2]
    y0, y1, y2 = values[i - 1 : i + 2]
    denominator = (x0 - x1) * (x0 - x2) * (x1 - x2)
    a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denominator
    b = (x2**2 * (y0 - y1) + x1**2 * (y2 - y0) + x0**2 * (y1 - y2)) / denominator
    if a == 0:
        return float(x1), float(y1)
    x = -b / (2 * a)
    c = y1 - a * x1**2 - b * x1
    return float(x), float(a * x**2 + b * x + c)


def find_local_extrema(grid: RealArray, values: RealArray, kind: str = "max") -> List[Extremum]:
    """Interior local maxima (or minima) of sampled data, refined parabolically."""
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(values, dtype=float)
    assert kind in ("max", "min"), f"kind must be max or min, got {kind}"
    sign = 1.0 if kind == "max" else -1.0
    v = sign * values
    extrema = []
    for i in range(1, len(grid) - 1):
        if v[i] > v[i - 1] and v[i] >= v[i + 1]:
            extrema.append(_refine(grid, values, i))
    return extrema


def _contiguous_width(grid: RealArray, inside: np.ndarray, center: int) -> float:
    lo = center
    while lo > 0 and inside[lo - 1]:
        lo -= 1
    hi = center
    while hi < len(grid) - 1 and inside[hi + 1]:
        hi += 1
    return float(grid[hi] - grid[lo])


def plateau_width(grid: RealArray, values: RealArray, fraction: float = 0.9) -> float:
    """Width of the region around the global maximum where values >= fraction * max."""
    values = np.asarray(values, dtype=float)
    center = int(np.argmax(values))
    return _contiguous_width(np.asarray(grid), values >= fraction * values[center], center)


def valley_width(grid: RealArray, values: RealArray, level: float, center: int) -> float:
    """Width of the region around index `center` where values <= level."""
    values = np.asarray(values, dtype=float)
    return _contiguous_width(np.asarray(grid), values <= level, center)
