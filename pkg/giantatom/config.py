# Standard Library
import math

# omega_c / omega_10, the superconducting gap estimate for a 5 GHz transmon.
DEFAULT_CUTOFF_RATIO = 20.0

# Half-width of the truncated Hilbert integral, in units of omega_10.
DEFAULT_HILBERT_WINDOW = 50.0

# Phases closer than this to a multiple of 2*pi use the regular sum forms.
NEAR_RESONANCE_PHASE = 1e-6

# Level count used by the application scenarios (levels 0, 1, 2).
SCENARIO_LEVELS = 3

FREQUENCY_UNITS = ("natural", "angular")

DESIGNED_LAYOUTS = {
    "two-maxima": dict(weights=(1.0, 1.0, 1.0, 1.0), positions=(0.0, 1.0, 1.5, 3.0)),
    "flat-maximum": dict(weights=(1.0, 3.0, 3.0, 1.0), positions=(0.0, 1.0, 2.0, 3.5)),
    "shallow-minima": dict(weights=(1.0, 4.0, 4.0, 1.0), positions=(0.0, 1.0, 2.0, 3.0)),
}

PRESET_ALIASES = {
    "fig3-a": "two-maxima",
    "fig3-b": "flat-maximum",
    "fig3-c": "shallow-minima",
}

def natural_unit(velocity: float, spacing: float) -> float:
    """2*pi*v/(x_2 - x_1), the natural frequency scale of a layout."""
    assert spacing > 0, "spacing must be positive"
    return 2 * math.pi * velocity / spacing
