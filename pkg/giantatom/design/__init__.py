from .fitting import DesignBounds, DesignResult, FitConfig, fit_layout
from .objective import DesignTarget, best_fit_scale, evaluate_objective, response
from .presets import find_local_extrema, plateau_width, preset_fig3, preset_names, valley_width
from .scenarios import (
    AnharmonicityReport,
    InversionReport,
    MultiphotonReport,
    scenario_anharmonicity,
    scenario_inversion,
    scenario_multiphoton,
)
