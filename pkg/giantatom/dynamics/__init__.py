from .generator import build_generator, transition_rates
from .solver import IntegratorConfig, Trajectory, evolve, steady_state
from .types import (
    DriveSpec,
    LindbladGenerator,
    basis_state,
    maximally_mixed,
    populations,
    thermal_state,
    validate_density_matrix,
)
