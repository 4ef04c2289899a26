from .equivalence import EquivalenceReport, equivalence_report
from .giant_atom import (
    amplitudes_from_triplet,
    attach_mirror,
    build_giant_atom,
    closed_form_amplitudes,
    detuning_hamiltonian,
    giant_atom_triplet,
    rate_and_shift_from_triplet,
    to_master_equation,
)
from .operators import dagger, ket_bra, lowering, projector, raising, sigma_z
from .triplet import SLHTriplet, concat, feedback, identity_triplet, phase_triplet, series
