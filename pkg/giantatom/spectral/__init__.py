from .coupling import (
    coupling_factor,
    coupling_strength,
    mirror_lamb_correction,
    mirror_rate,
    phasor_amplitudes,
    relaxation_rate,
    right_left_amplitudes,
)
from .lamb import (
    ShiftMode,
    default_shift_mode,
    hilbert_shift_closed_form,
    hilbert_tail,
    lamb_shift_hilbert,
    lamb_shift_renormalized,
    lamb_stark_shift_full,
    level_shifts,
    transition_shifts,
)
from .quadrature import PVQuadratureConfig, integrate, principal_value
from .sweep import SpectralResponse, spectrum_sweep
from .symmetric import (
    phasor_rate,
    symmetric_lamb,
    symmetric_lamb_ratio,
    symmetric_mirror_lamb,
    symmetric_mirror_rate,
    symmetric_rate,
)
