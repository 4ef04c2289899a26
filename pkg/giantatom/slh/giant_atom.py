"""The giant atom as a cascaded network of point-like connections.

Every connection point k is a single-channel node (1, sqrt(gamma_k/2) X, 0)
for the right-moving and for the left-moving field. The right-moving chain is
grown point by point,

    G <- [(G_phi_k <| G) [+] G_{R,k+1}]_{0 -> 1},

the left-moving chain likewise starting from the last point, and the two
chains are stacked as channel 0 (right) and channel 1 (left).
"""

from __future__ import annotations

# Standard Library
import math
from typing import Optional, Sequence, Tuple

# Third Party
import numpy as np

# GiantAtom
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import Environment
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.dynamics.types import LindbladGenerator
from giantatom.errors import ChannelCountError, TripletShapeError
from giantatom.slh.operators import lowering, sigma_z
from giantatom.slh.triplet import SLHTriplet, concat, feedback, identity_triplet, phase_triplet, series
from giantatom.spectral.coupling import phasor_amplitudes
from giantatom.utils.types import ComplexArray, Operator

SHAPE_TOL = 1e-12


def point_triplet(gamma: float, jump: Operator, hamiltonian: Optional[Operator] = None) -> SLHTriplet:
    dim = jump.shape[0]
    H = np.zeros((dim, dim), dtype=complex) if hamiltonian is None else hamiltonian
    return SLHTriplet(S=np.ones((1, 1)), L=[math.sqrt(gamma / 2) * jump], H=H)


def _append(chain: SLHTriplet, phi: float, node: SLHTriplet) -> SLHTriplet:
    return feedback(concat(series(phase_triplet(phi, chain.dim), chain), node), 0, 1)


def giant_atom_triplet(
    gammas: Sequence[float],
    phases: Sequence[float],
    jump: Operator,
    hamiltonian: Optional[Operator] = None,
) -> SLHTriplet:
    """Two-channel triplet of one transition from per-point rates and phases.

    hamiltonian is carried by the first right-moving node.
    """
    gammas = [float(g) for g in gammas]
    phases = [float(p) for p in phases]
    n = len(gammas)
    assert n >= 1, "need at least one connection point"
    assert len(phases) == n - 1, "need N - 1 phase shifts for N points"

    right = point_triplet(gammas[0], jump, hamiltonian)
    for k in range(n - 1):
        right = _append(right, phases[k], point_triplet(gammas[k + 1], jump))

    left = point_triplet(gammas[-1], jump)
    for k in reversed(range(n - 1)):
        left = _append(left, phases[k], point_triplet(gammas[k], jump))

    return concat(right, left)


def closed_form_amplitudes(
    gammas: Sequence[float], phases: Sequence[float]
) -> Tuple[complex, complex, float, float]:
    """(A_R, A_L, B, phi_sigma) evaluated directly.

    B = sum_{k<l} sqrt(gamma_k gamma_l) sin(phi_k + ... + phi_{l-1}).
    """
    gammas = np.asarray(gammas, dtype=float)
    A_R, A_L, phi_sigma = phasor_amplitudes(gammas, phases)
    cumulative = np.concatenate([[0.0], np.cumsum(phases)])
    k, l = np.triu_indices(len(gammas), 1)
    B = float(np.sum(np.sqrt(gammas[k] * gammas[l]) * np.sin(cumulative[l] - cumulative[k])))
    return A_R, A_L, B, phi_sigma


def detuning_hamiltonian(atom: AtomSpec, detuning: float = 0.0) -> Operator:
    """sum_m (omega_m - m (omega10 - detuning)) |m><m|.

    The frame rotates with omega10 - detuning per excitation, so a detuning of
    omega10 gives the lab frame and zero gives the frame of the first
    transition.
    """
    m = np.arange(atom.levels)
    energies = atom.level_energies() - m * (atom.omega10 - detuning)
    return np.diag(energies).astype(complex)


def attach_mirror(G: SLHTriplet, phi_M: float) -> SLHTriplet:
    """[(G_phi_M [+] I_1) <| G]_{0 -> 1}: the right-moving output is reflected
    back into the left-moving input."""
    if G.n_channels != 2:
        raise ChannelCountError(f"a mirror closes a two-channel triplet, got {G.n_channels}")
    reflector = concat(phase_triplet(phi_M, G.dim), identity_triplet(1, G.dim))
    return feedback(series(reflector, G), 0, 1)


def build_giant_atom(
    layout: CouplingLayout,
    env: Environment,
    atom: Optional[AtomSpec] = None,
    detuning: float = 0.0,
    mirror: Optional[MirrorSpec] = None,
) -> SLHTriplet:
    """Triplet of the whole atom, one (right, left) channel pair per transition.

    Transition m uses gamma_k and phi_k at omega_{m+1,m} with the g_m^2
    ladder factor and jump operator |m><m+1|. A two-level atom at omega10 = 1
    is used when atom is None. With a mirror each pair is closed into a
    single channel.
    """
    atom = atom or AtomSpec(levels=2, omega10=1.0)
    hamiltonian = detuning_hamiltonian(atom, detuning)
    G = None
    for m, omega in enumerate(atom.transition_frequencies()):
        g_m = atom.coupling(m)
        if g_m == 0:
            continue
        gammas = g_m**2 * layout.point_rates(omega, env)
        block = giant_atom_triplet(gammas, layout.phase_shifts(omega), lowering(m, atom.levels))
        if mirror is not None and mirror.enabled:
            block = attach_mirror(block, mirror.phase_at(omega, layout.velocity))
        G = block if G is None else concat(G, block)
    if G is None:
        G = identity_triplet(0, atom.levels)
    return SLHTriplet(G.S, G.L, G.H + hamiltonian)


def rate_and_shift_from_triplet(G: SLHTriplet, detuning: float = 0.0) -> Tuple[float, float]:
    """(Gamma_10, Delta_1) of a triplet whose couplings are all c_i |0><1|.

    Gamma_10 = sum_i |c_i|^2, Delta_1 = Tr(H sigma_z) - detuning.
    """
    jump = lowering(0, G.dim)
    amplitudes = amplitudes_from_triplet(G)
    for i, (L, c) in enumerate(zip(G.L, amplitudes)):
        scale = max(1.0, float(np.abs(L).max()))
        if not np.allclose(L, c * jump, rtol=0.0, atol=SHAPE_TOL * scale):
            raise TripletShapeError(f"coupling of channel {i} is not a multiple of |0><1|")
    rate = float(np.sum(np.abs(amplitudes) ** 2))
    H = G.H
    off_diagonal = H - np.diag(np.diagonal(H))
    if not np.allclose(off_diagonal, 0.0, rtol=0.0, atol=SHAPE_TOL):
        raise TripletShapeError("Hamiltonian is not diagonal in the level basis")
    shift = float(np.trace(H @ sigma_z(G.dim)).real) - detuning
    return rate, shift


def to_master_equation(G: SLHTriplet) -> LindbladGenerator:
    """rho' = -i[H, rho] + sum_i D[L_i] rho, channels with L_i = 0 dropped."""
    channels = []
    for L in G.L:
        norm_sq = float(np.sum(np.abs(L) ** 2))
        if norm_sq > 0:
            channels.append((norm_sq, L / math.sqrt(norm_sq)))
    H = 0.5 * (G.H + G.H.conj().T)
    return LindbladGenerator(hamiltonian=H, channels=channels)


def amplitudes_from_triplet(G: SLHTriplet) -> ComplexArray:
    """Coefficients c_i of every channel coupling on |0><1|."""
    return np.array([L[0, 1] for L in G.L])