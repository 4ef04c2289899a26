"""Coupling factor A(omega) and the relaxation rates built from it."""

from __future__ import annotations

# Standard Library
import math
from typing import Tuple

# Third Party
import numpy as np

# GiantAtom
from giantatom.core.atom import ladder_coupling
from giantatom.core.bath import Environment
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.utils.types import FloatLike, RealArray


def coupling_factor(omega: FloatLike, layout: CouplingLayout):
    """A(omega) = g_j sum_k g_k exp(i omega x_k / v).

    Scalars give a complex scalar, arrays give an array of the same shape.
    """
    omega_arr = np.asarray(omega, dtype=float)
    phases = np.multiply.outer(omega_arr, layout.x) / layout.velocity
    A = layout.mode_coupling * (np.exp(1j * phases) @ layout.g)
    if A.ndim == 0:
        return complex(A)
    return A


def coupling_strength(omega: FloatLike, layout: CouplingLayout):
    """|A(omega)|^2."""
    return np.abs(coupling_factor(omega, layout)) ** 2


def relaxation_rate(
    omega: FloatLike,
    m: int,
    layout: CouplingLayout,
    env: Environment,
    ladder_model: str = "transmon",
):
    """Gamma_{m+1,m} = 4 pi g_m^2 J(omega) |A(omega)|^2."""
    omega_arr = np.asarray(omega, dtype=float)
    if np.any(omega_arr <= 0):
        raise ValueError("relaxation_rate requires omega > 0")
    g_m = ladder_coupling(m, ladder_model)
    rate = 4 * math.pi * g_m**2 * env.density(omega_arr) * coupling_strength(omega_arr, layout)
    if np.ndim(rate) == 0:
        return float(rate)
    return rate


def phasor_amplitudes(gammas: RealArray, phases: RealArray) -> Tuple[complex, complex, float]:
    """(A_R, A_L, phi_sigma) from per-point rates and the N - 1 phase shifts.

    A_L = sum_k sqrt(gamma_k/2) exp(i sum_{j<k} phi_j)
    A_R = sum_k sqrt(gamma_k/2) exp(i sum_{j>=k} phi_j)
    """
    gammas = np.asarray(gammas, dtype=float)
    phases = np.asarray(phases, dtype=float)
    assert len(phases) == len(gammas) - 1, "need N - 1 phase shifts for N points"
    amplitudes = np.sqrt(gammas / 2)
    before = np.concatenate([[0.0], np.cumsum(phases)])
    phi_sigma = float(before[-1])
    after = phi_sigma - before
    A_L = complex(np.sum(amplitudes * np.exp(1j * before)))
    A_R = complex(np.sum(amplitudes * np.exp(1j * after)))
    return A_R, A_L, phi_sigma


def right_left_amplitudes(
    omega: float, layout: CouplingLayout, env: Environment
) -> Tuple[complex, complex, float]:
    return phasor_amplitudes(layout.point_rates(omega, env), layout.phase_shifts(omega))


def mirror_rate(
    omega: float,
    layout: CouplingLayout,
    mirror: MirrorSpec,
    env: Environment,
) -> float:
    """Gamma^mirror = |A_L + exp(i(phi_sigma + phi_M)) A_R|^2.

    A disabled mirror gives the open-waveguide rate |A_L|^2 + |A_R|^2.
    """
    if omega <= 0:
        raise ValueError("mirror_rate requires omega > 0")
    A_R, A_L, phi_sigma = right_left_amplitudes(omega, layout, env)
    if not mirror.enabled:
        return abs(A_L) ** 2 + abs(A_R) ** 2
    phi_M = mirror.phase_at(omega, layout.velocity)
    return abs(A_L + np.exp(1j * (phi_sigma + phi_M)) * A_R) ** 2


def mirror_lamb_correction(
    omega: float,
    layout: CouplingLayout,
    mirror: MirrorSpec,
    env: Environment,
) -> float:
    """Im(A_R^2 exp(i phi_M)), zero without a mirror."""
    if not mirror.enabled:
        return 0.0
    A_R, _, _ = right_left_amplitudes(omega, layout, env)
    phi_M = mirror.phase_at(omega, layout.velocity)
    return float(np.imag(A_R**2 * np.exp(1j * phi_M)))
