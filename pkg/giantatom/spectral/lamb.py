"""Lamb and Stark shifts of the atom levels.

Four flavours are provided:
    - the full shift over [0, omega_c] including the thermal Stark terms,
    - the renormalized vacuum shift with J(omega)/omega weighting,
    - the dominant-pole shift as a Hilbert transform of |A|^2 over the real line,
      either by quadrature or through the exact B sum.
"""

from __future__ import annotations

# Standard Library
import math
from enum import Enum
from typing import Callable, Optional, Tuple

# Third Party
import numpy as np
from scipy.special import sici

# GiantAtom
from giantatom.core.atom import AtomSpec, transition_frequency
from giantatom.core.bath import Environment, thermal_occupation
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.errors import ValidationError
from giantatom.spectral.coupling import mirror_lamb_correction
from giantatom.spectral.quadrature import PVQuadratureConfig, integrate, principal_value
from giantatom.utils.logging import get_logger
from giantatom.utils.types import RealArray

logger = get_logger(__name__)


class ShiftMode(str, Enum):
    HILBERT = "hilbert"
    HILBERT_QUADRATURE = "hilbert-quadrature"
    RENORMALIZED = "renormalized"
    FULL = "full"
    NONE = "none"


def default_shift_mode(env: Environment) -> ShiftMode:
    if env.kind == "constant":
        return ShiftMode.HILBERT
    return ShiftMode.RENORMALIZED


def _strength_function(layout: CouplingLayout) -> Callable[[float], float]:
    # Scalar |A(w)|^2, called from inside QUADPACK.
    delays = layout.x / layout.velocity
    weights = layout.g
    prefactor = layout.mode_coupling**2

    def strength(w: float) -> float:
        A = np.dot(weights, np.exp(1j * w * delays))
        return prefactor * (A.real**2 + A.imag**2)

    return strength


def _oscillation_period(layout: CouplingLayout) -> Optional[float]:
    span = (layout.positions[-1] - layout.positions[0]) / layout.velocity
    if span <= 0:
        return None
    return 2 * math.pi / span


def _check_cutoff(cutoff: float, omega: float) -> None:
    if not cutoff > omega:
        raise ValidationError(
            f"cutoff {cutoff:.6g} must exceed the transition frequency {omega:.6g}",
            "environment.cutoff",
        )


def lamb_stark_shift_full(
    m: int,
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    quad: Optional[PVQuadratureConfig] = None,
) -> float:
    """Delta_m over [0, omega_c] with the vacuum and thermal terms."""
    quad = quad or PVQuadratureConfig()
    if not 0 <= m < atom.levels:
        raise IndexError(f"level {m} out of range for a {atom.levels}-level atom")
    if not layout.coupled:
        return 0.0

    cutoff = env.cutoff_for(atom.omega10)
    strength = _strength_function(layout)
    period = _oscillation_period(layout)
    T = env.temperature

    def spectral(w: float) -> float:
        return float(env.density(w)) * strength(w)

    def nbar(w: float) -> float:
        return thermal_occupation(w, T)

    total = 0.0
    g_up = atom.coupling(m)
    if g_up > 0:
        w_up = transition_frequency(atom, m)
        _check_cutoff(cutoff, w_up)
        if T > 0:
            value, _ = principal_value(lambda w: spectral(w) * nbar(w), w_up, 0.0, cutoff, quad, period)
            total += g_up**2 * value
            value, _ = integrate(
                lambda w: spectral(w) * (1 + nbar(w)) / (w + w_up), 0.0, cutoff, quad, period
            )
        else:
            value, _ = integrate(lambda w: spectral(w) / (w + w_up), 0.0, cutoff, quad, period)
        total -= g_up**2 * value

    g_down = atom.coupling(m - 1)
    if g_down > 0:
        w_down = transition_frequency(atom, m - 1)
        _check_cutoff(cutoff, w_down)
        if T > 0:
            value, _ = integrate(
                lambda w: spectral(w) * nbar(w) / (w + w_down), 0.0, cutoff, quad, period
            )
            total += g_down**2 * value
            value, _ = principal_value(
                lambda w: spectral(w) * (1 + nbar(w)), w_down, 0.0, cutoff, quad, period
            )
        else:
            value, _ = principal_value(spectral, w_down, 0.0, cutoff, quad, period)
        total -= g_down**2 * value

    return 2 * total


def lamb_shift_renormalized(
    m: int,
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    quad: Optional[PVQuadratureConfig] = None,
) -> float:
    """Delta_m after subtracting the <m|q^2|m> self-energy, temperature neglected.

    Finite for the ohmic density of states; a constant J leaves a 1/omega
    divergence at the origin that surfaces as a QuadratureError.
    """
    quad = quad or PVQuadratureConfig()
    if not 0 <= m < atom.levels:
        raise IndexError(f"level {m} out of range for a {atom.levels}-level atom")
    if not layout.coupled:
        return 0.0
    if env.temperature > 0:
        logger.debug("renormalized shift ignores the thermal Stark terms")

    cutoff = env.cutoff_for(atom.omega10)
    strength = _strength_function(layout)
    period = _oscillation_period(layout)

    def weighted(w: float) -> float:
        return float(env.density(w)) / w * strength(w)

    total = 0.0
    g_up = atom.coupling(m)
    if g_up > 0:
        w_up = transition_frequency(atom, m)
        _check_cutoff(cutoff, w_up)
        value, _ = integrate(lambda w: weighted(w) * w_up / (w + w_up), 0.0, cutoff, quad, period)
        total += g_up**2 * value

    g_down = atom.coupling(m - 1)
    if g_down > 0:
        w_down = transition_frequency(atom, m - 1)
        _check_cutoff(cutoff, w_down)
        value, _ = principal_value(lambda w: weighted(w) * w_down, w_down, 0.0, cutoff, quad, period)
        total -= g_down**2 * value

    return 2 * total


def _cosine_series(layout: CouplingLayout) -> Tuple[float, RealArray, RealArray]:
    """|A(w)|^2 = c0 + sum_i c_i cos(tau_i w) with tau_i > 0."""
    g = layout.g
    x = layout.x
    prefactor = layout.mode_coupling**2
    k, l = np.triu_indices(layout.n_points, 1)
    c0 = prefactor * float(np.sum(g**2))
    coefficients = 2 * prefactor * g[k] * g[l]
    delays = (x[l] - x[k]) / layout.velocity
    return c0, coefficients, delays


def hilbert_tail(omega10: float, layout: CouplingLayout, quad: PVQuadratureConfig) -> float:
    """P-integral of |A|^2/(w - omega10) over |w| > W, exact.

    The constant part gives a logarithm, each cosine term a combination of
    the sine and cosine integrals Si and Ci.
    """
    W = quad.hilbert_window * omega10
    upper = W - omega10
    lower = W + omega10
    c0, coefficients, delays = _cosine_series(layout)
    tail = c0 * math.log(lower / upper)
    if len(delays):
        si_up, ci_up = sici(delays * upper)
        si_low, ci_low = sici(delays * lower)
        c = np.cos(delays * omega10)
        s = np.sin(delays * omega10)
        right = -c * ci_up - s * (math.pi / 2 - si_up)
        left = c * ci_low - s * (math.pi / 2 - si_low)
        tail += float(np.sum(coefficients * (right + left)))
    return tail


def lamb_shift_hilbert(
    omega10: float,
    layout: CouplingLayout,
    env: Environment,
    quad: Optional[PVQuadratureConfig] = None,
) -> float:
    """-2 P int J(omega10) |A(w)|^2 / (w - omega10) dw over the real line.

    The window |w| <= W omega10 is integrated numerically, the rest is added
    in closed form by hilbert_tail.
    """
    quad = quad or PVQuadratureConfig()
    if omega10 <= 0:
        raise ValueError("lamb_shift_hilbert requires omega10 > 0")
    if not layout.coupled:
        return 0.0
    if env.kind != "constant":
        logger.debug("Hilbert shift freezes J at the transition frequency")
    J0 = float(env.density(omega10))
    W = quad.hilbert_window * omega10
    window, abserr = principal_value(
        _strength_function(layout), omega10, -W, W, quad, _oscillation_period(layout)
    )
    logger.debug(f"Hilbert window integral {window:.6g} +- {abserr:.1g}")
    return -2 * J0 * (window + hilbert_tail(omega10, layout, quad))


def hilbert_shift_closed_form(omega: float, layout: CouplingLayout, env: Environment) -> float:
    """B = sum_{k<l} sqrt(gamma_k gamma_l) sin(omega (x_l - x_k) / v)."""
    amplitudes = np.sqrt(layout.point_rates(omega, env))
    k, l = np.triu_indices(layout.n_points, 1)
    delays = (layout.x[l] - layout.x[k]) / layout.velocity
    return float(np.sum(amplitudes[k] * amplitudes[l] * np.sin(omega * delays)))


def level_shifts(
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    mode: ShiftMode = ShiftMode.HILBERT,
    quad: Optional[PVQuadratureConfig] = None,
    mirror: Optional[MirrorSpec] = None,
) -> RealArray:
    """Delta_m for m = 0 .. M-1.

    In the Hilbert modes only the pole of transition (m, m-1) contributes,
    weighted by g_{m-1}^2, and the ground level is left unshifted.
    A mirror adds g_{m-1}^2 Im(A_R^2 exp(i phi_M)) to level m in every mode
    except NONE.
    """
    mode = ShiftMode(mode)
    quad = quad or PVQuadratureConfig()
    shifts = np.zeros(atom.levels)
    if mode == ShiftMode.NONE:
        return shifts

    for m in range(atom.levels):
        if mode == ShiftMode.FULL:
            shifts[m] = lamb_stark_shift_full(m, atom, layout, env, quad)
        elif mode == ShiftMode.RENORMALIZED:
            shifts[m] = lamb_shift_renormalized(m, atom, layout, env, quad)
        elif m > 0:
            omega = transition_frequency(atom, m - 1)
            if mode == ShiftMode.HILBERT:
                shift = hilbert_shift_closed_form(omega, layout, env)
            else:
                shift = lamb_shift_hilbert(omega, layout, env, quad)
            shifts[m] = atom.coupling(m - 1) ** 2 * shift

    if mirror is not None and mirror.enabled:
        for m in range(1, atom.levels):
            omega = transition_frequency(atom, m - 1)
            shifts[m] += atom.coupling(m - 1) ** 2 * mirror_lamb_correction(omega, layout, mirror, env)
    return shifts


def transition_shifts(
    atom: AtomSpec,
    layout: CouplingLayout,
    env: Environment,
    mode: ShiftMode = ShiftMode.HILBERT,
    quad: Optional[PVQuadratureConfig] = None,
    mirror: Optional[MirrorSpec] = None,
) -> RealArray:
    """Delta_{m+1} - Delta_m for every transition."""
    return np.diff(level_shifts(atom, layout, env, mode, quad, mirror))
