"""Closed forms for the maximally symmetric giant atom, with and without mirror.

N equal weights at equal spacing, phi = omega * spacing / v. The ratio forms
have removable singularities at phi = 2 pi n; close to those the regular
phasor and sine sums are used instead.
"""

from __future__ import annotations

# Standard Library
import math

# Third Party
import numpy as np

# GiantAtom
from giantatom.config import NEAR_RESONANCE_PHASE


def _reduce(phi: float) -> float:
    # math.remainder is exact, the result lies in [-pi, pi].
    return math.remainder(float(phi), 2 * math.pi)


def _check(gamma: float, n_points: int) -> None:
    if n_points < 1:
        raise ValueError(f"need at least one connection point, got {n_points}")
    if gamma < 0:
        raise ValueError("per-point rate must be >= 0")


def phasor_rate(gamma: float, n_points: int, phi: float) -> float:
    """gamma |sum_{k=0}^{N-1} exp(i k phi)|^2, evaluated term by term."""
    phi = _reduce(phi)
    A = np.sum(np.exp(1j * phi * np.arange(n_points)))
    return gamma * float(A.real**2 + A.imag**2)


def symmetric_rate(gamma: float, n_points: int, phi: float) -> float:
    """gamma sin^2(N phi/2) / sin^2(phi/2)."""
    _check(gamma, n_points)
    phi = _reduce(phi)
    if abs(phi) < NEAR_RESONANCE_PHASE:
        return phasor_rate(gamma, n_points, phi)
    return gamma * math.sin(n_points * phi / 2) ** 2 / math.sin(phi / 2) ** 2


def symmetric_lamb(gamma: float, n_points: int, phi: float) -> float:
    """gamma sum_{k=1}^{N} (N - k) sin(k phi)."""
    _check(gamma, n_points)
    phi = _reduce(phi)
    k = np.arange(1, n_points + 1)
    return gamma * float(np.sum((n_points - k) * np.sin(k * phi)))


def symmetric_lamb_ratio(gamma: float, n_points: int, phi: float) -> float:
    """gamma (N sin phi - sin N phi) / (2 (1 - cos phi)), singular at phi = 2 pi n."""
    phi = _reduce(phi)
    return gamma * (n_points * math.sin(phi) - math.sin(n_points * phi)) / (2 * (1 - math.cos(phi)))


def symmetric_mirror_rate(gamma: float, n_points: int, phi: float) -> float:
    """gamma sin^2(N phi) / (2 sin^2(phi/2)), mirror phase equal to phi.

    Near phi = 2 pi n the product form 1/2 |1 + exp(i N phi)|^2 Gamma is used.
    """
    _check(gamma, n_points)
    phi = _reduce(phi)
    if abs(phi) < NEAR_RESONANCE_PHASE:
        return 0.5 * abs(1 + np.exp(1j * n_points * phi)) ** 2 * phasor_rate(gamma, n_points, phi)
    return gamma * math.sin(n_points * phi) ** 2 / (2 * math.sin(phi / 2) ** 2)


def symmetric_mirror_lamb(gamma: float, n_points: int, phi: float) -> float:
    """Delta_1 + sin(N phi) Gamma / 2, equal to
    gamma (2N sin phi - sin 2N phi) / (4 (1 - cos phi)) away from phi = 2 pi n.
    """
    _check(gamma, n_points)
    return symmetric_lamb(gamma, n_points, phi) + 0.5 * math.sin(n_points * _reduce(phi)) * symmetric_rate(
        gamma, n_points, phi
    )
