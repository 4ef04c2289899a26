"""Principal-value quadrature on top of QUADPACK's adaptive Gauss-Kronrod rule.

A simple pole p inside [a, b] is isolated in a symmetric window [p-h, p+h].
Inside the window the integral is folded,

    P int_{p-h}^{p+h} g(w)/(w-p) dw = int_0^h (g(p+u) - g(p-u))/u du,

which is regular at u = 0 and never evaluated there by the Kronrod nodes.
The rest of the interval is integrated directly.
"""

from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

# Third Party
from scipy.integrate import quad

# GiantAtom
from giantatom.config import DEFAULT_HILBERT_WINDOW
from giantatom.errors import QuadratureError
from giantatom.utils.logging import get_logger

logger = get_logger(__name__)

ScalarFunction = Callable[[float], float]


@dataclass(frozen=True)
class PVQuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    # Window half-width as a fraction of the pole position.
    pole_window: float = 0.1
    max_subdivisions: int = 2000
    # Truncation of infinite Hilbert integrals, in units of the pole frequency.
    hilbert_window: float = DEFAULT_HILBERT_WINDOW
    # Upper bound on the number of pieces an oscillatory range is split into.
    max_pieces: int = 20000

    def __post_init__(self):
        assert self.abs_tol > 0 and self.rel_tol > 0, "tolerances must be positive"
        assert self.pole_window > 0, "pole_window must be positive"


def integrate(
    f: ScalarFunction,
    a: float,
    b: float,
    cfg: PVQuadratureConfig,
    period: Optional[float] = None,
) -> Tuple[float, float]:
    """Adaptive integral of f over [a, b], returns (value, abserr).

    An oscillation period splits the range into pieces of about one period
    each so that every QUADPACK call sees a smooth, non-oscillating integrand.
    """
    if b <= a:
        return 0.0, 0.0
    n_pieces = 1
    if period is not None and period > 0:
        n_pieces = min(cfg.max_pieces, max(1, int(math.ceil((b - a) / period))))
    step = (b - a) / n_pieces
    total, abserr = 0.0, 0.0
    for i in range(n_pieces):
        lo = a + i * step
        hi = b if i == n_pieces - 1 else a + (i + 1) * step
        result = quad(
            f,
            lo,
            hi,
            epsabs=cfg.abs_tol / n_pieces,
            epsrel=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            full_output=1,
        )
        if len(result) > 3:
            raise QuadratureError(
                f"quadrature did not converge on [{lo:.6g}, {hi:.6g}]: {result[3].strip()}",
                abserr=result[1],
                tolerance=max(cfg.abs_tol, cfg.rel_tol * abs(result[0])),
            )
        total += result[0]
        abserr += result[1]
    return total, abserr


def principal_value(
    numerator: ScalarFunction,
    pole: float,
    a: float,
    b: float,
    cfg: PVQuadratureConfig,
    period: Optional[float] = None,
) -> Tuple[float, float]:
    """P int_a^b numerator(w) / (w - pole) dw, returns (value, abserr)."""

    def integrand(w: float) -> float:
        return numerator(w) / (w - pole)

    if pole == a or pole == b:
        raise QuadratureError(f"pole {pole:.6g} sits on an integration endpoint")
    if not a < pole < b:
        return integrate(integrand, a, b, cfg, period)

    h = min(cfg.pole_window * abs(pole), 0.5 * (pole - a), 0.5 * (b - pole))

    def folded(u: float) -> float:
        return (numerator(pole + u) - numerator(pole - u)) / u

    left, err_left = integrate(integrand, a, pole - h, cfg, period)
    center, err_center = integrate(folded, 0.0, h, cfg)
    right, err_right = integrate(integrand, pole + h, b, cfg, period)
    logger.debug(f"PV at {pole:.6g}: window half-width {h:.3g}")
    return left + center + right, err_left + err_center + err_right
