from __future__ import annotations

# Standard Library
from dataclasses import dataclass
from typing import Sequence

# Third Party
import numpy as np
import pandas as pd
from scipy.integrate import solve_ivp

# GiantAtom
from giantatom.dynamics.types import LindbladGenerator, validate_density_matrix
from giantatom.errors import DegenerateSteadyStateError, IntegrationError
from giantatom.utils.logging import get_logger
from giantatom.utils.types import ComplexArray, RealArray

logger = get_logger(__name__)

# Singular values below this fraction of the largest span the kernel.
NULLITY_TOL = 1e-10


@dataclass(frozen=True)
class IntegratorConfig:
    method: str = "RK45"
    rtol: float = 1e-8
    atol: float = 1e-10
    max_step: float = np.inf


@dataclass
class Trajectory:
    times: RealArray
    states: ComplexArray

    def __post_init__(self):
        assert self.states.shape[0] == len(self.times), "one state per output time"

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def populations(self) -> RealArray:
        return np.real(np.diagonal(self.states, axis1=1, axis2=2))

    def traces(self) -> RealArray:
        return np.real(np.trace(self.states, axis1=1, axis2=2))

    def to_frame(self) -> pd.DataFrame:
        columns = {"t": self.times}
        p = self.populations()
        for m in range(self.dim):
            columns[f"p{m}"] = p[:, m]
        columns["trace"] = self.traces()
        return pd.DataFrame(columns)


def _hermitize(rho: ComplexArray) -> ComplexArray:
    return 0.5 * (rho + np.swapaxes(rho.conj(), -1, -2))


def evolve(
    gen: LindbladGenerator,
    rho0: ComplexArray,
    times: Sequence[float],
    cfg: IntegratorConfig = IntegratorConfig(),
) -> Trajectory:
    """Integrates the master equation with an adaptive Runge-Kutta scheme.

    States are reported at `times`, Hermiticity is restored at every output.
    """
    rho0 = validate_density_matrix(rho0)
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or len(times) == 0:
        raise ValueError("times must be a nonempty 1D grid")
    if times[0] < 0 or np.any(np.diff(times) <= 0):
        raise ValueError("times must be nonnegative and strictly increasing")
    dim = gen.dim
    if rho0.shape != (dim, dim):
        raise ValueError(f"initial state of shape {rho0.shape} for a {dim}-level generator")

    if len(times) == 1:
        return Trajectory(times=times, states=rho0[None].copy())

    superop = gen.superoperator()

    def rhs(_t: float, y: ComplexArray) -> ComplexArray:
        return superop @ y

    sol = solve_ivp(
        rhs,
        (times[0], times[-1]),
        rho0.reshape(-1),
        method=cfg.method,
        t_eval=times,
        rtol=cfg.rtol,
        atol=cfg.atol,
        max_step=cfg.max_step,
    )
    if not sol.success:
        raise IntegrationError(f"master equation integration failed: {sol.message}", sol.status)
    logger.debug(f"evolve: {sol.nfev} right-hand side evaluations")
    states = _hermitize(sol.y.T.reshape(len(times), dim, dim))
    return Trajectory(times=times, states=states)


def steady_state(gen: LindbladGenerator) -> ComplexArray:
    """Unique stationary state of the generator.

    The kernel dimension is measured with an SVD first, then one row of the
    vectorized generator is replaced by the trace condition and the system is
    solved densely.
    """
    dim = gen.dim
    superop = gen.superoperator()
    singular_values = np.linalg.svd(superop, compute_uv=False)
    scale = max(singular_values[0], 1.0)
    nullity = int(np.sum(singular_values < NULLITY_TOL * scale))
    if nullity > 1:
        raise DegenerateSteadyStateError(
            f"generator has a {nullity}-dimensional kernel, the stationary state is not unique",
            nullity=nullity,
        )

    A = superop.copy()
    A[0, :] = 0.0
    A[0, [i * dim + i for i in range(dim)]] = 1.0
    b = np.zeros(dim * dim, dtype=complex)
    b[0] = 1.0
    rho = _hermitize(np.linalg.solve(A, b).reshape(dim, dim))
    return rho / np.trace(rho).real
