from __future__ import annotations

# Standard Library
import math
from dataclasses import dataclass, field
from typing import List, Tuple

# Third Party
import numpy as np

# GiantAtom
from giantatom.core.atom import AtomSpec
from giantatom.errors import ValidationError
from giantatom.utils.types import ComplexArray, LevelPair, Operator, RealArray

DENSITY_TOL = 1e-10

Channel = Tuple[float, Operator]


@dataclass
class LindbladGenerator:
    """rho' = -i[H, rho] + sum_i rate_i D[X_i] rho.

    D[X] rho = X rho X^dag - {X^dag X, rho} / 2.
    """

    hamiltonian: Operator
    channels: List[Channel] = field(default_factory=list)

    def __post_init__(self):
        self.hamiltonian = np.asarray(self.hamiltonian, dtype=complex)
        dim = self.hamiltonian.shape[0]
        assert self.hamiltonian.shape == (dim, dim), "hamiltonian must be square"
        if not np.allclose(self.hamiltonian, self.hamiltonian.conj().T, rtol=0.0, atol=1e-12):
            raise ValueError("hamiltonian is not Hermitian")
        channels = []
        for rate, op in self.channels:
            if rate < 0:
                raise ValueError(f"channel rate must be >= 0, got {rate}")
            op = np.asarray(op, dtype=complex)
            assert op.shape == (dim, dim), f"collapse operator of shape {op.shape} in a {dim}-level space"
            channels.append((float(rate), op))
        self.channels = channels

    @property
    def dim(self) -> int:
        return self.hamiltonian.shape[0]

    def effective_rates(self) -> List[float]:
        return [rate for rate, _ in self.channels]

    def apply(self, rho: ComplexArray) -> ComplexArray:
        H = self.hamiltonian
        out = -1j * (H @ rho - rho @ H)
        for rate, X in self.channels:
            Xd = X.conj().T
            XdX = Xd @ X
            out += rate * (X @ rho @ Xd - 0.5 * (XdX @ rho + rho @ XdX))
        return out

    def superoperator(self) -> ComplexArray:
        """Matrix of the generator on row-major vec(rho).

        vec(A rho B) = (A kron B^T) vec(rho).
        """
        eye = np.eye(self.dim)
        H = self.hamiltonian
        out = -1j * (np.kron(H, eye) - np.kron(eye, H.T))
        for rate, X in self.channels:
            XdX = X.conj().T @ X
            out += rate * (np.kron(X, X.conj()) - 0.5 * np.kron(XdX, eye) - 0.5 * np.kron(eye, XdX.T))
        return out

    def allclose(self, other: "LindbladGenerator", atol: float = 1e-10) -> bool:
        if self.dim != other.dim:
            return False
        return bool(np.allclose(self.superoperator(), other.superoperator(), rtol=0.0, atol=atol))


@dataclass(frozen=True)
class DriveSpec:
    """Coherent drive (amplitude / 2)(|m><m'| + h.c.) on the pair (m, m').

    detuning is the offset of the upper level in the frame rotating with the
    drive, zero for a drive resonant with the shifted transition.
    """

    amplitude: float
    pair: LevelPair = (0, 2)
    detuning: float = 0.0

    def __post_init__(self):
        if not self.amplitude >= 0:
            raise ValidationError("drive.amplitude must be >= 0", "drive.amplitude")
        if len(self.pair) != 2 or self.pair[0] == self.pair[1]:
            raise ValidationError(f"drive.pair must name two distinct levels, got {self.pair}", "drive.pair")
        if min(self.pair) < 0:
            raise ValidationError(f"drive.pair levels must be >= 0, got {self.pair}", "drive.pair")
        object.__setattr__(self, "pair", tuple(int(m) for m in self.pair))

    @property
    def lower(self) -> int:
        return min(self.pair)

    @property
    def upper(self) -> int:
        return max(self.pair)


def basis_state(m: int, dim: int) -> ComplexArray:
    rho = np.zeros((dim, dim), dtype=complex)
    rho[m, m] = 1.0
    return rho


def maximally_mixed(dim: int) -> ComplexArray:
    return np.eye(dim, dtype=complex) / dim


def thermal_state(atom: AtomSpec, T: float) -> ComplexArray:
    """Gibbs state of the bare ladder, the ground state at T = 0."""
    if T < 0:
        raise ValueError("temperature must be >= 0")
    if T == 0:
        return basis_state(0, atom.levels)
    weights = np.exp(-atom.level_energies() / T)
    return np.diag(weights / weights.sum()).astype(complex)


def validate_density_matrix(rho: ComplexArray, tol: float = DENSITY_TOL) -> ComplexArray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got {rho.shape}")
    if not np.allclose(rho, rho.conj().T, rtol=0.0, atol=tol):
        raise ValueError("density matrix is not Hermitian")
    trace = np.trace(rho).real
    if not math.isclose(trace, 1.0, abs_tol=tol):
        raise ValueError(f"density matrix has trace {trace}")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def populations(rho: ComplexArray) -> RealArray:
    return np.real(np.diagonal(rho)).copy()
