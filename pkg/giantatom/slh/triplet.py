"""(S, L, H) triplets and the three network products.

Channels are 0-indexed. S holds complex scalars, L is a stack of operators
with shape (n_channels, dim, dim) and H is a dim x dim operator.
"""

from __future__ import annotations

# Standard Library
from dataclasses import dataclass

# Third Party
import numpy as np
from scipy.linalg import block_diag

# GiantAtom
from giantatom.errors import ChannelCountError, SingularLoopError, TripletShapeError
from giantatom.slh.operators import dagger, is_hermitian
from giantatom.utils.types import ComplexArray, Operator

SINGULAR_LOOP_TOL = 1e-12


@dataclass(frozen=True)
class SLHTriplet:
    S: ComplexArray
    L: ComplexArray
    H: Operator

    def __post_init__(self):
        S = np.atleast_2d(np.asarray(self.S, dtype=complex))
        H = np.asarray(self.H, dtype=complex)
        n = S.shape[0]
        L = np.asarray(self.L, dtype=complex).reshape((n,) + H.shape)
        if S.shape != (n, n):
            raise TripletShapeError(f"scattering matrix must be square, got {S.shape}")
        if H.ndim != 2 or H.shape[0] != H.shape[1]:
            raise TripletShapeError(f"Hamiltonian must be square, got {H.shape}")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "H", H)

    @property
    def n_channels(self) -> int:
        return self.S.shape[0]

    @property
    def dim(self) -> int:
        return self.H.shape[0]

    def is_unitary(self, tol: float = 1e-12) -> bool:
        return bool(np.allclose(self.S @ dagger(self.S), np.eye(self.n_channels), rtol=0.0, atol=tol))

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        return is_hermitian(self.H, tol)

    def allclose(self, other: "SLHTriplet", atol: float = 1e-12) -> bool:
        return (
            self.S.shape == other.S.shape
            and self.H.shape == other.H.shape
            and np.allclose(self.S, other.S, rtol=0.0, atol=atol)
            and np.allclose(self.L, other.L, rtol=0.0, atol=atol)
            and np.allclose(self.H, other.H, rtol=0.0, atol=atol)
        )


def identity_triplet(n_channels: int, dim: int) -> SLHTriplet:
    return SLHTriplet(
        S=np.eye(n_channels, dtype=complex),
        L=np.zeros((n_channels, dim, dim), dtype=complex),
        H=np.zeros((dim, dim), dtype=complex),
    )


def phase_triplet(phi: float, dim: int = 2) -> SLHTriplet:
    """(exp(i phi), 0, 0), a single channel picking up a propagation phase."""
    return SLHTriplet(
        S=np.array([[np.exp(1j * phi)]]),
        L=np.zeros((1, dim, dim), dtype=complex),
        H=np.zeros((dim, dim), dtype=complex),
    )


def _check_dims(G2: SLHTriplet, G1: SLHTriplet) -> None:
    if G2.dim != G1.dim:
        raise TripletShapeError(f"operator dimensions differ: {G2.dim} vs {G1.dim}")


def series(G2: SLHTriplet, G1: SLHTriplet) -> SLHTriplet:
    """G2 <| G1, the outputs of G1 feed the inputs of G2."""
    _check_dims(G2, G1)
    if G2.n_channels != G1.n_channels:
        raise ChannelCountError(f"series product of {G2.n_channels} and {G1.n_channels} channels")
    S = G2.S @ G1.S
    S2L1 = np.einsum("ij,jab->iab", G2.S, G1.L)
    L = S2L1 + G2.L
    X = np.einsum("iba,ibc->ac", G2.L.conj(), S2L1)
    H = G1.H + G2.H + (X - dagger(X)) / 2j
    return SLHTriplet(S, L, H)


def concat(G2: SLHTriplet, G1: SLHTriplet) -> SLHTriplet:
    """G2 [+] G1, channels of G2 first."""
    _check_dims(G2, G1)
    S = block_diag(G2.S, G1.S)
    L = np.concatenate([G2.L, G1.L], axis=0)
    return SLHTriplet(S, L, G1.H + G2.H)


def feedback(G: SLHTriplet, k: int, l: int) -> SLHTriplet:
    """[G]_{k -> l}, output channel k fed back into input channel l."""
    n = G.n_channels
    if not (0 <= k < n and 0 <= l < n):
        raise ChannelCountError(f"feedback {k} -> {l} on a {n}-channel triplet")
    loop = 1 - G.S[k, l]
    if abs(loop) < SINGULAR_LOOP_TOL:
        raise SingularLoopError(f"1 - S[{k}, {l}] vanishes, the loop has no stable solution")

    rows = [i for i in range(n) if i != k]
    cols = [j for j in range(n) if j != l]
    S = G.S[np.ix_(rows, cols)] + np.outer(G.S[rows, l], G.S[k, cols]) / loop
    L = G.L[rows] + G.S[rows, l][:, None, None] * G.L[k] / loop
    X = np.einsum("jba,j->ab", G.L.conj(), G.S[:, l])
    X = X @ G.L[k] / loop
    H = G.H + (X - dagger(X)) / 2j
    return SLHTriplet(S.reshape(n - 1, n - 1), L.reshape((n - 1,) + G.H.shape), H)
