from __future__ import annotations

# Third Party
import numpy as np

# GiantAtom
from giantatom.utils.types import Operator


def ket_bra(m: int, n: int, dim: int) -> Operator:
    """|m><n|."""
    assert 0 <= m < dim and 0 <= n < dim, f"levels ({m}, {n}) outside a {dim}-level space"
    op = np.zeros((dim, dim), dtype=complex)
    op[m, n] = 1.0
    return op


def lowering(m: int, dim: int) -> Operator:
    """sigma_-^m = |m><m+1|."""
    return ket_bra(m, m + 1, dim)


def raising(m: int, dim: int) -> Operator:
    """sigma_+^m = |m+1><m|."""
    return ket_bra(m + 1, m, dim)


def projector(m: int, dim: int) -> Operator:
    return ket_bra(m, m, dim)


def sigma_z(dim: int = 2) -> Operator:
    """|1><1| - |0><0| on the lowest two levels."""
    return projector(1, dim) - projector(0, dim)


def dagger(op: Operator) -> Operator:
    return op.conj().T


def is_hermitian(op: Operator, tol: float = 1e-12) -> bool:
    return bool(np.allclose(op, dagger(op), rtol=0.0, atol=tol))
