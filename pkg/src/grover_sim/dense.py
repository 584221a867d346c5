"""Explicit N x N matrices for small n.

These are built straight from their entry formulas, never from the fast
butterfly paths, so they can serve as the reference in equivalence checks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DimensionMismatch
from .state import StateVector, check_qubits

DENSE_MAX_QUBITS = 10


@dataclass(frozen=True, eq=False)
class DenseOperator:
    n: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        dim = 1 << self.n
        if self.entries.shape != (dim, dim):
            raise ConfigurationError(f"expected a {dim}x{dim} matrix, got {self.entries.shape}")

    @property
    def dim(self) -> int:
        return 1 << self.n

    def __matmul__(self, other):
        if isinstance(other, DenseOperator):
            return mat_mul(self, other)
        if isinstance(other, StateVector):
            return mat_vec(self, other)
        return NotImplemented

    def __add__(self, other: "DenseOperator") -> "DenseOperator":
        _same_dim(self, other)
        return DenseOperator(self.n, self.entries + other.entries)

    def __sub__(self, other: "DenseOperator") -> "DenseOperator":
        _same_dim(self, other)
        return DenseOperator(self.n, self.entries - other.entries)

    def __neg__(self) -> "DenseOperator":
        return DenseOperator(self.n, -self.entries)

    def scale(self, c: complex) -> "DenseOperator":
        return DenseOperator(self.n, c * self.entries)


def _check(n: int) -> int:
    n = check_qubits(n)
    if n > DENSE_MAX_QUBITS:
        raise ConfigurationError(f"dense operators are capped at n={DENSE_MAX_QUBITS}, got {n}")
    return n


def _same_dim(a: DenseOperator, b: DenseOperator) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"operator sizes differ: n={a.n} vs n={b.n}")


def _diag(n: int, values: np.ndarray) -> DenseOperator:
    return DenseOperator(n, np.diag(values.astype(np.complex128)))


def identity(n: int) -> DenseOperator:
    n = _check(n)
    return DenseOperator(n, np.eye(1 << n, dtype=np.complex128))


def build_w(n: int) -> DenseOperator:
    """Walsh-Hadamard matrix: entry (i, j) = 2**(-n/2) * (-1)**popcount(i & j)."""
    n = _check(n)
    idx = np.arange(1 << n, dtype=np.uint64)
    parity = np.bitwise_count(idx[:, None] & idx[None, :]) & 1
    signs = 1.0 - 2.0 * parity
    return DenseOperator(n, (signs * 2.0 ** (-n / 2)).astype(np.complex128))


def build_r(n: int) -> DenseOperator:
    """diag(1, -1, ..., -1)."""
    n = _check(n)
    d = -np.ones(1 << n)
    d[0] = 1.0
    return _diag(n, d)


def build_r1(n: int) -> DenseOperator:
    """The -I part of R."""
    return identity(n).scale(-1.0)


def build_r2(n: int) -> DenseOperator:
    """The remainder R - R1: a single entry 2 at (0, 0)."""
    n = _check(n)
    d = np.zeros(1 << n)
    d[0] = 2.0
    return _diag(n, d)


def build_p(n: int) -> DenseOperator:
    """Projection onto the uniform vector: every entry 1/N."""
    n = _check(n)
    dim = 1 << n
    return DenseOperator(n, np.full((dim, dim), 1.0 / dim, dtype=np.complex128))


def build_d(n: int) -> DenseOperator:
    """Diffusion matrix: 2/N off the diagonal, -1 + 2/N on it."""
    n = _check(n)
    dim = 1 << n
    m = np.full((dim, dim), 2.0 / dim, dtype=np.complex128)
    m[np.diag_indices(dim)] = -1.0 + 2.0 / dim
    return DenseOperator(n, m)


def mat_mul(a: DenseOperator, b: DenseOperator) -> DenseOperator:
    _same_dim(a, b)
    return DenseOperator(a.n, a.entries @ b.entries)


def mat_vec(a: DenseOperator, s: StateVector) -> StateVector:
    if a.n != s.n:
        raise DimensionMismatch(f"operator is n={a.n}, state is n={s.n}")
    return StateVector(s.n, a.entries @ s.amps)


def max_deviation(a: DenseOperator, b: DenseOperator) -> float:
    """Largest elementwise |a - b|."""
    _same_dim(a, b)
    return float(np.max(np.abs(a.entries - b.entries)))


def is_unitary(a: DenseOperator, tol: float) -> bool:
    if tol <= 0:
        raise ConfigurationError(f"tolerance must be positive, got {tol}")
    prod = a.entries @ a.entries.conj().T
    return float(np.max(np.abs(prod - np.eye(a.dim)))) <= tol
