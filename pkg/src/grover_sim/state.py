"""Amplitude vectors over the 2**n computational basis.

Index convention: bit k of a basis index is qubit k, bit 0 least significant.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError

MAX_QUBITS = 26  # 2**26 complex128 amplitudes = 1 GiB
NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class StateVector:
    """An n-qubit pure state held as a complex128 array of length 2**n.

    Operations never mutate ``amps`` of a state they were handed; they
    return a fresh ``StateVector``.
    """

    n: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        check_qubits(self.n)
        if self.amps.shape != (1 << self.n,):
            raise ConfigurationError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got shape {self.amps.shape}"
            )
        if self.amps.dtype != np.complex128:
            object.__setattr__(self, "amps", self.amps.astype(np.complex128))

    @property
    def dim(self) -> int:
        return 1 << self.n

    @classmethod
    def from_amplitudes(cls, amps) -> "StateVector":
        """Wrap an arbitrary-length-2**n sequence (copied, not normalized)."""
        arr = np.array(amps, dtype=np.complex128)
        size = arr.shape[0] if arr.ndim == 1 else -1
        if size < 2 or size & (size - 1):
            raise ConfigurationError(f"amplitude count must be a power of two >= 2, got {arr.shape}")
        return cls(size.bit_length() - 1, arr)

    def __repr__(self) -> str:
        return f"StateVector(n={self.n}, norm={norm(self):.12g})"


def check_qubits(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ConfigurationError(f"qubit count must be an integer, got {n!r}")
    if not 1 <= n <= MAX_QUBITS:
        raise ConfigurationError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    return int(n)


def check_index(n: int, i: int) -> int:
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool) or not 0 <= i < (1 << n):
        raise ConfigurationError(f"basis index {i!r} out of range for n={n}")
    return int(i)


def uniform_state(n: int) -> StateVector:
    """Equal superposition: every amplitude 1/sqrt(2**n)."""
    n = check_qubits(n)
    dim = 1 << n
    return StateVector(n, np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128))


def basis_state(n: int, i: int) -> StateVector:
    n = check_qubits(n)
    i = check_index(n, i)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[i] = 1.0
    return StateVector(n, amps)


def norm(s: StateVector) -> float:
    return float(np.sqrt(np.sum(probabilities(s))))


def probabilities(s: StateVector) -> np.ndarray:
    """Return ``re**2 + im**2`` per amplitude as a new float64 array."""
    a = s.amps
    return a.real * a.real + a.imag * a.imag


def measure_sample(s: StateVector, seed: int, count: int) -> list[int]:
    """Draw ``count`` basis indices from ``probabilities(s)``.

    Inverse-CDF sampling with numpy's PCG64 generator seeded by ``seed``.
    Each uniform draw u maps to the lowest index whose cumulative
    probability exceeds u, so zero-probability outcomes are never returned.
    """
    if count < 1:
        raise ConfigurationError(f"sample count must be >= 1, got {count}")
    cdf = np.cumsum(probabilities(s))
    total = cdf[-1]
    rng = np.random.default_rng(seed)
    u = rng.random(count) * total
    idx = np.searchsorted(cdf, u, side="right")
    # u < total always, but guard the float edge at the top of the CDF.
    np.minimum(idx, s.dim - 1, out=idx)
    return [int(i) for i in idx]
