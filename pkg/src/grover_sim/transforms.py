"""Unitary operations on state vectors.

Every function returns a new StateVector; the input is left untouched.
Butterflies are applied with stride ``2**bit`` under the LSB-first index
convention, each stage scaled by 1/sqrt(2) so intermediate norms stay at 1.
"""
from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DimensionMismatch
from .state import StateVector, check_index, check_qubits

INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass(frozen=True)
class PhaseSpec:
    """Rotate the phase of selected amplitudes by ``phi`` radians.

    ``predicate`` is either a collection of basis indices or a callable
    taking a basis index and returning truthy for the states to rotate.
    """

    phi: float
    predicate: Iterable[int] | Callable[[int], bool]

    def mask(self, n: int) -> np.ndarray:
        dim = 1 << n
        if callable(self.predicate):
            return np.fromiter((bool(self.predicate(i)) for i in range(dim)), dtype=bool, count=dim)
        out = np.zeros(dim, dtype=bool)
        for i in self.predicate:
            out[check_index(n, i)] = True
        return out


@dataclass(eq=False)
class Oracle:
    """Black-box condition C(S) marking a set of basis states.

    ``queries`` counts phase-flip invocations, one per call regardless of
    how many basis states are inspected. Not safe for concurrent flips.
    """

    n: int
    marked: frozenset[int] = field(default_factory=frozenset)
    queries: int = 0

    def __post_init__(self) -> None:
        self.n = check_qubits(self.n)
        self.marked = frozenset(check_index(self.n, i) for i in self.marked)
        self._marked_idx = np.fromiter(sorted(self.marked), dtype=np.intp, count=len(self.marked))

    def __call__(self, i: int) -> bool:
        return i in self.marked

    @property
    def marked_indices(self) -> np.ndarray:
        return self._marked_idx


def _butterfly(a: np.ndarray, bit: int) -> None:
    """In-place M on ``bit``: (a, b) -> ((a+b)/sqrt2, (a-b)/sqrt2)."""
    v = a.reshape(-1, 2, 1 << bit)
    lo = v[:, 0, :]
    hi = v[:, 1, :]
    total = np.add(lo, hi)
    total *= INV_SQRT2
    np.subtract(lo, hi, out=hi)
    hi *= INV_SQRT2
    lo[...] = total


def single_bit_m(s: StateVector, bit: int) -> StateVector:
    if not 0 <= bit < s.n:
        raise ConfigurationError(f"bit {bit} out of range for n={s.n}")
    out = s.amps.copy()
    _butterfly(out, bit)
    return StateVector(s.n, out)


def walsh_hadamard(s: StateVector) -> StateVector:
    """Apply M to every bit: O(N log N) in-place butterfly on a copy."""
    out = s.amps.copy()
    for bit in range(s.n):
        _butterfly(out, bit)
    return StateVector(s.n, out)


def selective_phase(s: StateVector, spec: PhaseSpec) -> StateVector:
    out = s.amps.copy()
    mask = spec.mask(s.n)
    out[mask] *= np.exp(1j * spec.phi)
    return StateVector(s.n, out)


def oracle_phase_flip(s: StateVector, o: Oracle) -> StateVector:
    """Negate marked amplitudes (a pi rotation); counts one oracle query."""
    if o.n != s.n:
        raise DimensionMismatch(f"oracle is over n={o.n}, state has n={s.n}")
    out = s.amps.copy()
    idx = o.marked_indices
    out[idx] = -out[idx]
    o.queries += 1
    return StateVector(s.n, out)


def diffusion_direct(s: StateVector) -> StateVector:
    """Inversion about average: v_i -> 2A - v_i with A the mean amplitude."""
    avg = s.amps.mean()
    out = np.subtract(2.0 * avg, s.amps)
    return StateVector(s.n, out)


def apply_r(s: StateVector) -> StateVector:
    """Conditional sign change: keep index 0, negate every other amplitude."""
    out = np.negative(s.amps)
    out[0] = s.amps[0]
    return StateVector(s.n, out)


def diffusion_wrw(s: StateVector) -> StateVector:
    """Diffusion as W, then R, then W."""
    return walsh_hadamard(apply_r(walsh_hadamard(s)))


DIFFUSIONS: dict[str, Callable[[StateVector], StateVector]] = {
    "direct": diffusion_direct,
    "wrw": diffusion_wrw,
}
