"""Numerical check of the operator identities on explicit matrices.

Each identity is evaluated for n = 1..max_qubits and reported as the worst
elementwise deviation over all sizes.
"""
from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from . import dense
from .state import StateVector
from .transforms import diffusion_direct, diffusion_wrw, walsh_hadamard

MATRIX_TOL = 1e-12
FAST_TOL = 1e-10
VERIFY_MAX_QUBITS = 8


@dataclass
class IdentityCheck:
    name: str
    tol: float
    max_deviation: float = 0.0
    worst_n: int = 0

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tol

    def record(self, n: int, dev: float) -> None:
        if dev > self.max_deviation or not self.worst_n:
            self.max_deviation = dev
            self.worst_n = n


def random_state(n: int, rng: np.random.Generator) -> StateVector:
    """Normalized state with i.i.d. complex Gaussian amplitudes."""
    dim = 1 << n
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector(n, v / np.linalg.norm(v))


def _unitarity_deviation(a: dense.DenseOperator) -> float:
    prod = a.entries @ a.entries.conj().T
    return float(np.max(np.abs(prod - np.eye(a.dim))))


def run_identity_suite(
    max_qubits: int = 6,
    seed: int = 0,
    vectors_per_n: int = 20,
    build_r: Callable[[int], dense.DenseOperator] | None = None,
) -> list[IdentityCheck]:
    """Evaluate every identity; ``build_r`` overrides the R construction."""
    if not 1 <= max_qubits <= VERIFY_MAX_QUBITS:
        raise ValueError(f"max_qubits must be in [1, {VERIFY_MAX_QUBITS}], got {max_qubits}")
    build_r = build_r or dense.build_r
    names = [
        ("WW=I", MATRIX_TOL),
        ("D=WRW", MATRIX_TOL),
        ("D=-I+2P", MATRIX_TOL),
        ("P^2=P", MATRIX_TOL),
        ("D^2=I", MATRIX_TOL),
        ("WR1W=-I", MATRIX_TOL),
        ("WR2W=2/N", MATRIX_TOL),
        ("W unitary", MATRIX_TOL),
        ("D unitary", MATRIX_TOL),
        ("fast W = dense W", FAST_TOL),
        ("direct D = dense D", FAST_TOL),
        ("WRW D = dense D", FAST_TOL),
    ]
    checks = {name: IdentityCheck(name, tol) for name, tol in names}
    rng = np.random.default_rng(seed)

    for n in range(1, max_qubits + 1):
        w, r, p, d = dense.build_w(n), build_r(n), dense.build_p(n), dense.build_d(n)
        eye = dense.identity(n)
        dim = 1 << n
        checks["WW=I"].record(n, dense.max_deviation(w @ w, eye))
        checks["D=WRW"].record(n, dense.max_deviation(d, w @ r @ w))
        checks["D=-I+2P"].record(n, dense.max_deviation(d, p.scale(2.0) - eye))
        checks["P^2=P"].record(n, dense.max_deviation(p @ p, p))
        checks["D^2=I"].record(n, dense.max_deviation(d @ d, eye))
        checks["WR1W=-I"].record(n, dense.max_deviation(w @ dense.build_r1(n) @ w, -eye))
        d2 = (w @ dense.build_r2(n) @ w).entries
        checks["WR2W=2/N"].record(n, float(np.max(np.abs(d2 - 2.0 / dim))))
        checks["W unitary"].record(n, _unitarity_deviation(w))
        checks["D unitary"].record(n, _unitarity_deviation(d))

        for _ in range(vectors_per_n):
            v = random_state(n, rng)
            checks["fast W = dense W"].record(n, _vec_dev(walsh_hadamard(v), dense.mat_vec(w, v)))
            ref = dense.mat_vec(d, v)
            checks["direct D = dense D"].record(n, _vec_dev(diffusion_direct(v), ref))
            checks["WRW D = dense D"].record(n, _vec_dev(diffusion_wrw(v), ref))

    return list(checks.values())


def _vec_dev(a: StateVector, b: StateVector) -> float:
    return float(np.max(np.abs(a.amps - b.amps)))


def format_table(checks: list[IdentityCheck]) -> str:
    width = max(len(c.name) for c in checks)
    lines = [f"{'identity':<{width}}  {'max_dev':>10}  {'tol':>7}  {'n':>2}  result"]
    for c in checks:
        lines.append(
            f"{c.name:<{width}}  {c.max_deviation:10.3e}  {c.tol:7.0e}  {c.worst_n:>2}  "
            f"{'PASS' if c.passed else 'FAIL'}"
        )
    return "\n".join(lines)
