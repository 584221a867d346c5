"""Search loop: uniform start, repeated flip + diffusion, measurement."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Literal, Union

import numpy as np

from .errors import ConfigurationError
from .state import StateVector, check_index, check_qubits, measure_sample, probabilities, uniform_state
from .transforms import DIFFUSIONS, Oracle, oracle_phase_flip

AUTO = "auto"
MAX_ITERATIONS = 1 << 20
IMAG_TOL = 1e-12

Iterations = Union[int, Literal["auto"]]


@dataclass(frozen=True)
class RunConfig:
    n: int
    marked: int
    iterations: Iterations = AUTO
    seed: int = 0
    sample_count: int = 0
    trace: bool = False
    diffusion: str = "direct"

    def __post_init__(self) -> None:
        check_qubits(self.n)
        check_index(self.n, self.marked)
        if self.iterations != AUTO:
            k = self.iterations
            if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= MAX_ITERATIONS:
                raise ConfigurationError(f"iterations must be 'auto' or an int in [0, {MAX_ITERATIONS}], got {k!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not isinstance(self.sample_count, int) or self.sample_count < 0:
            raise ConfigurationError(f"sample_count must be >= 0, got {self.sample_count!r}")
        if self.diffusion not in DIFFUSIONS:
            raise ConfigurationError(f"diffusion must be one of {sorted(DIFFUSIONS)}, got {self.diffusion!r}")


@dataclass(frozen=True)
class TrajectoryPoint:
    """Snapshot after ``j`` iterations.

    ``average_after_flip`` is the mean amplitude of this state once its
    marked amplitude is negated, i.e. the pivot the next diffusion inverts
    about.
    """

    j: int
    marked_amp: float
    unmarked_amp: float
    c_scale: float
    average_after_flip: float
    success_prob: float


@dataclass
class RunResult:
    config: RunConfig
    trajectory: list[TrajectoryPoint]
    final_success_prob: float
    iterations_executed: int
    oracle_queries: int
    samples: list[int]
    sample_hit_fraction: float | None
    final_state: StateVector = field(repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "iterations_executed": self.iterations_executed,
            "oracle_queries": self.oracle_queries,
            "final_success_prob": self.final_success_prob,
            "samples": list(self.samples),
            "sample_hit_fraction": self.sample_hit_fraction,
            "trajectory": [asdict(p) for p in self.trajectory],
        }


def grover_iterate(s: StateVector, o: Oracle, diffusion: str = "direct") -> StateVector:
    """One loop step: oracle phase flip, then inversion about average."""
    return DIFFUSIONS[diffusion](oracle_phase_flip(s, o))


def analytic_amplitude(n: int, j: int) -> float:
    """Marked amplitude after ``j`` iterations from the uniform start: sin((2j+1) theta)."""
    if j < 0:
        raise ConfigurationError(f"iteration index must be >= 0, got {j}")
    theta = math.asin(1.0 / math.sqrt(1 << n))
    return math.sin((2 * j + 1) * theta)


def analytic_success_prob(n: int, j: int) -> float:
    return analytic_amplitude(n, j) ** 2


def iteration_window(n: int) -> int:
    """Upper end of the AUTO search window, ceil(pi/4 * sqrt(N)) + 1."""
    return math.ceil(math.pi / 4 * math.sqrt(1 << n)) + 1


def resolve_iterations(n: int, mode: Iterations) -> int:
    if mode != AUTO:
        return int(mode)
    probs = [analytic_success_prob(n, j) for j in range(iteration_window(n) + 1)]
    best = max(probs)
    # Near-ties (e.g. N=2, where every j gives 1/2) resolve to the smallest j.
    return next(j for j, p in enumerate(probs) if p >= best - 1e-12)


def _trace_point(s: StateVector, j: int, marked: int) -> TrajectoryPoint:
    amps = s.amps
    other = 1 if marked == 0 else 0
    k, ell = amps[marked], amps[other]
    if abs(k.imag) > IMAG_TOL or abs(ell.imag) > IMAG_TOL:
        raise RuntimeError(f"trajectory left the real axis at j={j}: {k}, {ell}")
    dim = s.dim
    avg_flipped = (amps.sum().real - 2.0 * k.real) / dim
    return TrajectoryPoint(
        j=j,
        marked_amp=float(k.real),
        unmarked_amp=float(ell.real),
        c_scale=float(ell.real * math.sqrt(dim)),
        average_after_flip=float(avg_flipped),
        success_prob=float(k.real * k.real),
    )


def run(cfg: RunConfig) -> RunResult:
    """Uniform start, resolved number of iterations, optional trace and sampling."""
    iterations = resolve_iterations(cfg.n, cfg.iterations)
    oracle = Oracle(cfg.n, frozenset({cfg.marked}))
    state = uniform_state(cfg.n)
    trajectory = []
    if cfg.trace:
        trajectory.append(_trace_point(state, 0, cfg.marked))
    for j in range(1, iterations + 1):
        state = grover_iterate(state, oracle, cfg.diffusion)
        if cfg.trace:
            trajectory.append(_trace_point(state, j, cfg.marked))

    final_prob = float(probabilities(state)[cfg.marked])
    samples: list[int] = []
    hit_fraction = None
    if cfg.sample_count > 0:
        samples = measure_sample(state, cfg.seed, cfg.sample_count)
        hit_fraction = sum(x == cfg.marked for x in samples) / len(samples)
    return RunResult(
        config=cfg,
        trajectory=trajectory,
        final_success_prob=final_prob,
        iterations_executed=iterations,
        oracle_queries=oracle.queries,
        samples=samples,
        sample_hit_fraction=hit_fraction,
        final_state=state,
    )


@dataclass(frozen=True)
class ClassicalSummary:
    n: int
    trials: int
    mean_queries: float
    median_queries: float
    queries_for_half_success: int


def classical_baseline(n: int, seed: int, trials: int) -> ClassicalSummary:
    """Random-order scan without repetition against a uniformly random target.

    Each trial draws a target and a fresh permutation of the N entries and
    counts lookups until the target turns up.
    """
    n = check_qubits(n)
    if trials < 1:
        raise ConfigurationError(f"trials must be >= 1, got {trials}")
    dim = 1 << n
    rng = np.random.default_rng(seed)
    counts = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        target = rng.integers(dim)
        order = rng.permutation(dim)
        counts[t] = int(np.flatnonzero(order == target)[0]) + 1
    counts.sort()
    # smallest q with #{count <= q} / trials >= 1/2
    half = int(counts[math.ceil(trials / 2) - 1])
    return ClassicalSummary(
        n=n,
        trials=trials,
        mean_queries=float(counts.mean()),
        median_queries=float(np.median(counts)),
        queries_for_half_success=half,
    )
