"""State-vector simulation of quantum search over an unsorted database."""

from .dense import (
    DenseOperator,
    build_d,
    build_p,
    build_r,
    build_r1,
    build_r2,
    build_w,
    identity,
    is_unitary,
    mat_mul,
    mat_vec,
)
from .engine import (
    AUTO,
    ClassicalSummary,
    RunConfig,
    RunResult,
    TrajectoryPoint,
    analytic_amplitude,
    analytic_success_prob,
    classical_baseline,
    grover_iterate,
    resolve_iterations,
    run,
)
from .errors import ConfigurationError, DimensionMismatch
from .state import StateVector, basis_state, measure_sample, norm, probabilities, uniform_state
from .transforms import (
    Oracle,
    PhaseSpec,
    diffusion_direct,
    diffusion_wrw,
    oracle_phase_flip,
    selective_phase,
    single_bit_m,
    walsh_hadamard,
)

__version__ = "0.1.0"
