"""Exception types shared across the simulator."""


class ConfigurationError(ValueError):
    """Raised for out-of-range qubit counts, indices or run parameters."""


class DimensionMismatch(ValueError):
    """Raised when two operands disagree on the number of qubits."""
