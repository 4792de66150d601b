"""Exception taxonomy shared by the library and mapped to CLI exit codes."""


class ContractViolation(ValueError):
    """An argument violates an operation's stated preconditions."""


class RankOutOfRange(ContractViolation):
    """Requested rank k is outside the valid range [1, m-1]."""


class NumericFailure(RuntimeError):
    """A numerical routine failed: non-convergence or inconsistent energies."""


class DegenerateDistribution(ValueError):
    """A zero residual energy makes the inferred density undefined."""


class PersistenceError(ValueError):
    """A model file cannot be read: bad magic, wrong version, or truncated."""


class IngestionError(ValueError):
    """A CSV input cannot be parsed into a numeric matrix."""
