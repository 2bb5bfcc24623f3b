"""Exception hierarchy shared by the library and the CLI."""


class SchurMultError(ValueError):
    """Base class for every error raised on bad input."""


class PartitionError(SchurMultError):
    pass


class InvariantFactorError(SchurMultError):
    pass


class LemmaPreconditionError(SchurMultError):
    """The Frattini log-order ``a`` is zero, so ``m`` is undefined."""


class DegenerateCaseError(SchurMultError):
    """Third part is 1 (or missing): the exponent-minimal template applies instead."""


class HypothesisViolation(SchurMultError):
    pass


class OutOfTabulatedRange(SchurMultError):
    """No tabulated corollary disjuncts exist for this value of ``r``."""


class InconsistencyError(RuntimeError):
    """Derived invariants contradict each other. Indicates a bug, not bad input."""
