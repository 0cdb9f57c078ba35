"""Exception taxonomy shared by all modules.

Each class maps to one CLI exit code: configuration problems exit 2,
numeric/certification failures exit 3, precondition failures exit 4.
"""


class PolysampError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ConfigurationError(PolysampError):
    """Bad user input: unknown domain/keys, invalid combinations."""

    exit_code = 2


class ContractViolation(PolysampError):
    """A documented precondition on arguments was violated by the caller."""

    exit_code = 4


class PreconditionError(PolysampError):
    """A mathematical precondition fails (e.g. family is not a frame)."""

    exit_code = 4


class UnsupportedOperationError(PolysampError):
    """Operation not defined for this domain kind."""

    exit_code = 2


class NumericError(PolysampError):
    """Numerical failure: non-finite values, solver breakdown, lost positivity."""

    exit_code = 3


class BuildError(NumericError):
    """Construction-time certification failed (quadrature exactness, ...)."""


class DegeneracyError(NumericError):
    """Ambiguous numerical rank or degenerate node configuration."""


class ResolutionError(PolysampError):
    """Requested resolution is finer than the supported candidate grids."""

    exit_code = 2
