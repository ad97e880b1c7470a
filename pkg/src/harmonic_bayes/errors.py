"""Exception hierarchy.

Each family maps onto one of the stable CLI exit codes: input-contract
violations exit with 2, file problems with 3, numerical degeneracy with 4.
"""

from __future__ import annotations


class HarmonicBayesError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class InputContractError(HarmonicBayesError, ValueError):
    """A caller broke a documented precondition."""

    exit_code = 2


class BasisMismatchError(InputContractError):
    """Two coefficient vectors live in different bases."""


class DomainError(InputContractError):
    """An evaluation point or basis/domain pairing is invalid."""


class UnsupportedBasisError(InputContractError):
    """The operation is not defined for this basis kind."""


class NumericalDegeneracyError(HarmonicBayesError, ArithmeticError):
    """A computation produced a degenerate or meaningless quantity."""

    exit_code = 4


class InvalidPosteriorError(NumericalDegeneracyError):
    """The unnormalized posterior has non-positive or complex mass."""


class CoefficientFileError(HarmonicBayesError, OSError):
    """A coefficient file could not be read, parsed or written."""

    exit_code = 3
