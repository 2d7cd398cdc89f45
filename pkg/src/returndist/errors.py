"""Exception types shared across the package.

The CLI maps these onto exit codes: data/format problems exit 2,
computation failures (degenerate samples, domain violations) exit 3.
"""


class ReturnDistError(Exception):
    """Base class for every error raised by this package."""


class DataFormatError(ReturnDistError):
    """Malformed input: bad header, unparsable row, duplicate dates."""


class EmptyInputError(DataFormatError):
    """Input contained no data rows at all."""


class InsufficientDataError(ReturnDistError):
    """Too few observations for the requested statistic."""


class DegenerateSampleError(ReturnDistError):
    """Sample has zero variance; the statistic is undefined."""


class DegenerateFitError(DegenerateSampleError):
    """Fitted scale parameter would be zero."""


class DomainError(ReturnDistError):
    """Argument outside the mathematical domain of the operation."""
