"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes: ParseError -> 2,
MathDomainError -> 3, ScaleCapError -> 4.
"""


class BorelCoverError(Exception):
    """Base class for every error raised by this package."""


class ParseError(BorelCoverError):
    """Malformed textual or JSON input."""


class MathDomainError(BorelCoverError):
    """Input lies outside an operation's mathematical domain."""


class InadmissiblePolynomialError(MathDomainError):
    """Not an admissible Hilbert polynomial for the requested ambient space."""


class NotInChartError(MathDomainError):
    """The ideal's Plucker coordinate vanishes on the requested chart."""


class ReductionCapError(MathDomainError):
    """Tail reduction exceeded its step cap; a precondition was violated."""


class ScaleCapError(BorelCoverError):
    """Computation exceeds the configured desk-scale limits."""


class IterationCapError(ScaleCapError):
    """A randomized search loop exhausted its retry budget."""
