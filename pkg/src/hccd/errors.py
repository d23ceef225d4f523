"""Exception and warning types shared across the package."""


class HccdError(Exception):
    """Base class for all package-specific errors."""


class CyclicGraph(HccdError):
    """A directed cycle was found where a DAG is required."""


class UnknownNode(HccdError, KeyError):
    """A variable name does not belong to the graph or dataset."""


class NoConsistentExtension(HccdError):
    """The partially directed graph admits no extension that preserves
    its directed edges without creating cycles or new v-structures."""


class NodeMismatch(HccdError):
    """Two graphs being compared are defined over different node sets."""


class SingularCovariance(HccdError):
    """The conditioning correlation submatrix is not invertible, even
    after ridge regularization."""


class InsufficientSamples(HccdError):
    """Too few samples for the requested conditional independence test."""


class NonDiscreteData(HccdError):
    """A discrete-only operation received continuous data."""


class EigenFailure(HccdError):
    """The eigensolver did not converge."""


class ZeroAssociation(HccdError):
    """A cluster has zero total association but nonzero cut mass."""


class RetryLimit(HccdError):
    """A rejection-sampling loop exceeded its retry budget."""


class TooLarge(HccdError):
    """Input exceeds the bound for an exhaustive-enumeration operation."""


class ParseError(HccdError):
    """A structured input file could not be parsed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DegenerateTableWarning(UserWarning):
    """A contingency-table test involved an observed-constant variable."""


class ConstantColumnWarning(UserWarning):
    """A pairwise-strength computation involved a constant column."""
