"""Exception hierarchy shared by all labelbalance modules.

The CLI maps these onto exit codes: parse/validation/consistency problems
exit 2, infeasibility and oracle limits exit 3.
"""


class LabelBalanceError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LabelBalanceError):
    """Malformed input file content; message names the offending line."""


class ValidationError(LabelBalanceError):
    """Input violates a structural invariant (duplicate ids, empty input)."""


class DimensionError(LabelBalanceError):
    """Vector lengths or matrix shapes do not line up."""


class DomainError(LabelBalanceError):
    """A value lies outside the mathematical domain of an operation."""


class ConsistencyError(LabelBalanceError):
    """Cross-file drift: a plan or prediction file does not match its dataset."""


class InfeasibleError(LabelBalanceError):
    """An occurrence vector falls outside its search-domain bounds."""


class OracleTooLargeError(LabelBalanceError):
    """Exhaustive enumeration was requested on a domain larger than its cap."""
