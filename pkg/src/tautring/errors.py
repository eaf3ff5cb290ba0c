"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was requested outside its mathematical domain.

    Examples: a non-stable graph, mismatched ambient spaces in a product,
    double ramification data whose weights do not sum to zero.
    """


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two evaluation routes that must agree do not, e.g. when a
    polynomial interpolated from sample values fails to reproduce a fresh
    sample.  This always indicates a bug or a violated assumption, never
    bad user input.
    """
