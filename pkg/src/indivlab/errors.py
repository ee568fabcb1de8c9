"""Exception types shared across the package.

ValueError is used for malformed input throughout; the two classes here
cover the remaining failure modes: a request whose declared budget or
size cap is exceeded before any work is attempted, and an anytime search
that ran out of budget without reaching a decision.
"""


class CapacityError(Exception):
    """The instance exceeds a declared size or budget cap."""


class IncompleteSearchError(Exception):
    """A budgeted search ended without a definite answer.

    Raised instead of returning a possibly-wrong certificate; callers can
    retry with a larger budget.
    """
