"""Exception types shared across the package."""

import os


class GrothlatError(Exception):
    pass


class BudgetExceeded(GrothlatError):
    """A term, state or size cap was hit."""


class NonDivisible(GrothlatError, ArithmeticError):
    """Exact division left a nonzero remainder."""


class QPole(GrothlatError, ArithmeticError):
    """q survives in a denominator, so q=0 cannot be substituted."""


class NotGrassmannian(GrothlatError, ValueError):
    pass


class Inadmissible(GrothlatError, ValueError):
    """A vertex labeling matches no pattern of its weight family."""


class NotReduced(GrothlatError, ValueError):
    pass


class ParseError(GrothlatError, ValueError):
    pass


DEFAULT_TERM_BUDGET = 10**6
DEFAULT_STATE_BUDGET = 2 * 10**6


def term_budget():
    v = os.environ.get("GROTHLAT_BUDGET")
    return int(v) if v else DEFAULT_TERM_BUDGET


def state_budget():
    v = os.environ.get("GROTHLAT_BUDGET")
    return int(v) if v else DEFAULT_STATE_BUDGET
