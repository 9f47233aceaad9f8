"""Exception hierarchy shared by every lerchlab module.

Each class marks one failure mode of the public API: structurally bad
arguments, arguments outside an operation's domain, genuinely divergent
quantities, parameter sets rejected by an identity's hypotheses, cases a
reduced-form evaluator does not cover, and numerical routines that ran out
of budget before reaching their accuracy target.
"""

from __future__ import annotations


class LerchLabError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(LerchLabError):
    """Structurally invalid argument (wrong kind, out-of-range table size)."""


class DomainError(LerchLabError):
    """Argument outside the mathematical domain of the operation."""


class DivergenceError(LerchLabError):
    """The requested quantity diverges and has no adopted finite value."""


class ValidationError(LerchLabError):
    """Parameter set rejected by an identity's hypotheses.

    Attributes
    ----------
    validity : object
        The ``Validity`` record explaining the rejection, when available.
    """

    def __init__(self, message: str, validity: object | None = None) -> None:
        super().__init__(message)
        self.validity = validity


class UnsupportedCaseError(LerchLabError):
    """No reduced closed form is provided for this parameter set."""


class NonConvergedError(LerchLabError):
    """A numerical routine exhausted its budget before meeting its target."""
