"""Exception types shared by every module.

Each error carries a short machine-readable ``code`` that the command-line
front end reports alongside the message.
"""


class ContactKnotsError(Exception):
    code = "error"


class DomainError(ContactKnotsError, ValueError):
    """Input is well formed but outside the mathematical domain of the operation."""

    code = "domain"


class ParameterError(ContactKnotsError, ValueError):
    """A numeric or structural parameter is out of range."""

    code = "parameter"


class EvaluationError(ContactKnotsError, ArithmeticError):
    """A field or function produced a non-finite value."""

    code = "evaluation"
