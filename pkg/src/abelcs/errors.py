"""Exception hierarchy.

Every error carries a stable ``code`` used by the command-line front end
and an ``exit_status`` (1 for computation errors, 2 for usage/input errors).
"""


class AbelCSError(Exception):
    code = "E_ABELCS"
    exit_status = 1


class InputError(AbelCSError):
    """Base for malformed or invalid user input."""

    code = "E_INPUT"
    exit_status = 2


class ParseError(InputError):
    code = "E_PARSE"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            loc = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{loc}: {message}"
        super().__init__(message)


class AsymmetricMatrix(InputError):
    code = "E_ASYMMETRIC"


class DimensionMismatch(InputError):
    code = "E_DIMENSION"


class InvalidParameter(InputError):
    code = "E_PARAMETER"


class InvalidLevel(InputError):
    code = "E_LEVEL"


class PreconditionViolated(InputError):
    code = "E_PRECONDITION"


class SingularMatrix(AbelCSError):
    code = "E_SINGULAR"


class DegenerateForm(AbelCSError):
    code = "E_DEGENERATE"


class NotSymmetric(AbelCSError):
    code = "E_NOT_SYMMETRIC"


class FreeHomologyPart(AbelCSError):
    code = "E_FREE_HOMOLOGY"


class BudgetExceeded(AbelCSError):
    code = "E_BUDGET"

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"summation needs {required} terms, budget is {budget}")


class OracleMismatch(AbelCSError):
    """An internal consistency check failed; always a bug, never bad input."""

    code = "E_ORACLE"
