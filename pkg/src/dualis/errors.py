"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the command line
driver can map it onto an exit status without string matching.
"""


class DualisError(Exception):
    code = "E_DUALIS"


class StructuralError(DualisError, ValueError):
    """Operands do not fit together (ring mismatch, wrong vector length, ...)."""

    code = "E_STRUCT"


class PreconditionError(DualisError, ValueError):
    code = "E_PRECONDITION"


class NonHomogeneousError(PreconditionError):
    code = "E_NONHOMOG"

    def __init__(self, message="input ideal must be homogeneous"):
        super().__init__(message)


class EmptyIdealError(PreconditionError):
    code = "E_EMPTY"

    def __init__(self, message="input ideal is the zero ideal"):
        super().__init__(message)


class BadRadicalError(PreconditionError):
    code = "E_BAD_RADICAL"


class NotOnVarietyError(PreconditionError):
    code = "E_NOT_ON_VARIETY"


class ConstantCurveError(PreconditionError):
    code = "E_CONST"


class TrivialLocusError(PreconditionError):
    code = "E_TRIVIAL"


class WindowError(PreconditionError):
    code = "E_WINDOW"


class StepLimitExceeded(DualisError, RuntimeError):
    code = "E_STEP_LIMIT"


class ParseError(DualisError, ValueError):
    """Syntax error in an ideal document.

    ``line`` and ``column`` are 1-based; ``expected`` is the sorted set of
    token descriptions that would have been accepted at that position.
    """

    code = "E_PARSE"

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(text)


class UnknownVariableError(ParseError):
    code = "E_UNKNOWN_VAR"


class ReservedNameError(ParseError):
    code = "E_RESERVED_NAME"
