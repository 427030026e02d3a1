class RulehideError(Exception):
    """Base class for all errors raised by rulehide."""


class ParseError(RulehideError, ValueError):
    """Malformed basket, rules or log text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(RulehideError, ValueError):
    """A threshold or margin outside its admissible range."""


class ContractError(RulehideError, ValueError):
    """A caller broke an operation's precondition."""


class UndefinedConfidenceError(ContractError):
    """Confidence requested for an antecedent with zero support."""


class HidingFailure(RulehideError):
    """A sensitive rule is still minable after sanitization."""
