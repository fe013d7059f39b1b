from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """
    A 1-based location in a source file

    Attributes
    ----------
    line
        Line number

    column
        Column of the first character

    length
        Number of characters covered, at least 1
    """

    line: int
    column: int
    length: int = 1

    def to_dict(self) -> dict:
        return {"line": self.line, "column": self.column, "length": self.length}


class TermCodeError(Exception):
    """
    The root termcode exception class
    """

    pass


class ParameterError(TermCodeError):
    """
    Exception class for mal-formed inputs
    """

    pass


class ParseError(TermCodeError):
    """
    Exception class for syntax errors in system and formula files

    Attributes
    ----------
    span
        Location of the offending token, if known
    """

    def __init__(self, message: str, span=None):
        self.span = span
        if span is not None:
            message = f"{message} (line {span.line}, column {span.column})"
        super().__init__(message)


class ValidationError(TermCodeError):
    """
    Exception class for ill-typed systems

    Attributes
    ----------
    report
        The validation report listing every issue found
    """

    def __init__(self, report):
        self.report = report
        super().__init__(
            "; ".join(str(issue) for issue in report.issues) or "invalid system"
        )


class BudgetError(TermCodeError):
    """
    Exception class for work exceeding a configured budget or cap
    """

    pass


class VerificationError(TermCodeError):
    """
    Exception class for witnesses or oracles that fail to confirm a claim
    """

    pass


class CompileError(TermCodeError):
    """
    Exception class for first-order sentences the compiler cannot accept
    """

    pass
