import json
import sys
from typing import Optional

from termcode.exceptions import (
    BudgetError,
    CompileError,
    ParameterError,
    ParseError,
    ValidationError,
    VerificationError,
)
from termcode.utilities.system import write_text

EXIT_CODES = {
    ParameterError: 1,
    ParseError: 2,
    ValidationError: 2,
    CompileError: 2,
    BudgetError: 3,
    VerificationError: 4,
}
DEFAULT_EXIT_CODE = 1


def exit_code(error: Exception) -> int:
    for error_class in type(error).__mro__:
        if error_class in EXIT_CODES:
            return EXIT_CODES[error_class]
    return DEFAULT_EXIT_CODE


def error_payload(error: Exception) -> dict:
    span = getattr(error, "span", None)
    return {
        "error": type(error).__name__,
        "message": str(error),
        "span": span.to_dict() if span is not None else None,
        "exit_code": exit_code(error),
    }


def shutdown(error: Exception, as_json: bool = False):
    """
    Reports an error on stderr and exits with its code
    """
    if as_json:
        sys.stderr.write(json.dumps(error_payload(error)) + "\n")
    else:
        sys.stderr.write(f"error: {error}\n")
    sys.exit(exit_code(error))


def message(message: str):
    print(message)


def report(args, text: str, **data):
    """
    Prints a command result as text, or as a JSON document with --json. The data is kept on
    args for the run record.
    """
    args.result = data
    if getattr(args, "json", False):
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        message(text)


def write_or_print(args, text: str, output: Optional[str] = None):
    """
    Writes generated .tc text to a file, or prints it when no file is given
    """
    if output:
        write_text(output, text)
        report(args, f"Wrote {output}", output=output)
    else:
        args.result = {"text": text}
        if getattr(args, "json", False):
            print(json.dumps({"text": text}, indent=2))
        else:
            sys.stdout.write(text)

