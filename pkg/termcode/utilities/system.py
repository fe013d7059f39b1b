import hashlib
import os
import tempfile

from termcode.constants import BUDGET_ENVIRONMENT_VARIABLE, DEFAULT_BUDGET
from termcode.exceptions import ParameterError, ParseError, SourceSpan
from termcode.utilities.general import preprocess_args

TEMP_PATH_BASE = tempfile.TemporaryDirectory().name


def ensure_directory_exists(*directories):
    for directory in directories:
        if directory and not os.path.exists(directory):
            os.makedirs(directory)


def read_text(path: str) -> str:
    """
    Reads a UTF-8 text file, tolerating CRLF line endings

    Raises
    ------
    ParseError
        If the file is not valid UTF-8. The span points at the first undecodable byte
    """
    with open(path, "rb") as file:
        data = file.read()

    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as error:
        line_start = data.rfind(b"\n", 0, error.start) + 1
        span = SourceSpan(data.count(b"\n", 0, error.start) + 1, error.start - line_start + 1)
        raise ParseError(
            f"{path} is not valid UTF-8: byte 0x{data[error.start]:02x} at offset {error.start}",
            span,
        )

    return text.replace("\r\n", "\n").replace("\r", "\n")


def write_text(path: str, text: str):
    ensure_directory_exists(os.path.dirname(os.path.abspath(path)))
    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)


def digest(text: str) -> str:
    """
    Returns
    -------
    Hex SHA-256 digest of the text
    """
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def get_budget() -> int:
    """
    Returns
    -------
    The enumeration budget in table entries, honouring the TC_BUDGET environment variable
    """
    value = os.environ.get(BUDGET_ENVIRONMENT_VARIABLE)
    if not value:
        return DEFAULT_BUDGET

    value = value.strip()
    try:
        if value.startswith("2**"):
            budget = 2 ** int(value[3:])
        else:
            budget = int(value)
    except ValueError:
        raise ParameterError(
            f"{BUDGET_ENVIRONMENT_VARIABLE} must be an integer or 2**k, got '{value}'"
        )
    if budget < 1:
        raise ParameterError(f"{BUDGET_ENVIRONMENT_VARIABLE} must be positive")

    return budget


def _generate_temp_file_path(extension: str) -> str:
    return TEMP_PATH_BASE + next(tempfile._RandomNameSequence()) + extension


def use_temporary_file_fallback(path_var: str, extension: str):
    """
    Decorator to set path_var to a temporary file path if it is None. Does not create the file.

    Parameters
    ----------
    path_var
        A variable expecting a file path

    extension
        extension for the temporary file
    """

    def _use_temporary_file_path(path_variable):
        return path_variable or _generate_temp_file_path(extension)

    return preprocess_args(_use_temporary_file_path, [path_var])
