from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from termcode.utilities.system import digest, read_text, write_text
from termcode.version import __version__

# Arguments that describe plumbing rather than the computation
_IGNORED_ARGUMENTS = ("func", "result", "record", "json", "debug")


class RunRecord(BaseModel):
    """
    Reproducibility record of one CLI run

    Attributes
    ----------
    command
        The subcommand that ran

    input_digest
        SHA-256 of the input file, empty for commands without one

    params
        Every argument of the command

    result
        What the command reported

    wall_time
        Seconds spent running the command

    version
        termcode version
    """

    model_config = ConfigDict(extra="forbid")

    command: str
    input_digest: str = ""
    params: Dict[str, Any] = Field(default_factory=dict)
    result: Dict[str, Any] = Field(default_factory=dict)
    wall_time: float = Field(default=0.0, ge=0)
    version: str = __version__

    @classmethod
    def from_arguments(cls, args, wall_time: float) -> "RunRecord":
        params = {
            key: _plain(value)
            for key, value in sorted(vars(args).items())
            if key not in _IGNORED_ARGUMENTS
        }
        input_path: Optional[str] = getattr(args, "file", None)
        return cls(
            command=args.command,
            input_digest=digest(read_text(input_path)) if input_path else "",
            params=params,
            result={key: _plain(value) for key, value in (getattr(args, "result", None) or {}).items()},
            wall_time=wall_time,
        )

    def save(self, output_path: str) -> str:
        write_text(output_path, self.model_dump_json(indent=2) + "\n")
        return output_path


def _plain(value):
    """JSON-compatible copy of argument values, numpy tables included"""
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)
