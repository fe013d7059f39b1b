import json
from typing import Optional

from termcode.constants import JSON_EXTENSION
from termcode.utilities.system import read_text, use_temporary_file_fallback, write_text


class Persistable:
    """
    Mixin for persisting objects as JSON documents
    """

    def to_json_dict(self) -> dict:
        raise NotImplementedError

    @classmethod
    def from_json_dict(cls, data: dict):
        raise NotImplementedError

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @use_temporary_file_fallback("output_path", JSON_EXTENSION)
    def save(self, output_path: Optional[str] = None) -> str:
        write_text(output_path, self.to_json() + "\n")

        return output_path

    @classmethod
    def load(cls, input_path: str):
        return cls.from_json_dict(json.loads(read_text(input_path)))
