# Library imports
import json
from pathlib import Path
from typing import Any, TypeVar
from pydantic import BaseModel, TypeAdapter, ValidationError

T = TypeVar("T")


class DocumentError(Exception):
    """A file that could not be read against the documented JSON grammar."""

    def __init__(self, path: Path | str, message: str):
        self.path = str(path)
        self.message = message
        super().__init__(f"{self.path}: {message}")


def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json", by_alias=True, exclude_none=True)
    return value


def dumps_canonical(value: Any) -> str:
    """Sorted keys, compact separators, trailing newline."""
    return json.dumps(to_jsonable(value), sort_keys=True, separators=(",", ":")) + "\n"


def describe_validation_error(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "<document>"
    return f"field '{location}': {first['msg']}"


def load_json(path: Path | str) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(path, f"cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(path, f"invalid JSON ({exc.msg})") from exc


def validate_document(path: Path | str, data: Any, model: Any) -> Any:
    try:
        return TypeAdapter(model).validate_python(data)
    except ValidationError as exc:
        raise DocumentError(path, describe_validation_error(exc)) from exc


def load_document(path: Path | str, model: type[T]) -> T:
    return validate_document(path, load_json(path), model)


def parse_payload(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("<argument>", f"invalid JSON ({exc.msg})") from exc
