"""JSON codec interface and the complex-number encoding shared by every file format.

Complex entries are written as [re, im] pairs; plain numbers are accepted on
read. Floats use Python's shortest round-trip repr, so a dump/load cycle is
bit-exact.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Generic, TypeVar

import numpy as np

from lhcert.errors import FormatError, LHCertError

T = TypeVar("T")


def encode_complex(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def decode_complex(raw: Any) -> complex:
    if isinstance(raw, bool):
        raise FormatError(f"Expected a number or [re, im] pair, got {raw!r}")
    if isinstance(raw, (int, float)):
        return complex(raw)
    if isinstance(raw, list) and len(raw) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in raw
    ):
        return complex(raw[0], raw[1])
    raise FormatError(f"Expected a number or [re, im] pair, got {raw!r}")


def encode_vector(vector: np.ndarray) -> list[list[float]]:
    return [encode_complex(v) for v in np.asarray(vector).reshape(-1)]


def decode_vector(raw: Any) -> np.ndarray:
    if not isinstance(raw, list):
        raise FormatError(f"Expected a list of amplitudes, got {type(raw).__name__}")
    return np.array([decode_complex(v) for v in raw], dtype=complex)


def encode_matrix(matrix: np.ndarray) -> list[list[list[float]]]:
    return [encode_vector(row) for row in np.asarray(matrix)]


def decode_matrix(raw: Any) -> np.ndarray:
    if not isinstance(raw, list) or not raw or not all(isinstance(row, list) for row in raw):
        raise FormatError("Expected a non-empty matrix given as a list of rows")
    rows = [decode_vector(row) for row in raw]
    if len({len(row) for row in rows}) != 1:
        raise FormatError("Matrix rows have different lengths")
    return np.array(rows, dtype=complex)


def require(data: dict[str, Any], key: str, kind: type | tuple[type, ...], what: str) -> Any:
    """Fetch a mandatory field of the expected JSON type."""
    if key not in data:
        raise FormatError(f"{what} is missing field {key!r}")
    value = data[key]
    if isinstance(value, bool) and kind is int:
        raise FormatError(f"{what} field {key!r} must be {kind.__name__}")
    if not isinstance(value, kind):
        expected = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise FormatError(f"{what} field {key!r} must be {expected}")
    return value


def optional(data: dict[str, Any], key: str, kind: type, what: str, default: Any) -> Any:
    """Fetch an optional field, checking its JSON type when present."""
    if key not in data:
        return default
    return require(data, key, kind, what)


def require_indices(data: dict[str, Any], key: str, what: str) -> tuple[int, ...]:
    """Fetch a mandatory list of qubit indices."""
    values = require(data, key, list, what)
    if not all(isinstance(q, int) and not isinstance(q, bool) for q in values):
        raise FormatError(f"{what} field {key!r} must be a list of integers")
    return tuple(values)


def dumps(data: dict[str, Any]) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


class JsonCodec(ABC, Generic[T]):
    """Converts one domain type to and from plain JSON data."""

    kind: str = "object"

    @abstractmethod
    def encode(self, obj: T) -> dict[str, Any]:
        """Convert obj to JSON-compatible data."""

    @abstractmethod
    def decode(self, data: dict[str, Any]) -> T:
        """Build the domain object, raising FormatError on malformed data."""

    def loads(self, text: str) -> T:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"Invalid {self.kind} JSON: {e}") from e
        if not isinstance(data, dict):
            raise FormatError(f"{self.kind.capitalize()} JSON must be an object")
        try:
            return self.decode(data)
        except FormatError:
            raise
        except LHCertError as e:
            raise FormatError(f"Invalid {self.kind}: {e.message}") from e
        except (TypeError, ValueError) as e:
            raise FormatError(f"Invalid {self.kind}: {e}") from e

    def load(self, path: Path) -> T:
        if not path.exists():
            raise FormatError(f"{self.kind.capitalize()} file not found: {path}")
        return self.loads(path.read_text())

    def dumps(self, obj: T) -> str:
        return dumps(self.encode(obj))

    def dump(self, obj: T, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(obj))
