"""
Knot records: one line of a batch input file.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

from ..diagram import GoeritzForm, PlanarDiagram, parse_pd
from ..utils.errors import PDParseError
from ..utils.helpers import parse_rational

_FIELDS = {"name", "pd", "goeritz", "expected", "source", "provenance"}
_EXPECTED_FIELDS = {"det", "D"}


def _check_expected(name: str, expected: Any) -> None:
    """Reject expected blocks that verification could not read."""
    if not isinstance(expected, dict):
        raise PDParseError(f"Record {name!r}: 'expected' must be an object")
    unknown = sorted(set(expected) - _EXPECTED_FIELDS)
    if unknown:
        raise PDParseError(f"Record {name!r}: unknown expected field {unknown[0]!r}")
    det = expected.get("det")
    if det is not None and (isinstance(det, bool) or not isinstance(det, int)):
        raise PDParseError(f"Record {name!r}: expected det must be an integer, got {det!r}")
    values = expected.get("D") or {}
    if not isinstance(values, dict):
        raise PDParseError(f"Record {name!r}: expected D must be an object")
    for q, value in values.items():
        if not str(q).isdigit() or int(q) < 1:
            raise PDParseError(f"Record {name!r}: expected D key {q!r} is not a positive integer")
        parse_rational(value)


@dataclass(frozen=True)
class KnotRecord:
    """
    A knot given either by a PD code or by a knot form.

    Attributes:
        name: Knot name
        pd: PD code (JSON string or nested list)
        goeritz: Matrix rows of a negative-definite form
        expected: Optional {"det": int, "D": {"q": value}} used for comparison only
        source: Fixture kind, e.g. "alternating-pd" or "external-matrix"
        provenance: Free-text note on where the data came from
    """

    name: str
    pd: Any = None
    goeritz: Any = None
    expected: Optional[Dict[str, Any]] = None
    source: Optional[str] = None
    provenance: Optional[str] = None

    def __post_init__(self):
        if (self.pd is None) == (self.goeritz is None):
            raise PDParseError(f"Record {self.name!r} must have exactly one of 'pd' or 'goeritz'")
        if self.expected is not None:
            _check_expected(self.name, self.expected)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "KnotRecord":
        if not isinstance(data, dict):
            raise PDParseError(f"Record must be a JSON object, got {type(data).__name__}")
        unknown = sorted(set(data) - _FIELDS)
        if unknown:
            raise PDParseError(f"Unknown record field {unknown[0]!r}")
        if not isinstance(data.get("name"), str):
            raise PDParseError("Record needs a string 'name'")
        return cls(**data)

    @classmethod
    def from_json(cls, line: str) -> "KnotRecord":
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise PDParseError(f"Malformed JSON record: {e.msg}") from e
        return cls.from_dict(data)

    def to_input(self) -> Union[PlanarDiagram, GoeritzForm]:
        """Parse the record's diagram or validate its matrix."""
        if self.pd is not None:
            return parse_pd(self.pd)
        return GoeritzForm.from_rows(self.goeritz)
