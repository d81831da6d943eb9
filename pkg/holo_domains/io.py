"""
JSON Formats
============

Reading and writing configurations and verdicts.

Configuration:
    {"s": 2, "points": [[[0, -1], [0, 0]], [[0, 0], [0, 0]]], "fields": ["bose", "bose"]}

Each point is a list of s components, each component an [re, im] pair.
Output is written with sorted keys and a fixed indent, so identical
values always serialize to identical bytes.
"""

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Optional, Union

import jsonschema
import numpy as np

from .base import Verdict
from .geometry import ComplexVector, Configuration


class ConfigurationFormatError(ValueError):
    """
    Malformed configuration input.

    Attributes:
        line, column: 1-based position of a JSON syntax error
        path: JSON path of a schema violation, e.g. "points/1/0"
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
        path: Optional[str] = None,
    ):
        self.line = line
        self.column = column
        self.path = path
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        elif path:
            message = f"at {path}: {message}"
        super().__init__(message)


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    """Load one of the packaged schemas ("configuration" or "verdict")."""
    text = resources.files("holo_domains").joinpath("schemas", f"{name}.schema.json")
    return json.loads(text.read_text(encoding="utf-8"))


def _validate(instance: Any, schema_name: str) -> None:
    try:
        jsonschema.validate(instance=instance, schema=load_schema(schema_name))
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "(root)"
        raise ConfigurationFormatError(e.message, path=path) from None


def _reject_constant(name: str) -> None:
    raise ConfigurationFormatError(f"non-finite number {name} is not allowed")


def parse_configuration(text: str) -> Configuration:
    """
    Parse configuration JSON.

    Raises:
        ConfigurationFormatError: On invalid JSON (with line and column), NaN
            or Infinity literals, or a schema violation (with the JSON path)
        ValueError: If point dimensions or field counts disagree
    """
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ConfigurationFormatError(e.msg, line=e.lineno, column=e.colno) from None
    return configuration_from_dict(data)


def configuration_from_dict(data: Any) -> Configuration:
    _validate(data, "configuration")
    s = data["s"]
    points = []
    for index, point in enumerate(data["points"]):
        if len(point) != s:
            raise ConfigurationFormatError(
                f"point has {len(point)} components, expected s = {s}",
                path=f"points/{index}",
            )
        components = np.array([complex(re, im) for re, im in point])
        bad = np.flatnonzero(~np.isfinite(components))
        if bad.size:
            raise ConfigurationFormatError(
                "component is not a finite number", path=f"points/{index}/{bad[0]}"
            )
        points.append(ComplexVector(components))
    return Configuration.build(points, data.get("fields"))


def load_configuration(path: Union[str, Path]) -> Configuration:
    """Read a configuration file (UTF-8 JSON)."""
    return parse_configuration(Path(path).read_text(encoding="utf-8"))


def configuration_to_dict(c: Configuration, name: Optional[str] = None) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "s": c.s,
        "points": [
            [[float(z.real), float(z.imag)] for z in point.components]
            for point in c.points
        ],
        "fields": [flag.value for flag in c.fields],
    }
    if name is not None:
        out["name"] = name
    return out


def dumps(data: Any) -> str:
    """Byte-stable JSON text."""
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n"


def dump_configuration(c: Configuration, name: Optional[str] = None) -> str:
    return dumps(configuration_to_dict(c, name))


def validate_verdict(payload: Dict[str, Any]) -> None:
    """
    Check a verdict payload against the packaged verdict schema.

    Raises:
        ConfigurationFormatError: On the first violation
    """
    _validate(payload, "verdict")


def verdict_to_json(verdict: Verdict, validate: bool = False) -> str:
    payload = verdict.to_dict()
    if validate:
        validate_verdict(payload)
    return dumps(payload)
