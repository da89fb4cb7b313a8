"""Deterministic report serialization.

Identical inputs must produce byte-identical files, so every writer sorts
keys, fixes separators, and never emits floats whose text could wobble.
Counts that can exceed 32 bits travel as decimal strings; field elements
travel as their coefficient arrays over F_p, constant term first.
"""

from __future__ import annotations

import csv
import io
import json

from .errors import GKError
from .field import Field

_VERSION_KEY = "gkcodes-report/1"


def dec(n: int) -> str:
    """Decimal-string form for counts that may not fit in 32 bits."""
    return str(int(n))


def elem(fieldobj: Field, a: int) -> list[int]:
    """A field element as its F_p coefficient array, constant term first."""
    return [int(c) for c in fieldobj.coeffs(int(a))]


def elem_vec(fieldobj: Field, vec) -> list[list[int]]:
    return [elem(fieldobj, a) for a in vec]


def _normalize(value):
    """Recursively force plain JSON types with deterministic ordering."""
    if isinstance(value, dict):
        out = {}
        for k in sorted(value, key=str):
            out[str(k)] = _normalize(value[k])
        return out
    if isinstance(value, (list, tuple)):
        return [_normalize(v) for v in value]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return int(value)
    if isinstance(value, float):
        raise GKError("CONFIG_INVALID",
                      "reports must not carry floats; format them upstream")
    if isinstance(value, str):
        return value
    if hasattr(value, "__dataclass_fields__"):
        return _normalize(vars(value))
    raise GKError("CONFIG_INVALID",
                  f"unserializable report value of type {type(value).__name__}")


def build_report(kind: str, config: dict, body: dict) -> dict:
    return _normalize({
        "format": _VERSION_KEY,
        "kind": kind,
        "config": config,
        "body": body,
    })


def to_json(report: dict) -> str:
    return json.dumps(_normalize(report), sort_keys=True, indent=1,
                      separators=(",", ": ")) + "\n"


def _flatten(prefix: str, value, rows: list):
    if isinstance(value, dict):
        for k in sorted(value, key=str):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], rows)
    elif isinstance(value, list):
        rows.append((prefix, json.dumps(value, separators=(",", ":"))))
    else:
        rows.append((prefix, "" if value is None else str(value)))


def to_csv(report: dict) -> str:
    """Key-path/value rows; lists stay as compact JSON in the value cell."""
    rows: list = []
    _flatten("", _normalize(report), rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("key", "value"))
    writer.writerows(rows)
    return buf.getvalue()


def render(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise GKError("CONFIG_INVALID", f"unknown report format {fmt!r}")


def write_report(report: dict, path, fmt: str = "json") -> str:
    text = render(report, fmt)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
