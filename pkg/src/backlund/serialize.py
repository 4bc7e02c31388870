"""Deterministic report formatting.

All reports (JSON and CSV) print floats with 15 significant digits and a
lowercase exponent, carry no timestamps, and keep insertion order, so two
identical runs produce byte-identical output.
"""

from __future__ import annotations

import json
import math

__all__ = ["fmt_float", "dumps_json"]


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value in report: {x!r}")
    return format(float(x), ".15g")


def _write(obj, out: list, indent: int | None, level: int):
    pad = "" if indent is None else "\n" + " " * (indent * level)
    pad_close = "" if indent is None else "\n" + " " * (indent * (level - 1))
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if not isinstance(k, str):
                raise TypeError(f"report keys must be strings, got {k!r}")
            out.append(("," if i else "") + pad)
            out.append(json.dumps(k) + ": ")
            _write(v, out, indent, level + 1)
        out.append(pad_close + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[")
        for i, v in enumerate(obj):
            out.append(("," if i else "") + pad)
            _write(v, out, indent, level + 1)
        out.append(pad_close + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__} in a report")


def dumps_json(obj, indent: int | None = 2) -> str:
    """Serialize a report dict deterministically (see module docstring)."""
    out: list[str] = []
    _write(obj, out, indent, 1)
    return "".join(out)
