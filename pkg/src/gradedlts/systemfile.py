"""Reading and writing graded triple systems as JSON documents.

Document layout::

    {
      "group":     {"moduli": [0, 2, ...]},          # 0 = infinite factor
      "field":     {"kind": "rational"}               # or {"kind": "prime", "p": 5}
      "dimension": n,
      "degrees":   [[...], ...],                      # one coordinate vector per basis vector
      "triple":    [{"args": [i, j, k],
                     "out": [{"idx": l, "val": "a" or "a/b"}, ...]}, ...]
    }

Indices are 0-based; scalars are strings with arbitrary-precision integers
and positive denominators; unspecified argument triples mean a zero
product; duplicate argument triples (and duplicate output indices within a
record) are rejected.  Serialization is canonical: records sorted by
arguments, outputs sorted by index, zero entries omitted, two-space
indentation, and a trailing newline, so that parse -> serialize -> parse is
the identity and equal systems serialize byte-identically.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError
from .groups import AbelianGroup
from .linalg import field_from_descriptor
from .triples import GradedTripleSystem

_SCALAR_KINDS = (str,)


def load_system(path) -> GradedTripleSystem:
    """Parse a system from a file path."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads_system(text)


def loads_system(text: str) -> GradedTripleSystem:
    """Parse a system from a JSON string."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    return system_from_data(data)


def system_from_data(data) -> GradedTripleSystem:
    if not isinstance(data, dict):
        raise InputError("top-level document must be an object")
    for key in ("group", "field", "dimension", "degrees", "triple"):
        if key not in data:
            raise InputError(f"missing required key {key!r}")

    group_desc = data["group"]
    if not isinstance(group_desc, dict) or "moduli" not in group_desc:
        raise InputError("group must be an object with a 'moduli' list")
    moduli = group_desc["moduli"]
    if not isinstance(moduli, list) or not all(isinstance(m, int) for m in moduli):
        raise InputError("group moduli must be a list of integers")
    group = AbelianGroup(tuple(moduli))

    if not isinstance(data["field"], dict):
        raise InputError("field must be an object")
    field = field_from_descriptor(data["field"])

    n = data["dimension"]
    if not isinstance(n, int) or n < 0:
        raise InputError("dimension must be a non-negative integer")

    degrees_raw = data["degrees"]
    if not isinstance(degrees_raw, list) or len(degrees_raw) != n:
        raise InputError(f"degrees must list exactly {n} coordinate vectors")
    degrees = []
    for coords in degrees_raw:
        if not isinstance(coords, list) or not all(isinstance(c, int) for c in coords):
            raise InputError("each degree must be a list of integers")
        degrees.append(group.element(coords))

    triple_raw = data["triple"]
    if not isinstance(triple_raw, list):
        raise InputError("triple must be a list of records")
    products: dict[tuple[int, int, int], dict[int, object]] = {}
    for record in triple_raw:
        if not isinstance(record, dict) or "args" not in record or "out" not in record:
            raise InputError("each triple record needs 'args' and 'out'")
        args = record["args"]
        if (
            not isinstance(args, list)
            or len(args) != 3
            or not all(isinstance(a, int) for a in args)
        ):
            raise InputError(f"args must be three integers, got {args!r}")
        i, j, k = args
        if not all(0 <= t < n for t in (i, j, k)):
            raise InputError(f"args {args} out of range for dimension {n}")
        if (i, j, k) in products:
            raise InputError(f"duplicate triple record for args {args}")
        out = record["out"]
        if not isinstance(out, list):
            raise InputError("out must be a list")
        entry: dict[int, object] = {}
        for item in out:
            if not isinstance(item, dict) or "idx" not in item or "val" not in item:
                raise InputError("each output needs 'idx' and 'val'")
            l = item["idx"]
            if not isinstance(l, int) or not 0 <= l < n:
                raise InputError(f"output index {l!r} out of range")
            if l in entry:
                raise InputError(f"duplicate output index {l} for args {args}")
            val = item["val"]
            if not isinstance(val, _SCALAR_KINDS):
                raise InputError(f"scalar values must be strings, got {val!r}")
            entry[l] = field.element(val)
        products[(i, j, k)] = entry
    return GradedTripleSystem(field, group, degrees, products)


def system_to_data(system: GradedTripleSystem) -> dict:
    """Canonical plain-data form of a system."""
    field_desc = (
        {"kind": "rational"}
        if system.field.kind == "rational"
        else {"kind": "prime", "p": system.field.p}
    )
    triple = []
    for (i, j, k), entry in system.structure_constants():
        triple.append(
            {
                "args": [i, j, k],
                "out": [{"idx": l, "val": system.field.format(c)} for l, c in entry],
            }
        )
    return {
        "group": {"moduli": list(system.group.moduli)},
        "field": field_desc,
        "dimension": system.dim,
        "degrees": [list(d.coords) for d in system.degrees],
        "triple": triple,
    }


def dumps_system(system: GradedTripleSystem) -> str:
    return json.dumps(system_to_data(system), indent=2) + "\n"


def dump_system(system: GradedTripleSystem, path) -> None:
    Path(path).write_text(dumps_system(system), encoding="utf-8")
