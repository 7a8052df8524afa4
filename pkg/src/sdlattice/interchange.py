"""JSON interchange format for lattices.

A file holds one object with exactly the keys ``name`` (string),
``elements`` (array of strings) and ``covers`` (array of ``[lower, upper]``
string pairs).
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import FiniteLattice, validate_lattice
from .errors import ParseError

_KEYS = ("name", "elements", "covers")


def to_dict(L: FiniteLattice) -> dict:
    return {
        "name": L.name,
        "elements": list(L.elements),
        "covers": [list(c) for c in L.covers],
    }


def dumps(L: FiniteLattice) -> str:
    return json.dumps(to_dict(L), ensure_ascii=False)


def from_dict(data) -> FiniteLattice:
    if not isinstance(data, dict):
        raise ParseError("lattice document must be a JSON object")
    unknown = sorted(set(data) - set(_KEYS))
    if unknown:
        raise ParseError(f"unknown keys: {', '.join(unknown)}")
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    name, elements, covers = data["name"], data["elements"], data["covers"]
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise ParseError("'elements' must be an array of strings")
    if not isinstance(covers, list):
        raise ParseError("'covers' must be an array")
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise ParseError(f"bad cover entry {c!r}")
        pairs.append((c[0], c[1]))
    return validate_lattice(elements, pairs, name)


def loads(text: str) -> FiniteLattice:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_dict(data)


def load(path) -> FiniteLattice:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(L: FiniteLattice, path) -> None:
    Path(path).write_text(dumps(L) + "\n", encoding="utf-8")
