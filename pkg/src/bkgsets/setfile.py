"""Reading and writing set files.

The canonical format is JSON::

    {"k": 2, "g": 1, "group": "integers", "elements": [1, 2, 5, 7]}

with ``"group": {"cyclic": m}`` for residues mod m. Plain text with one
integer per line (``#`` comments allowed) is accepted on input; k and g then
come from the caller.
"""

from __future__ import annotations

import json
from pathlib import Path

from .verification import INTEGERS, CandidateSet, GroupSpec


def to_json(A: CandidateSet) -> dict:
    return {"k": A.k, "g": A.g, "group": A.group.to_json(), "elements": list(A.elements)}


def from_json(obj: dict) -> CandidateSet:
    missing = {"k", "g", "elements"} - set(obj)
    if missing:
        raise ValueError(f"set file is missing {sorted(missing)}")
    elems = [int(e) for e in obj["elements"]]
    if elems != sorted(set(elems)):
        raise ValueError("elements must be sorted and distinct")
    return CandidateSet(tuple(elems), int(obj["k"]), int(obj["g"]),
                        GroupSpec.from_json(obj.get("group", "integers")))


def parse_plain(text: str, k: int, g: int, group: GroupSpec = INTEGERS) -> CandidateSet:
    elems = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            elems.append(int(line))
    return CandidateSet(tuple(elems), k, g, group)


def read_set_file(path, k: int | None = None, g: int | None = None,
                  group: GroupSpec | None = None) -> CandidateSet:
    """Load a JSON set file, or a plain list of integers.

    Explicit ``k``/``g``/``group`` override the values stored in a JSON file.
    """
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        if k is not None:
            obj["k"] = k
        if g is not None:
            obj["g"] = g
        if group is not None:
            obj["group"] = group.to_json()
        return from_json(obj)
    if k is None:
        raise ValueError("plain-text set files need an explicit k")
    return parse_plain(text, k, 1 if g is None else g, group or INTEGERS)


def write_set_file(path, A: CandidateSet) -> None:
    Path(path).write_text(json.dumps(to_json(A)) + "\n")
