"""Reading the JSON documents consumed by the command line."""

from __future__ import annotations

import json
import sys
from importlib import resources
from typing import Mapping

from .errors import InputError
from .groups import FiniteGroup, make_group
from .matrices import GroupRingMatrix, IntMatrix


def load_json(source: str):
    """Parse a file path, ``-`` for standard input, or an inline JSON document."""
    try:
        if source == "-":
            return json.load(sys.stdin)
        stripped = source.lstrip()
        if stripped.startswith("{") or stripped.startswith("["):
            return json.loads(source)
        with open(source, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {source!r}: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc.strerror}") from None


def load_data_file(name: str):
    """A bundled golden file."""
    return json.loads(resources.files("gsftkit").joinpath("data", name).read_text(encoding="utf-8"))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def require(data, *keys):
    if not isinstance(data, Mapping):
        raise InputError("expected a JSON object")
    for key in keys:
        if key not in data:
            raise InputError(f"missing key {key!r}")


def read_group(data) -> FiniteGroup:
    require(data, "group")
    return make_group(data["group"])


def read_group_ring_matrix(data, key="matrix", group: FiniteGroup | None = None) -> GroupRingMatrix:
    """``{"group": spec, key: matrix}``; the group may be supplied instead."""
    group = read_group(data) if group is None else group
    require(data, key)
    return GroupRingMatrix.from_json(group, data[key])


def read_int_matrix(data, key="matrix") -> IntMatrix:
    """Either ``{key: matrix}`` or a bare matrix document."""
    if isinstance(data, Mapping) and key in data:
        return IntMatrix.from_json(data[key])
    return IntMatrix.from_json(data)


def group_ring_document(matrix: GroupRingMatrix) -> dict:
    return {"group": matrix.group.to_spec(), "matrix": matrix.to_json()}
