"""JSON instance files: a field, a permutation group and a module action.

Format version 1::

    {
      "version": 1,
      "name": "optional label",
      "field": {"p": 3, "k": 1},
      "group": {"degree": 6, "generators": [[1, 2, 0, 3, 4, 5], ...], "name": "optional"},
      "module": {"dim": 3, "action": [[[1, 1, 0], ...], ...]},
      "submodules": {"H": [[0, 1, 0], [0, 0, 1]]}
    }

``action`` holds one matrix per group generator, rows being the images of
the basis vectors.  Field elements are integer codes in ``0 .. p^k - 1``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .errors import (
    ActionTooLarge,
    InvalidPermutation,
    NotAHomomorphism,
    NotInvertible,
    OrderLimitExceeded,
    ParseError,
    ValidationError,
)
from .field import MAX_DEGREE, FiniteField, ff_make, is_prime
from .group import GroupTable
from .grpalg import FGModule
from .linalg import Subspace

FORMAT_VERSION = 1

_TOP_KEYS = {"version", "name", "field", "group", "module", "submodules"}
_FIELD_KEYS = {"p", "k"}
_GROUP_KEYS = {"degree", "generators", "name"}
_MODULE_KEYS = {"dim", "action"}


@dataclass
class Instance:
    field: FiniteField
    group: GroupTable
    module: FGModule
    submodules: dict[str, Subspace] = field(default_factory=dict)
    name: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "version": FORMAT_VERSION,
            "field": {"p": self.field.p, "k": self.field.k},
            "group": {
                "degree": self.group.degree,
                "generators": [list(g) for g in self.group.generators],
            },
            "module": {
                "dim": self.module.dim,
                "action": [m.tolist() for m in self.module.gen_action],
            },
        }
        if self.group.name:
            out["group"]["name"] = self.group.name
        if self.submodules:
            out["submodules"] = {k: v.basis.tolist() for k, v in sorted(self.submodules.items())}
        if self.name:
            out["name"] = self.name
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @property
    def digest(self) -> str:
        """sha256 of the canonical compact serialization."""
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _keys(obj, allowed: set[str], where: str, required: set[str]) -> None:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra:
        raise ParseError(f"{where}: unknown key(s) {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"{where}: missing key(s) {sorted(missing)}")


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{where}: expected an integer, got {x!r}")
    return x


def _int_matrix(x, rows: int | None, cols: int, where: str) -> np.ndarray:
    if not isinstance(x, list) or (rows is not None and len(x) != rows):
        raise ParseError(f"{where}: expected a list of {rows if rows is not None else 'some'} rows")
    out = []
    for i, row in enumerate(x):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{where}[{i}]: expected a row of length {cols}")
        out.append([_int(c, f"{where}[{i}]") for c in row])
    return np.array(out, dtype=la.DTYPE).reshape(len(out), cols)


def _codes_in_range(m: np.ndarray, q: int, where: str) -> None:
    if m.size and (m.min() < 0 or m.max() >= q):
        raise ValidationError(f"{where}: entry outside 0..{q - 1}")


def from_dict(data) -> Instance:
    _keys(data, _TOP_KEYS, "instance", {"version", "field", "group", "module"})
    if data["version"] != FORMAT_VERSION:
        raise ParseError(f"version: unsupported value {data['version']!r}, expected {FORMAT_VERSION}")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name: expected a string")

    fd = data["field"]
    _keys(fd, _FIELD_KEYS, "field", {"p"})
    p = _int(fd["p"], "field.p")
    k = _int(fd.get("k", 1), "field.k")
    if not is_prime(p):
        raise ParseError(f"field.p: {p} is not prime")
    if not 1 <= k <= MAX_DEGREE:
        raise ParseError(f"field.k: {k} outside 1..{MAX_DEGREE}")
    F = ff_make(p, k)

    gd = data["group"]
    _keys(gd, _GROUP_KEYS, "group", {"degree", "generators"})
    degree = _int(gd["degree"], "group.degree")
    if degree < 1:
        raise ParseError("group.degree: must be positive")
    gname = gd.get("name")
    if gname is not None and not isinstance(gname, str):
        raise ParseError("group.name: expected a string")
    gens = _int_matrix(gd["generators"], None, degree, "group.generators")
    if gens.shape[0] == 0:
        raise ParseError("group.generators: at least one generator is required")
    try:
        G = GroupTable(degree, gens.tolist(), name=gname)
    except (InvalidPermutation, OrderLimitExceeded) as exc:
        raise ValidationError(f"group: {exc}") from exc

    md = data["module"]
    _keys(md, _MODULE_KEYS, "module", {"dim", "action"})
    dim = _int(md["dim"], "module.dim")
    if dim < 0:
        raise ParseError("module.dim: must be non-negative")
    act = md["action"]
    if not isinstance(act, list) or len(act) != gens.shape[0]:
        raise ParseError(f"module.action: expected {gens.shape[0]} matrices, one per generator")
    mats = []
    for i, m in enumerate(act):
        mat = _int_matrix(m, dim, dim, f"module.action[{i}]")
        _codes_in_range(mat, F.q, f"module.action[{i}]")
        mats.append(mat)
    try:
        M = FGModule(F, G, mats, name=name)
    except (NotAHomomorphism, NotInvertible, ActionTooLarge) as exc:
        raise ValidationError(f"module: {exc}") from exc

    subs: dict[str, Subspace] = {}
    sd = data.get("submodules", {})
    if not isinstance(sd, dict):
        raise ParseError("submodules: expected an object")
    for key, vecs in sd.items():
        arr = _int_matrix(vecs, None, dim, f"submodules.{key}")
        _codes_in_range(arr, F.q, f"submodules.{key}")
        subs[key] = Subspace.span(F, arr, dim) if arr.shape[0] else Subspace.zero(F, dim)
    return Instance(F, G, M, subs, name)


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ParseError(f"duplicate key {k!r}")
        out[k] = v
    return out


def parse_instance(text: str) -> Instance:
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_dict(data)


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def instance_from_module(M: FGModule, submodules: dict[str, Subspace] | None = None, name: str | None = None) -> Instance:
    return Instance(M.field, M.group, M, dict(submodules or {}), name)
