"""JSON file formats for algebras, groups, modules and subalgebras.

Every loader raises InvalidInput on malformed data, so the command line can
map parse problems to a single exit code.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from . import groups
from . import linalg as la
from .algebra import (
    Algebra,
    Subalgebra,
    group_algebra,
    skew_group_algebra,
    twisted_group_algebra,
    validate_algebra,
    validate_group_table,
)
from .errors import InvalidInput
from .gf import check_modulus
from .module import Module, validate_module


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise InvalidInput(f"{path}: top level must be a JSON object")
    return data


def _require(data: dict, *keys: str, where: str = "file"):
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidInput(f"{where}: missing key(s) {', '.join(missing)}")
    return [data[k] for k in keys]


def _int_array(value, shape=None, what: str = "array") -> np.ndarray:
    try:
        arr = np.array(value, dtype=object)
        if arr.size and not all(isinstance(x, int) and not isinstance(x, bool) for x in arr.ravel()):
            raise TypeError
        arr = arr.astype(np.int64)
    except (TypeError, ValueError, OverflowError) as exc:
        raise InvalidInput(f"{what} must be a rectangular array of integers") from exc
    if shape is not None:
        want = tuple(shape)
        if arr.size == 0 and 0 in want:
            return np.zeros(want, dtype=np.int64)
        if arr.shape != want:
            raise InvalidInput(f"{what} has shape {arr.shape}, expected {want}")
    return arr


def _int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInput(f"{what} must be an integer")
    return value


# --- algebras ----------------------------------------------------------------------


def algebra_from_dict(data: dict, name: str = "", validate: bool = True) -> Algebra:
    p, dim, one, mul = _require(data, "p", "dim", "one", "mul", where="algebra")
    p = check_modulus(_int(p, "p"))
    dim = _int(dim, "dim")
    if dim < 1:
        raise InvalidInput("dim must be positive")
    one = _int_array(one, (dim,), "one")
    if not isinstance(mul, list):
        raise InvalidInput("mul must be a list of [i, j, k, c] triples")
    triples = _int_array(mul, (len(mul), 4), "mul")
    if len(triples) and ((triples[:, :3] < 0).any() or (triples[:, :3] >= dim).any()):
        raise InvalidInput(f"mul index out of range 0..{dim - 1}")
    a = Algebra.from_triples(p, dim, one, triples.tolist(), name=name or str(data.get("name", "")))
    if validate:
        validate_algebra(a)
    return a


def algebra_to_dict(a: Algebra) -> dict:
    return {"p": a.p, "dim": a.dim, "one": [int(x) for x in a.one], "mul": a.triples()}


def load_algebra(path, validate: bool = True) -> Algebra:
    return algebra_from_dict(read_json(path), name=Path(path).stem, validate=validate)


# --- groups --------------------------------------------------------------------------


def group_from_dict(data: dict) -> np.ndarray:
    """A Cayley table from either a table file or a generator file."""
    if "generators" in data:
        degree, gens = _require(data, "degree", "generators", where="group generators")
        degree = _int(degree, "degree")
        if not isinstance(gens, list):
            raise InvalidInput("generators must be a list of permutations")
        _, table = groups.from_generators(gens, degree)
        return table
    order, table = _require(data, "order", "table", where="group")
    order = _int(order, "order")
    table = _int_array(table, (order, order), "table")
    if "labels" in data and len(data["labels"]) != order:
        raise InvalidInput("labels must have one entry per element")
    return validate_group_table(table)


def group_table_to_dict(table: np.ndarray, p: int | None = None) -> dict:
    out = {"order": int(len(table)), "table": np.asarray(table).tolist()}
    if p is not None:
        out["p"] = p
    return out


def generators_to_dict(degree: int, gens) -> dict:
    return {"degree": degree, "generators": [list(g) for g in gens]}


def build_group_algebra(group: dict, cocycle: dict | None = None, action: dict | None = None,
                        base: Algebra | None = None) -> Algebra:
    """k[G], k_alpha[G] or B#kG from parsed group, cocycle and action files."""
    table = group_from_dict(group)
    n = len(table)
    if action is not None:
        if base is None:
            raise InvalidInput("--action needs the base algebra B via --algebra")
        if cocycle is not None:
            raise InvalidInput("--cocycle and --action cannot be combined")
        (mats,) = _require(action, "matrices", where="action")
        mats = _int_array(mats, (n, base.dim, base.dim), "matrices")
        return skew_group_algebra(base, table, list(mats), name="B#G")
    p = group.get("p")
    if p is None and cocycle is not None:
        p = cocycle.get("p")
    if p is None and base is not None:
        p = base.p
    if p is None:
        raise InvalidInput('group file needs a "p" key (the field size) to build its group algebra')
    p = check_modulus(_int(p, "p"))
    if cocycle is not None:
        (alpha,) = _require(cocycle, "alpha", where="cocycle")
        alpha = _int_array(alpha, (n, n), "alpha")
        if ((alpha < 1) | (alpha >= p)).any():
            raise InvalidInput(f"cocycle values must lie in [1, {p})")
        return twisted_group_algebra(table, alpha, p, name="k_alpha[G]")
    return group_algebra(table, p, name="k[G]")


# --- subalgebras and modules -------------------------------------------------------


class LoadedSubalgebra:
    """A subalgebra together with the basis the file was written in.

    Module files over B index the action by the file's basis vectors, while
    ``Subalgebra`` keeps a reduced basis; ``change`` converts between them.
    """

    def __init__(self, sub: Subalgebra, vectors: np.ndarray):
        self.sub = sub
        self.vectors = vectors
        p = sub.ambient.p
        # row t: the reduced basis vector t in terms of the file's vectors
        coeffs = []
        for row in sub.basis.basis:
            x = la.solve(vectors.T, row, p)
            coeffs.append(x)
        self.change = np.array(coeffs, dtype=np.int64).reshape(sub.dim, len(vectors))

    def module_from_dict(self, data: dict, validate: bool = True) -> Module:
        dim, act = module_from_dict(data, len(self.vectors), None)
        p = self.sub.ambient.p
        flat = la.matmul(self.change, act.reshape(len(self.vectors), -1) % p, p)
        out = Module(self.sub.algebra, dim, flat)
        if validate:
            validate_module(out)
        return out


def subalgebra_from_dict(a: Algebra, data: dict, name: str = "") -> LoadedSubalgebra:
    (basis,) = _require(data, "basis", where="subalgebra")
    if not isinstance(basis, list) or not basis:
        raise InvalidInput("subalgebra basis must be a non-empty list of vectors")
    vecs = _int_array(basis, (len(basis), a.dim), "basis") % a.p
    if la.rank(vecs, a.p) != len(vecs):
        raise InvalidInput("subalgebra basis vectors are linearly dependent")
    sub = Subalgebra.from_vectors(a, vecs, name=name)
    return LoadedSubalgebra(sub, vecs)


def load_subalgebra(a: Algebra, path) -> LoadedSubalgebra:
    return subalgebra_from_dict(a, read_json(path), name=Path(path).stem)


def subalgebra_to_dict(s: Subalgebra) -> dict:
    return {"basis": s.basis.basis.tolist()}


def module_from_dict(data: dict, algebra_dim: int, algebra: Algebra | None):
    dim, action = _require(data, "dim", "action", where="module")
    dim = _int(dim, "dim")
    if dim < 0:
        raise InvalidInput("module dim must be non-negative")
    act = _int_array(action, (algebra_dim, dim, dim), "action")
    if algebra is None:
        return dim, act
    return Module(algebra, dim, act)


def load_module(path, algebra: Algebra, validate: bool = True) -> Module:
    m = module_from_dict(read_json(path), algebra.dim, algebra)
    if validate:
        validate_module(m)
    return m


def module_to_dict(m: Module) -> dict:
    return {"dim": m.dim, "action": m.action.tolist()}


def write_json(data, path=None) -> str:
    text = dumps(data)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, default=_default) + "\n"


def export_examples(directory) -> list[Path]:
    """Write algebra/subalgebra/module files for every bundled example."""
    from .oracle import example_library

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for inst in example_library():
        stem = re.sub(r"[^A-Za-z0-9]+", "_", inst.name).strip("_")
        files = {f"{stem}.algebra.json": algebra_to_dict(inst.A), f"{stem}.sub.json": subalgebra_to_dict(inst.B)}
        for k, v in enumerate(inst.simples_of_B):
            files[f"{stem}.V{k}.json"] = module_to_dict(v)
        for fname, data in files.items():
            write_json(data, out / fname)
            written.append(out / fname)
    return written
