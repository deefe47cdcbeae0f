"""JSON file formats for algebras, matrices, actions and extension data.

All rationals are written as strings matching ``-?digits(/digits)?``.  Keys
are emitted in canonical order (basis order, then lexicographic index tuples)
so that ``dumps(parse(text)) == text`` for every file this module writes.

Algebra file::

    {"name": "heis3", "basis": ["x", "y", "z"], "brackets": {"[x,y]": {"z": "1"}}}

Data file::

    {"g": <algebra or path>, "h": <algebra or path>,
     "alpha": [<dim h x dim h matrix> per basis element of g],
     "rho": {"[x,y]": {"z": "1"}}}

Action file (semidirect actions, outer actions given by derivation lifts)::

    {"action": [<matrix> per basis element of g]}

Module file (cohomology coefficients)::

    {"dim": 2, "action": [<matrix> per basis element of g]}

Matrix file (sections, splitting certificates)::

    {"matrix": [["1", "0"], ["0", "1"]]}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .cochains import SkewCochain, tuples
from .extensions import ExtensionData
from .liealg import JacobiError, LieAlgebra, check_jacobi
from .ratlinalg import Matrix, format_rational, parse_rational

_BRACKET_KEY = re.compile(r"^\[([^,\[\]]+),([^,\[\]]+)\]$")


class FormatError(ValueError):
    """A file does not follow the documented schema."""


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _rat(text, where: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise FormatError(f"{where}: malformed rational {text!r}") from None


def _require(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"{where}: missing key {key!r}")
    return doc[key]


def _coeff_dict(raw, labels, where) -> dict:
    if not isinstance(raw, dict):
        raise FormatError(f"{where}: expected an object label -> rational")
    out = {}
    for lab, val in raw.items():
        if lab not in labels:
            raise FormatError(f"{where}: unknown label {lab!r}")
        out[labels.index(lab)] = _rat(val, f"{where}[{lab}]")
    return out


def _vector_doc(v, labels) -> dict:
    return {labels[k]: format_rational(c) for k, c in enumerate(v) if c}


# algebras ---------------------------------------------------------------

def algebra_to_doc(L: LieAlgebra) -> dict:
    labels = L.basis_labels
    brackets = {}
    for (i, j), coeffs in sorted(L.structure.items()):
        brackets[f"[{labels[i]},{labels[j]}]"] = {labels[k]: format_rational(c)
                                                 for k, c in sorted(coeffs.items())}
    return {"name": L.name, "basis": list(labels), "brackets": brackets}


def algebra_from_doc(doc, where: str = "algebra") -> LieAlgebra:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    extra = set(doc) - {"name", "basis", "brackets"}
    if extra:
        raise FormatError(f"{where}: unknown keys {sorted(extra)}")
    name = _require(doc, "name", where)
    labels = _require(doc, "basis", where)
    if not isinstance(name, str) or not isinstance(labels, list) or \
            not all(isinstance(l, str) and l for l in labels):
        raise FormatError(f"{where}: name must be a string and basis a list of labels")
    if len(set(labels)) != len(labels):
        raise FormatError(f"{where}: duplicate basis labels")
    raw = doc.get("brackets", {})
    if not isinstance(raw, dict):
        raise FormatError(f"{where}: brackets must be an object")
    brackets = {}
    for key, coeffs in raw.items():
        m = _BRACKET_KEY.match(key)
        if not m:
            raise FormatError(f"{where}: malformed bracket key {key!r}")
        a, b = m.groups()
        for lab in (a, b):
            if lab not in labels:
                raise FormatError(f"{where}: unknown label {lab!r} in {key!r}")
        i, j = labels.index(a), labels.index(b)
        if i >= j:
            raise FormatError(f"{where}: bracket key {key!r} must list labels in basis order")
        brackets[(i, j)] = _coeff_dict(coeffs, labels, f"{where}.brackets[{key}]")
    L = LieAlgebra(name, labels, brackets, check=False)
    bad = check_jacobi(L)
    if bad:
        named = [tuple(labels[t] for t in triple) for triple in bad]
        raise JacobiError(name, named)
    return L


def load_json(path: Union[str, Path]):
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None


def load_algebra(path) -> LieAlgebra:
    return algebra_from_doc(load_json(path), where=str(path))


def save_algebra(L: LieAlgebra, path):
    Path(path).write_text(dumps(algebra_to_doc(L)))


# matrices and cochains --------------------------------------------------

def matrix_to_doc(M: Matrix) -> list:
    return [[format_rational(a) for a in M.row(i)] for i in range(M.rows)]


def matrix_from_doc(raw, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(raw, list) or len(raw) != rows:
        raise FormatError(f"{where}: expected {rows} rows")
    out = []
    for r, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            raise FormatError(f"{where}: row {r} must have {cols} entries")
        out.append([_rat(a, f"{where}[{r}]") for a in row])
    return Matrix.from_rows(out, cols)


def matrices_from_doc(raw, count: int, size: int, where: str) -> tuple:
    if not isinstance(raw, list) or len(raw) != count:
        raise FormatError(f"{where}: expected a list of {count} matrices")
    return tuple(matrix_from_doc(m, size, size, f"{where}[{k}]") for k, m in enumerate(raw))


def cochain_to_doc(phi: SkewCochain, source_labels, target_labels) -> dict:
    """``{"[x,y]": {"z": "1"}}``; zero values are omitted."""
    out = {}
    for t, v in zip(tuples(phi.source_dim, phi.degree), phi.values):
        if any(v):
            key = "[" + ",".join(source_labels[i] for i in t) + "]"
            out[key] = _vector_doc(v, target_labels)
    return out


def cochain_from_doc(raw, degree: int, source_labels, target_labels, where: str) -> SkewCochain:
    if not isinstance(raw, dict):
        raise FormatError(f"{where}: expected an object")
    entries = {}
    for key, val in raw.items():
        if not (key.startswith("[") and key.endswith("]")):
            raise FormatError(f"{where}: malformed key {key!r}")
        parts = key[1:-1].split(",") if degree else []
        if len(parts) != degree:
            raise FormatError(f"{where}: key {key!r} must name {degree} basis elements")
        idx = []
        for lab in parts:
            if lab not in source_labels:
                raise FormatError(f"{where}: unknown label {lab!r} in {key!r}")
            idx.append(source_labels.index(lab))
        if idx != sorted(idx) or len(set(idx)) != len(idx):
            raise FormatError(f"{where}: key {key!r} must list distinct labels in basis order")
        coeffs = _coeff_dict(val, list(target_labels), f"{where}[{key}]")
        vec = [Fraction(0)] * len(target_labels)
        for k, c in coeffs.items():
            vec[k] = c
        entries[tuple(idx)] = vec
    return SkewCochain.from_dict(degree, len(source_labels), len(target_labels), entries)


# extension data ---------------------------------------------------------

def data_to_doc(d: ExtensionData) -> dict:
    return {
        "g": algebra_to_doc(d.g),
        "h": algebra_to_doc(d.h),
        "alpha": [matrix_to_doc(M) for M in d.alpha],
        "rho": cochain_to_doc(d.rho, d.g.basis_labels, d.h.basis_labels),
    }


def _algebra_ref(raw, base: Optional[Path], where: str) -> LieAlgebra:
    if isinstance(raw, str):
        path = Path(raw) if base is None else base / raw
        return load_algebra(path)
    return algebra_from_doc(raw, where)


def data_from_doc(doc, base: Optional[Path] = None, where: str = "data") -> ExtensionData:
    if not isinstance(doc, dict):
        raise FormatError(f"{where}: expected an object")
    extra = set(doc) - {"g", "h", "alpha", "rho"}
    if extra:
        raise FormatError(f"{where}: unknown keys {sorted(extra)}")
    g = _algebra_ref(_require(doc, "g", where), base, f"{where}.g")
    h = _algebra_ref(_require(doc, "h", where), base, f"{where}.h")
    alpha = matrices_from_doc(_require(doc, "alpha", where), g.dim, h.dim, f"{where}.alpha")
    rho = cochain_from_doc(doc.get("rho", {}), 2, g.basis_labels, h.basis_labels, f"{where}.rho")
    return ExtensionData(g, h, alpha, rho)


def load_data(path) -> ExtensionData:
    path = Path(path)
    return data_from_doc(load_json(path), base=path.parent, where=str(path))


def save_data(d: ExtensionData, path):
    Path(path).write_text(dumps(data_to_doc(d)))


def load_action(path, g: LieAlgebra, dim: int) -> tuple:
    doc = load_json(path)
    return matrices_from_doc(_require(doc, "action", str(path)), g.dim, dim, f"{path}.action")


def load_module_doc(path, g: LieAlgebra):
    doc = load_json(path)
    dim = _require(doc, "dim", str(path))
    if not isinstance(dim, int) or dim < 0:
        raise FormatError(f"{path}: dim must be a nonnegative integer")
    return dim, matrices_from_doc(_require(doc, "action", str(path)), g.dim, dim, f"{path}.action")


def load_matrix(path, rows: int, cols: int) -> Matrix:
    doc = load_json(path)
    return matrix_from_doc(_require(doc, "matrix", str(path)), rows, cols, f"{path}.matrix")
