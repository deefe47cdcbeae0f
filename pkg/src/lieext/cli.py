"""Command-line front end: ``lieext <subcommand> ...``.

Exit codes: 0 success (positive answer), 1 negative mathematical answer of a
decision subcommand, 2 malformed input or a question this tool cannot decide.
With ``--json`` a single JSON document following ``SCHEMAS[command]`` is
printed; otherwise a short human-readable report.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import __version__
from .cohomology import Cohomology
from .extensions import (
    InvalidDataError,
    OuterAction,
    build,
    central_class,
    check_data,
    decide_split_abelian,
    enumerate_extensions,
    equivalence_witness,
    extension_from_ideal,
    extract,
    obstruction,
    pullback,
    semidirect,
    verify_split,
)
from .fileio import (
    FormatError,
    algebra_from_doc,
    algebra_to_doc,
    cochain_to_doc,
    data_from_doc,
    data_to_doc,
    dumps,
    load_action,
    load_algebra,
    load_json,
    load_matrix,
    load_module_doc,
    matrix_to_doc,
)
from .liealg import LieAlgebra, LinearMap, OuterAlgebra, Representation, adjoint, center
from .ratlinalg import Matrix, Subspace, format_rational, unit_vector

_RAT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_VEC = {"type": "object", "additionalProperties": _RAT}
_COCHAIN = {"type": "object", "additionalProperties": _VEC}
_MATRIX = {"type": "array", "items": {"type": "array", "items": _RAT}}
_ALGEBRA = {
    "type": "object",
    "required": ["name", "basis", "brackets"],
    "properties": {"name": {"type": "string"},
                   "basis": {"type": "array", "items": {"type": "string"}},
                   "brackets": _COCHAIN},
    "additionalProperties": False,
}
_DATA = {
    "type": "object",
    "required": ["g", "h", "alpha", "rho"],
    "properties": {"g": _ALGEBRA, "h": _ALGEBRA,
                   "alpha": {"type": "array", "items": _MATRIX}, "rho": _COCHAIN},
    "additionalProperties": False,
}


def _schema(command, properties):
    props = {"command": {"const": command}}
    props.update(properties)
    return {"type": "object", "required": sorted(props), "properties": props,
            "additionalProperties": False}


_INT = {"type": "integer", "minimum": 0}
_BOOL = {"type": "boolean"}

SCHEMAS = {
    "check": {"oneOf": [
        _schema("check", {"kind": {"const": "algebra"}, "name": {"type": "string"}, "dim": _INT,
                          "jacobi": {"const": "ok"}, "center_dim": _INT}),
        _schema("check", {"kind": {"const": "data"}, "valid": _BOOL,
                          "violations": {"type": "array", "items": {"type": "string"}}}),
    ]},
    "invariants": _schema("invariants", {
        "name": {"type": "string"}, "dim": _INT, "abelian": _BOOL, "center_dim": _INT,
        "center_basis": {"type": "array", "items": _VEC}, "derivations_dim": _INT,
        "inner_dim": _INT, "outer_dim": _INT, "outer_algebra": _ALGEBRA}),
    "derivations": _schema("derivations", {
        "dim": _INT, "basis": {"type": "array", "items": _MATRIX}, "inner_dim": _INT,
        "outer_dim": _INT, "outer_representatives": {"type": "array", "items": _MATRIX}}),
    "cohomology": _schema("cohomology", {
        "degree": _INT, "dim": _INT, "cocycles_dim": _INT, "coboundaries_dim": _INT,
        "representatives": {"type": "array", "items": _COCHAIN}}),
    "build": _schema("build", {"algebra": _ALGEBRA, "jacobi": {"const": "ok"}}),
    "extract": _schema("extract", {"data": _DATA}),
    "equivalent": _schema("equivalent", {
        "equivalent": _BOOL, "reason": {"type": "string"},
        "witness": {"oneOf": [_MATRIX, {"type": "null"}]}}),
    "semidirect": _schema("semidirect", {"algebra": _ALGEBRA}),
    "split": _schema("split", {
        "split": _BOOL, "method": {"enum": ["abelian-solve", "certificate"]},
        "witness": {"oneOf": [_MATRIX, {"type": "null"}]}}),
    "obstruction": _schema("obstruction", {
        "vanishes": _BOOL, "lambda": _COCHAIN, "h3_dim": _INT,
        "corrected": {"oneOf": [_DATA, {"type": "null"}]}}),
    "classify": _schema("classify", {
        "count": _INT,
        "entries": {"type": "array", "items": {
            "type": "object", "required": ["label", "data", "center_dim"],
            "properties": {"label": {"type": "string"}, "data": _DATA, "center_dim": _INT},
            "additionalProperties": False}}}),
    "pullback": _schema("pullback", {"algebra": _ALGEBRA, "dim": _INT, "kernel_dim": _INT}),
    "central-class": _schema("central-class", {
        "quotient_dim": _INT, "center_dim": _INT, "nu": _COCHAIN, "nonzero": _BOOL,
        "g_invariant": {"oneOf": [_BOOL, {"type": "null"}]}, "convention": {"type": "string"}}),
}


class Negative(Exception):
    """A decision subcommand reached a negative answer."""

    def __init__(self, doc, text):
        self.doc, self.text = doc, text


def _emit(args, doc, text):
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _write(path, doc):
    Path(path).write_text(dumps(doc))


def _outer_action(args, g: LieAlgebra, h: LieAlgebra) -> OuterAction:
    O = OuterAlgebra(h)
    if args.outer == "zero":
        return OuterAction.zero(g, O)
    return OuterAction.from_derivations(g, O, load_action(args.outer, g, h.dim))


def _module(coeff: str, g: LieAlgebra) -> Representation:
    m = re.fullmatch(r"trivial(\d+)", coeff)
    if m:
        return Representation.trivial(g, int(m.group(1)))
    if coeff == "adjoint":
        return adjoint(g)
    dim, mats = load_module_doc(coeff, g)
    return Representation(g, dim, mats)


def _structure_text(L: LieAlgebra) -> str:
    lines = []
    for (i, j), c in sorted(L.structure.items()):
        terms = " + ".join(f"{format_rational(v)}*{L.basis_labels[k]}" for k, v in sorted(c.items()))
        lines.append(f"  [{L.basis_labels[i]},{L.basis_labels[j]}] = {terms}")
    return "\n".join(lines) if lines else "  (abelian)"


def cmd_check(args):
    doc = load_json(args.file)
    if isinstance(doc, dict) and "g" in doc:
        d = data_from_doc(doc, base=Path(args.file).parent, where=args.file)
        report = check_data(d)
        out = {"command": "check", "kind": "data", "valid": not report, "violations": report}
        if report:
            raise Negative(out, "data invalid:\n" + "\n".join(f"  {r}" for r in report))
        return out, "data valid: derivations, curvature and Bianchi identities hold"
    L = algebra_from_doc(doc, where=args.file)
    z = center(L).dim
    return ({"command": "check", "kind": "algebra", "name": L.name, "dim": L.dim,
             "jacobi": "ok", "center_dim": z},
            f"Jacobi: ok, dim {L.dim}, center dim {z}")


def cmd_invariants(args):
    L = load_algebra(args.algebra)
    Z = center(L)
    O = OuterAlgebra(L)
    doc = {"command": "invariants", "name": L.name, "dim": L.dim, "abelian": L.is_abelian(),
           "center_dim": Z.dim,
           "center_basis": [{L.basis_labels[k]: format_rational(c) for k, c in enumerate(b) if c}
                            for b in Z.basis],
           "derivations_dim": O.der_dim, "inner_dim": O.inner.dim, "outer_dim": O.quotient_dim,
           "outer_algebra": algebra_to_doc(O.bracket_table)}
    text = (f"{L.name}: dim {L.dim}, center dim {Z.dim}, der dim {O.der_dim}, "
            f"ad dim {O.inner.dim}, out dim {O.quotient_dim}")
    return doc, text


def cmd_derivations(args):
    L = load_algebra(args.algebra)
    O = OuterAlgebra(L)
    basis = [O.derivation_matrix(unit_vector(O.der_dim, k)) for k in range(O.der_dim)]
    reps = [O.lift_matrix(unit_vector(O.quotient_dim, a)) for a in range(O.quotient_dim)]
    doc = {"command": "derivations", "dim": O.der_dim, "basis": [matrix_to_doc(M) for M in basis],
           "inner_dim": O.inner.dim, "outer_dim": O.quotient_dim,
           "outer_representatives": [matrix_to_doc(M) for M in reps]}
    text = f"der({L.name}): dim {O.der_dim}; inner {O.inner.dim}; outer {O.quotient_dim}"
    return doc, text


def cmd_cohomology(args):
    g = load_algebra(args.g)
    module = _module(args.coefficients, g)
    H = Cohomology(module, args.degree)
    target = [f"v{k + 1}" for k in range(module.space_dim)]
    doc = {"command": "cohomology", "degree": args.degree, "dim": H.dim,
           "cocycles_dim": H.cocycles.dim, "coboundaries_dim": H.coboundaries.dim,
           "representatives": [cochain_to_doc(r, g.basis_labels, target) for r in H.representatives]}
    return doc, f"H^{args.degree}({g.name}; {args.coefficients}) has dim {H.dim}"


def cmd_build(args):
    d = _load_data(args.data)
    ext = build(d)
    algdoc = algebra_to_doc(ext.e)
    if args.output:
        _write(args.output, algdoc)
    return ({"command": "build", "algebra": algdoc, "jacobi": "ok"},
            f"built {ext.e.name}: dim {ext.e.dim}, Jacobi ok\n{_structure_text(ext.e)}")


def cmd_extract(args):
    e = load_algebra(args.algebra)
    idx = [e.index(l) for l in args.ideal]
    ideal = Subspace.span([unit_vector(e.dim, i) for i in idx], e.dim)
    ext = extension_from_ideal(e, ideal)
    s = None
    if args.section:
        s = LinearMap(load_matrix(args.section, e.dim, ext.g.dim))
    d = extract(ext, s)
    datadoc = data_to_doc(d)
    if args.output:
        _write(args.output, datadoc)
    return {"command": "extract", "data": datadoc}, dumps(datadoc)


def cmd_equivalent(args):
    d1, d2 = _load_data(args.data1), _load_data(args.data2)
    if d1.g != d2.g or d1.h != d2.h:
        raise FormatError("the two data files use different g or h")
    w, reason = equivalence_witness(d1, d2)
    doc = {"command": "equivalent", "equivalent": w is not None, "reason": reason,
           "witness": matrix_to_doc(w.b.matrix) if w else None}
    if w is None:
        raise Negative(doc, reason)
    return doc, "equivalent; witness b (g -> h):\n" + json.dumps(doc["witness"])


def cmd_semidirect(args):
    g, h = load_algebra(args.g), load_algebra(args.h)
    if args.action == "zero":
        mats = tuple(Matrix.zero(h.dim, h.dim) for _ in range(g.dim))
    else:
        mats = load_action(args.action, g, h.dim)
    try:
        ext = semidirect(g, h, mats)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    algdoc = algebra_to_doc(ext.e)
    if args.output:
        _write(args.output, algdoc)
    return ({"command": "semidirect", "algebra": algdoc},
            f"{ext.e.name}: dim {ext.e.dim}\n{_structure_text(ext.e)}")


def cmd_split(args):
    d = _load_data(args.data)
    report = check_data(d)
    if report:
        raise InvalidDataError(report)
    if args.certificate:
        b = LinearMap(load_matrix(args.certificate, d.h.dim, d.g.dim))
        ok = verify_split(d, b)
        doc = {"command": "split", "split": ok, "method": "certificate",
               "witness": matrix_to_doc(b.matrix) if ok else None}
        if not ok:
            raise Negative(doc, "certificate does not split the datum")
        return doc, "split: certificate verified"
    b = decide_split_abelian(d)
    doc = {"command": "split", "split": b is not None, "method": "abelian-solve",
           "witness": matrix_to_doc(b.matrix) if b is not None else None}
    if b is None:
        raise Negative(doc, "not split: [rho] != 0 in H^2(g; h)")
    return doc, "split; witness b (g -> h):\n" + json.dumps(doc["witness"])


def cmd_obstruction(args):
    g, h = load_algebra(args.g), load_algebra(args.h)
    abar = _outer_action(args, g, h)
    res = obstruction(abar)
    h3 = res.klass.space.dim
    doc = {"command": "obstruction", "vanishes": res.vanishes,
           "lambda": cochain_to_doc(res.lam, g.basis_labels, h.basis_labels), "h3_dim": h3,
           "corrected": data_to_doc(res.corrected) if res.corrected else None}
    if not res.vanishes:
        raise Negative(doc, f"nonzero class in H^3(g; Z(h)) (dim H^3 = {h3})")
    return doc, f"obstruction class vanishes (dim H^3 = {h3}); extensions exist"


def cmd_classify(args):
    g, h = load_algebra(args.g), load_algebra(args.h)
    abar = _outer_action(args, g, h)
    res = obstruction(abar)
    if not res.vanishes:
        doc = {"command": "classify", "count": 0, "entries": []}
        raise Negative(doc, "no extensions: obstruction class is nonzero")
    data = enumerate_extensions(abar)
    entries = []
    lines = []
    for k, d in enumerate(data):
        label = "base" if k == 0 else f"base+mu{k}"
        e = build(d).e
        z = center(e).dim
        datadoc = data_to_doc(d)
        entries.append({"label": label, "data": datadoc, "center_dim": z})
        lines.append(f"{label}: dim {e.dim}, center dim {z}")
        if args.out_dir:
            Path(args.out_dir).mkdir(parents=True, exist_ok=True)
            _write(Path(args.out_dir) / f"{label}.data", datadoc)
    doc = {"command": "classify", "count": len(entries), "entries": entries}
    return doc, f"{len(entries)} extension class(es)\n" + "\n".join(lines)


def cmd_pullback(args):
    g, h = load_algebra(args.g), load_algebra(args.h)
    ext = pullback(_outer_action(args, g, h))
    algdoc = algebra_to_doc(ext.e)
    if args.output:
        _write(args.output, algdoc)
    return ({"command": "pullback", "algebra": algdoc, "dim": ext.e.dim, "kernel_dim": ext.h.dim},
            f"pullback: dim {ext.e.dim}, kernel ad(h) dim {ext.h.dim}\n{_structure_text(ext.e)}")


def cmd_central_class(args):
    h = load_algebra(args.algebra)
    abar = None
    if args.g:
        abar = _outer_action(args, load_algebra(args.g), h)
    cc = central_class(h, abar)
    Z = center(h)
    doc = {"command": "central-class", "quotient_dim": cc.quotient.dim, "center_dim": Z.dim,
           "nu": cochain_to_doc(cc.nu, cc.quotient.basis_labels,
                                [f"z{k + 1}" for k in range(Z.dim)]),
           "nonzero": cc.nonzero, "g_invariant": cc.invariant, "convention": cc.convention}
    text = f"[nu] {'nonzero' if cc.nonzero else 'zero'} in H^2({cc.quotient.name}; Z)"
    if cc.invariant is not None:
        text += f"; g-invariant: {cc.invariant}"
    return doc, text


def _load_data(path):
    return data_from_doc(load_json(path), base=Path(path).parent, where=str(path))


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieext", description="Exact Lie algebra extension toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="emit one JSON document")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check", cmd_check, "validate an algebra file or a data file")
    sp.add_argument("file")
    sp = add("invariants", cmd_invariants, "center, derivations, outer derivations")
    sp.add_argument("algebra")
    sp = add("derivations", cmd_derivations, "basis of der(h) and out(h) representatives")
    sp.add_argument("algebra")
    sp = add("cohomology", cmd_cohomology, "dimension and representatives of H^n(g; V)")
    sp.add_argument("--g", required=True)
    sp.add_argument("--coefficients", default="trivial1",
                    help="trivialN, adjoint, or a module file")
    sp.add_argument("--degree", type=int, required=True)
    sp = add("build", cmd_build, "build e from data (alpha, rho)")
    sp.add_argument("data")
    sp.add_argument("-o", "--output")
    sp = add("extract", cmd_extract, "extract (alpha, rho) from e and an ideal")
    sp.add_argument("algebra")
    sp.add_argument("--ideal", nargs="+", required=True, help="basis labels spanning the ideal")
    sp.add_argument("--section", help="matrix file, dim e x dim g")
    sp.add_argument("-o", "--output")
    sp = add("equivalent", cmd_equivalent, "decide equivalence of two data")
    sp.add_argument("data1")
    sp.add_argument("data2")
    sp = add("semidirect", cmd_semidirect, "semidirect product from a homomorphism g -> der(h)")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--action", default="zero")
    sp.add_argument("-o", "--output")
    sp = add("split", cmd_split, "decide or certify splitness")
    sp.add_argument("data")
    sp.add_argument("--certificate", help="matrix file b: g -> h")
    for name, fn, help in (("obstruction", cmd_obstruction, "obstruction class in H^3(g; Z(h))"),
                           ("classify", cmd_classify, "all extensions inducing an outer action"),
                           ("pullback", cmd_pullback, "the pullback der(h) x_out(h) g")):
        sp = add(name, fn, help)
        sp.add_argument("--g", required=True)
        sp.add_argument("--h", required=True)
        sp.add_argument("--outer", default="zero", help="'zero' or an action file of derivation lifts")
        if name == "classify":
            sp.add_argument("--out-dir")
        if name == "pullback":
            sp.add_argument("-o", "--output")
    sp = add("central-class", cmd_central_class, "class of h as central extension of ad(h)")
    sp.add_argument("algebra")
    sp.add_argument("--g")
    sp.add_argument("--outer", default="zero")
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        doc, text = args.fn(args)
    except Negative as neg:
        _emit(args, neg.doc, neg.text)
        return 1
    except (ValueError, KeyError) as exc:
        # FormatError, JacobiError, InvalidDataError, UndecidableError are ValueErrors
        sys.stderr.write(f"error: {exc}\n")
        return 2
    _emit(args, doc, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
