"""Structure files: a diffable JSON schema for every object kind.

Scalars are strings "p" or "p/q" in lowest terms; indices are 0-based;
unspecified structure constants are zero. Files are dumped with sorted
keys so identical content is byte-identical.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from pathlib import Path
from typing import Any, Optional

from .algebras import HomAlgebra, HomFManifold, HomPreF
from .cohomology import Cochain, ComplexContext
from .deformations import Deformation
from .errors import DimensionMismatch, PreconditionError
from .linalg import BilinearMap, Matrix, MultiTensor, format_scalar, parse_scalar
from .operators import SymplecticForm
from .representations import Representation

SCHEMA_VERSION = 1

KINDS = ("hom-algebra", "hom-f-manifold", "hom-pre-f", "representation",
         "operator", "symplectic", "deformation", "cochain")


@dataclass(frozen=True)
class Loaded:
    kind: str
    payload: Any
    name: str = ""
    notes: str = ""
    params: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)


def file_digest(path: Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def save_file(path, doc: dict) -> None:
    Path(path).write_text(dump_json(doc), encoding="ascii")


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------

def grid(m: Matrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in m.entries]


def quads(b: BilinearMap) -> list[list]:
    out = []
    for i in range(b.dim_left):
        for j in range(b.dim_right):
            for k, v in enumerate(b.value(i, j)):
                if v:
                    out.append([i, j, k, format_scalar(v)])
    return out


def _meta(kind: str, name: str, notes: str, params: dict) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind}
    if name:
        doc["name"] = name
    if notes:
        doc["notes"] = notes
    if params:
        doc["params"] = {k: format_scalar(parse_scalar(str(v)) if not isinstance(v, Fraction) else v)
                         for k, v in params.items()}
    return doc


def _algebra_block(obj) -> dict:
    if isinstance(obj, HomFManifold):
        return {"dim": obj.dim, "labels": list(obj.labels), "twist": grid(obj.twist),
                "dot": quads(obj.dot), "bracket": quads(obj.bracket)}
    if isinstance(obj, HomPreF):
        return {"dim": obj.dim, "labels": list(obj.labels), "twist": grid(obj.twist),
                "diamond": quads(obj.diamond), "star": quads(obj.star)}
    if isinstance(obj, HomAlgebra):
        return {"dim": obj.dim, "labels": list(obj.labels), "twist": grid(obj.twist),
                "product": quads(obj.product)}
    raise TypeError(f"cannot encode {type(obj).__name__} as an algebra block")


def _rep_block(rep: Representation) -> dict:
    return {"mod_dim": rep.mod_dim,
            "rho": None if rep.rho is None else [grid(m) for m in rep.rho],
            "mu": None if rep.mu is None else [grid(m) for m in rep.mu],
            "phi": grid(rep.phi)}


def doc_for(obj, name: str = "", notes: str = "", params: Optional[dict] = None,
            matrices: Optional[dict[str, Matrix]] = None) -> dict:
    """Encode a single structure object into its file document."""
    params = params or {}
    if isinstance(obj, HomFManifold):
        doc = _meta("hom-f-manifold", name, notes, params)
        doc.update(_algebra_block(obj))
    elif isinstance(obj, HomPreF):
        doc = _meta("hom-pre-f", name, notes, params)
        doc.update(_algebra_block(obj))
    elif isinstance(obj, HomAlgebra):
        doc = _meta("hom-algebra", name, notes, params)
        doc.update(_algebra_block(obj))
    elif isinstance(obj, Deformation):
        doc = _meta("deformation", name, notes, params)
        doc["base"] = _algebra_block(obj.base)
        doc["terms"] = [quads(t) for t in obj.terms]
    else:
        raise TypeError(f"no file form for {type(obj).__name__}")
    if matrices:
        doc["matrices"] = {k: grid(m) for k, m in matrices.items()}
    return doc


def doc_for_representation(structure, rep: Representation, name: str = "",
                           notes: str = "", params: Optional[dict] = None) -> dict:
    doc = _meta("representation", name, notes, params or {})
    doc["algebra"] = _algebra_block(structure)
    doc["rep"] = _rep_block(rep)
    return doc


def doc_for_operator(fm: HomFManifold, rep: Representation, t: Matrix,
                     name: str = "", notes: str = "",
                     params: Optional[dict] = None) -> dict:
    doc = _meta("operator", name, notes, params or {})
    doc["algebra"] = _algebra_block(fm)
    doc["rep"] = _rep_block(rep)
    doc["T"] = grid(t)
    return doc


def doc_for_symplectic(fm: HomFManifold, omega: SymplecticForm, name: str = "",
                       notes: str = "", params: Optional[dict] = None) -> dict:
    doc = _meta("symplectic", name, notes, params or {})
    doc["algebra"] = _algebra_block(fm)
    doc["omega"] = grid(omega.gram)
    return doc


def doc_for_cochain(structure, rep: Representation, cochain: Cochain,
                    name: str = "", notes: str = "") -> dict:
    doc = _meta("cochain", name, notes, {})
    doc["algebra"] = _algebra_block(structure)
    doc["rep"] = _rep_block(rep)
    doc["degree"] = cochain.degree
    entries = []
    for idx in iproduct(*(range(d) for d in cochain.tensor.dims)):
        v = cochain.tensor.get(idx)
        if v:
            entries.append(list(idx) + [format_scalar(v)])
    doc["entries"] = entries
    return doc


# ---------------------------------------------------------------------------
# decoding
# ---------------------------------------------------------------------------

def _parse_grid(g, what: str) -> Matrix:
    if not isinstance(g, list) or not all(isinstance(r, list) for r in g):
        raise ValueError(f"{what}: expected a row-major grid")
    return Matrix.from_rows([[parse_scalar(str(v)) for v in row] for row in g])


def _parse_quads(dim: int, lst, what: str) -> BilinearMap:
    entries = {}
    for item in lst:
        if len(item) != 4:
            raise ValueError(f"{what}: entries must be (i, j, k, scalar) quadruples")
        i, j, k, v = item
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j, k)):
            raise ValueError(f"{what}: index out of range in {item}")
        entries[(i, j, k)] = parse_scalar(str(v))
    return BilinearMap.from_entries(dim, entries)


def _parse_algebra_block(block: dict, what: str = "algebra"):
    dim = block.get("dim")
    if not isinstance(dim, int) or dim < 0:
        raise ValueError(f"{what}: bad dim")
    labels = tuple(block.get("labels") or ())
    twist = _parse_grid(block.get("twist"), f"{what}.twist")
    if "dot" in block or "bracket" in block:
        dot = _parse_quads(dim, block.get("dot", []), f"{what}.dot")
        bracket = _parse_quads(dim, block.get("bracket", []), f"{what}.bracket")
        return HomFManifold(dim, dot, bracket, twist, labels)
    if "diamond" in block:
        diamond = _parse_quads(dim, block.get("diamond", []), f"{what}.diamond")
        star = _parse_quads(dim, block.get("star", []), f"{what}.star")
        return HomPreF(dim, diamond, star, twist, labels)
    product = _parse_quads(dim, block.get("product", []), f"{what}.product")
    return HomAlgebra(dim, product, twist, labels)


def _parse_rep_block(block: dict, alg_dim: int) -> Representation:
    mod_dim = block.get("mod_dim")
    if not isinstance(mod_dim, int) or mod_dim < 0:
        raise ValueError("rep.mod_dim missing or bad")
    rho = block.get("rho")
    mu = block.get("mu")
    rho_m = None if rho is None else tuple(_parse_grid(g, "rep.rho") for g in rho)
    mu_m = None if mu is None else tuple(_parse_grid(g, "rep.mu") for g in mu)
    phi = _parse_grid(block.get("phi"), "rep.phi")
    return Representation(alg_dim, mod_dim, rho_m, mu_m, phi)


def load_doc(doc: dict) -> Loaded:
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema_version")
    name = doc.get("name", "")
    notes = doc.get("notes", "")
    params = {k: parse_scalar(str(v)) for k, v in (doc.get("params") or {}).items()}
    matrices = {k: _parse_grid(g, f"matrices.{k}")
                for k, g in (doc.get("matrices") or {}).items()}

    if kind in ("hom-algebra", "hom-f-manifold", "hom-pre-f"):
        payload = _parse_algebra_block(doc, kind)
        expected = {"hom-algebra": HomAlgebra, "hom-f-manifold": HomFManifold,
                    "hom-pre-f": HomPreF}[kind]
        if not isinstance(payload, expected):
            raise ValueError(f"file declares {kind} but carries different operations")
    elif kind == "representation":
        structure = _parse_algebra_block(doc.get("algebra") or {})
        rep = _parse_rep_block(doc.get("rep") or {}, structure.dim)
        payload = (structure, rep)
    elif kind == "operator":
        structure = _parse_algebra_block(doc.get("algebra") or {})
        if not isinstance(structure, HomFManifold):
            raise ValueError("operator files embed a hom-f-manifold block")
        rep = _parse_rep_block(doc.get("rep") or {}, structure.dim)
        t = _parse_grid(doc.get("T"), "T")
        payload = (structure, rep, t)
    elif kind == "symplectic":
        structure = _parse_algebra_block(doc.get("algebra") or {})
        if not isinstance(structure, HomFManifold):
            raise ValueError("symplectic files embed a hom-f-manifold block")
        omega = SymplecticForm(_parse_grid(doc.get("omega"), "omega"))
        payload = (structure, omega)
    elif kind == "deformation":
        base = _parse_algebra_block(doc.get("base") or {}, "base")
        if not isinstance(base, HomAlgebra):
            raise ValueError("deformation base must carry a single product")
        terms = tuple(_parse_quads(base.dim, q, f"terms[{i}]")
                      for i, q in enumerate(doc.get("terms") or []))
        payload = Deformation(base, terms)
    elif kind == "cochain":
        structure = _parse_algebra_block(doc.get("algebra") or {})
        if not isinstance(structure, HomAlgebra):
            raise ValueError("cochain files embed a plain product block")
        rep = _parse_rep_block(doc.get("rep") or {}, structure.dim)
        degree = doc.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise ValueError("bad cochain degree")
        dims = (structure.dim,) * degree + (rep.mod_dim,)
        data = [Fraction(0)] * _flat_size(dims)
        for item in doc.get("entries") or []:
            *idx, v = item
            if len(idx) != degree + 1:
                raise ValueError("cochain entry arity mismatch")
            off = 0
            for dd, ii in zip(dims, idx):
                if not isinstance(ii, int) or not 0 <= ii < dd:
                    raise ValueError(f"cochain index out of range in {item}")
                off = off * dd + ii
            data[off] = parse_scalar(str(v))
        cochain = Cochain(degree, structure.dim, rep.mod_dim,
                          MultiTensor(dims, tuple(data)))
        ctx = ComplexContext(structure, rep)
        payload = (ctx, cochain)
    else:  # pragma: no cover
        raise ValueError(kind)
    return Loaded(kind=kind, payload=payload, name=name, notes=notes,
                  params=params, matrices=matrices)


def _flat_size(dims) -> int:
    n = 1
    for d in dims:
        n *= d
    return n


def load_file(path) -> Loaded:
    text = Path(path).read_text(encoding="ascii")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError("top level must be an object")
    return load_doc(doc)
