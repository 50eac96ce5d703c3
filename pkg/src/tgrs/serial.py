"""Canonical JSON documents for specs, matrices and reports.

Field elements serialize as their packed integers, with the field's
(p, m, modulus) carried alongside so packing is unambiguous.  Documents
contain integers, strings, lists and objects only, are written with sorted
keys and a fixed layout, and round-trip byte-identically.
"""

from __future__ import annotations

import json
from typing import Any

from .codes import TgrsSpec, validate_spec
from .gf import FieldCtx, field
from .linalg import MatrixGF


class DocumentError(ValueError):
    """A document fails schema or semantic validation."""


def canonical_dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def field_to_doc(ctx: FieldCtx) -> dict:
    return {"p": ctx.p, "m": ctx.m, "modulus": list(ctx.modulus)}


def doc_to_field(doc: dict) -> FieldCtx:
    try:
        return field(int(doc["p"]), int(doc["m"]), [int(c) for c in doc["modulus"]])
    except KeyError as exc:
        raise DocumentError(f"field descriptor missing key {exc}") from exc


def spec_to_doc(spec: TgrsSpec, meta: dict | None = None) -> dict:
    doc = {
        "field": field_to_doc(spec.ctx),
        "n": spec.n,
        "k": spec.k,
        "t": spec.t,
        "h": spec.h,
        "eta": spec.eta,
        "alpha": list(spec.alpha),
        "v": list(spec.v),
    }
    if meta:
        doc["meta"] = meta
    return doc


def doc_to_spec(doc: dict) -> tuple[TgrsSpec, dict]:
    if not isinstance(doc, dict):
        raise DocumentError("spec document must be a JSON object")
    try:
        ctx = doc_to_field(doc["field"])
        spec = TgrsSpec(
            ctx=ctx,
            n=int(doc["n"]),
            k=int(doc["k"]),
            t=int(doc["t"]),
            h=int(doc["h"]),
            eta=int(doc["eta"]),
            alpha=tuple(int(a) for a in doc["alpha"]),
            v=tuple(int(x) for x in doc["v"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed spec document: {exc}") from exc
    validate_spec(spec)
    return spec, doc.get("meta", {})


def save_spec(path: str, spec: TgrsSpec, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(spec_to_doc(spec, meta)))


def load_spec(path: str) -> tuple[TgrsSpec, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: not valid JSON: {exc}") from exc
    return doc_to_spec(doc)


def matrix_to_doc(mat: MatrixGF) -> dict:
    return {
        "field": field_to_doc(mat.ctx),
        "rows": mat.rows,
        "cols": mat.cols,
        "entries": list(mat.data),
    }


def doc_to_matrix(doc: dict) -> MatrixGF:
    try:
        ctx = doc_to_field(doc["field"])
        rows = int(doc["rows"])
        cols = int(doc["cols"])
        entries = [int(x) for x in doc["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed matrix document: {exc}") from exc
    if len(entries) != rows * cols:
        raise DocumentError("matrix entry count does not match dimensions")
    return MatrixGF(ctx, rows, cols, entries)


def matrix_to_text(mat: MatrixGF) -> str:
    """Row-major text form: a dimensions header line, then one line per row."""
    lines = [f"{mat.rows} {mat.cols}"]
    for i in range(mat.rows):
        lines.append(" ".join(str(x) for x in mat.row(i)))
    return "\n".join(lines) + "\n"
