"""JSON encodings of spaces, maps, monomials and sequences.

Scalars are strings ``"p/q"`` (or ``"p"``), so a value survives a round trip
through any JSON library without touching a float.
"""
from __future__ import annotations

import json

from .exact_linalg import Matrix, format_scalar, scalar
from .exponential import MonomialSeq
from .exponential_nonunit import NonUnitSeq
from .monomials import Monomial
from .spaces import LinMap, Space, space_from_json

_SEQ_KINDS = {"unit": MonomialSeq, "nonunit": NonUnitSeq}


def _vec(vec: dict) -> dict:
    return {str(k): format_scalar(v) for k, v in sorted(vec.items())}


def to_json(value) -> dict:
    if isinstance(value, Space):
        return value.to_json()
    if isinstance(value, LinMap):
        return {
            "type": "linmap",
            "dom": value.dom.to_json(),
            "cod": value.cod.to_json(),
            "rows": value.matrix.rows,
            "cols": value.matrix.cols,
            "entries": [[format_scalar(x) for x in row] for row in value.matrix.to_rows()],
        }
    if isinstance(value, Monomial):
        return {
            "type": "monomial",
            "dom": value.dom.to_json(),
            "cod": value.cod.to_json(),
            "degree": value.degree,
            "terms": [{"multiset": list(ms), "coeffs": _vec(vec)}
                      for ms, vec in sorted(value.coeffs.items())],
        }
    if isinstance(value, MonomialSeq):
        return {
            "type": "seq",
            "variant": value.variant,
            "dom": value.dom.to_json(),
            "cod": value.cod.to_json(),
            "degree": value.degree,
            "components": [to_json(value[n]) for n in value.grades()],
        }
    raise TypeError(f"cannot serialise {type(value).__name__}")


def from_json(obj: dict):
    kind = obj.get("type")
    if kind == "linmap":
        rows = [[scalar(x) for x in r] for r in obj["entries"]]
        m = Matrix.from_rows(rows, obj["cols"]) if rows else Matrix.zeros(obj["rows"], obj["cols"])
        return LinMap(space_from_json(obj["dom"]), space_from_json(obj["cod"]), m)
    if kind == "monomial":
        coeffs = {}
        for term in obj["terms"]:
            coeffs[tuple(term["multiset"])] = {int(k): scalar(v) for k, v in term["coeffs"].items()}
        return Monomial(space_from_json(obj["dom"]), space_from_json(obj["cod"]), obj["degree"], coeffs)
    if kind == "seq":
        cls = _SEQ_KINDS[obj["variant"]]
        return cls(space_from_json(obj["dom"]), space_from_json(obj["cod"]), obj["degree"],
                   [from_json(c) for c in obj["components"]])
    return space_from_json(obj)


def dumps(value, **kwargs) -> str:
    return json.dumps(to_json(value), **kwargs)


def loads(text: str):
    return from_json(json.loads(text))
