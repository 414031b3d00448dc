"""Law-check results."""
from __future__ import annotations

from dataclasses import dataclass

from .operators import as_op, compare


@dataclass
class LawResult:
    law: str
    parameters: dict
    status: str  # "pass", "fail" or "skipped"
    witness: dict | None = None
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        out = {"law": self.law, "parameters": self.parameters, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


def _sparse_json(space, vec: dict) -> dict:
    return {space.label_str(i): str(v) for i, v in sorted(vec.items())}


def check_equal(law: str, params: dict, lhs, rhs, columns=None) -> LawResult:
    """Compare two maps column by column; on failure the witness holds the
    first differing column of each side."""
    lhs, rhs = as_op(lhs), as_op(rhs)
    diff = compare(lhs, rhs, columns)
    if diff is None:
        return LawResult(law, dict(params), "pass")
    j, a, b = diff
    witness = {
        "column": lhs.dom.label_str(j),
        "lhs": _sparse_json(lhs.cod, a),
        "rhs": _sparse_json(rhs.cod, b),
    }
    return LawResult(law, dict(params), "fail", witness)


def skipped(law: str, params: dict, reason: str) -> LawResult:
    return LawResult(law, dict(params), "skipped", note=reason)


def check_true(law: str, params: dict, ok: bool, witness: dict | None = None) -> LawResult:
    return LawResult(law, dict(params), "pass" if ok else "fail", None if ok else (witness or {}))
