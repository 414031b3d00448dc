"""Printing syntax trees back to source.

Formulas are fully parenthesised, so ``parse(pretty(t)) == t`` holds for every
tree regardless of operator precedence.
"""
from __future__ import annotations

from fractions import Fraction

from . import nodes as n


def pretty_space(s) -> str:
    if isinstance(s, n.SpaceRef):
        return s.name
    if s.kind == "base":
        return f"base {s.args[0]}"
    return f"{s.kind}({', '.join(pretty_param(a) for a in s.args)})"


def pretty_param(p) -> str:
    return str(p) if isinstance(p, int) else pretty_space(p)


def pretty_formula(f) -> str:
    if isinstance(f, n.Atom):
        return f.name
    if isinstance(f, n.Neg):
        inner = pretty_formula(f.a)
        return f"{inner}^" if isinstance(f.a, (n.Atom, n.Neg)) else f"({inner})^"
    op = n.BINARY.get(type(f))
    if op:
        return f"({pretty_formula(f.a)} {op} {pretty_formula(f.b)})"
    if isinstance(f, n.Bang):
        return f"![{f.degree}]({pretty_formula(f.a)})"
    if isinstance(f, n.WhyNot):
        return f"?[{f.degree}]({pretty_formula(f.a)})"
    if isinstance(f, n.ShiftDown):
        return f"dn({pretty_formula(f.a)})"
    if isinstance(f, n.ShiftUp):
        return f"up({pretty_formula(f.a)})"
    raise TypeError(f"not a formula: {f!r}")


def _rational(x: Fraction) -> str:
    return str(x)


def _term(t: n.Term) -> str:
    factors = "*".join(f"x{v}" if k == 1 else f"x{v}^{k}" for v, k in t.factors)
    if not factors:
        return _rational(t.coeff)
    if t.coeff == 1:
        return factors
    return f"{_rational(t.coeff)}*{factors}"


def pretty_expr(e) -> str:
    if isinstance(e, n.Var):
        return e.name
    if isinstance(e, n.Call):
        out = e.name
        if e.params:
            out += "[" + ", ".join(pretty_param(p) for p in e.params) + "]"
        if e.args:
            out += "(" + ", ".join(pretty_expr(a) for a in e.args) + ")"
        return out
    if isinstance(e, n.MatrixLit):
        rows = "; ".join(", ".join(_rational(x) for x in r) for r in e.rows)
        return f"matrix[{pretty_space(e.dom)}, {pretty_space(e.cod)}]{{{rows}}}"
    if isinstance(e, n.SeqLit):
        polys = ", ".join(" + ".join(_term(t) for t in p) for p in e.polys)
        return f"{e.variant}[{pretty_space(e.dom)}, {pretty_space(e.cod)}, {e.degree}]{{{polys}}}"
    raise TypeError(f"not an expression: {e!r}")


def pretty_type(t) -> str:
    if isinstance(t, n.MapType):
        return f"{pretty_space(t.dom)} -> {pretty_space(t.cod)}"
    return f"{t.variant}[{pretty_space(t.dom)}, {pretty_space(t.cod)}, {t.degree}]"


def pretty_statement(s) -> str:
    if isinstance(s, n.SpaceDecl):
        return f"space {s.name} = {pretty_space(s.space)};"
    if isinstance(s, n.FormulaDecl):
        return f"formula {s.name} = {pretty_formula(s.formula)};"
    if isinstance(s, n.InputDecl):
        return f"input {s.name} : {pretty_type(s.type)};"
    if isinstance(s, n.LetDecl):
        return f"let {s.name} = {pretty_expr(s.expr)};"
    raise TypeError(f"not a statement: {s!r}")


def pretty(program: n.Program) -> str:
    return "".join(pretty_statement(s) + "\n" for s in program.statements)
