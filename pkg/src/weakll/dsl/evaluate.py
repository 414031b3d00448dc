"""Evaluation of typechecked programs into LinMap and sequence values."""
from __future__ import annotations

from fractions import Fraction

from .. import exponential as ex
from .. import exponential_nonunit as nu
from .. import spaces as sp
from ..errors import ShapeError
from ..exact_linalg import Matrix
from ..monomials import Monomial
from . import nodes as n
from .lexer import DslError
from .typecheck import Checked, MapType, Typed


def _compose(params, args):
    out = args[-1]
    for outer in reversed(args[:-1]):
        if isinstance(out, sp.LinMap):
            out = outer @ out
        elif isinstance(out, nu.NonUnitSeq):
            out = nu.substitute_compose(outer, out)
        else:
            out = ex.kleisli_compose(outer, out)
    return out


def _kleisli(params, args):
    (f,) = args
    return nu.nonunit_kleisli_to_seq(f) if isinstance(f.dom, sp.BangNonUnit) else ex.kleisli_to_seq(f)


def _linear(params, args):
    (s,) = args
    return nu.nonunit_seq_to_kleisli(s) if isinstance(s, nu.NonUnitSeq) else ex.seq_to_kleisli(s)


EVAL = {
    "id": lambda p, a: sp.LinMap.identity(p[0]),
    "compose": _compose,
    "tensor": lambda p, a: sp.tensor_map(*a),
    "par": lambda p, a: sp.par_map(*a),
    "add": lambda p, a: a[0] + a[1],
    "pair": lambda p, a: sp.pairing(*a),
    "copair": lambda p, a: sp.copairing(*a),
    "curry": lambda p, a: sp.curry(a[0]),
    "uncurry": lambda p, a: sp.uncurry(a[0]),
    "transpose": lambda p, a: sp.transpose(a[0]),
    "ev": lambda p, a: sp.evaluation(*p),
    "assoc": lambda p, a: sp.associator(*p),
    "sym": lambda p, a: sp.symmetry(*p),
    "lunit": lambda p, a: sp.left_unitor(p[0]),
    "runit": lambda p, a: sp.right_unitor(p[0]),
    "inl": lambda p, a: sp.injection(p[0], p[1], 0, "coprod"),
    "inr": lambda p, a: sp.injection(p[0], p[1], 1, "coprod"),
    "fst": lambda p, a: sp.projection(p[0], p[1], 0, "prod"),
    "snd": lambda p, a: sp.projection(p[0], p[1], 1, "prod"),
    "diag": lambda p, a: sp.diagonal(p[0]),
    "counit": lambda p, a: ex.counit(*p),
    "comult": lambda p, a: ex.comultiplication(*p),
    "coder": lambda p, a: ex.coder(*p),
    "contraction": lambda p, a: ex.contraction(*p),
    "weakening": lambda p, a: ex.weakening(*p),
    "cocontraction": lambda p, a: ex.cocontraction(*p),
    "coweakening": lambda p, a: ex.coweakening(*p),
    "seely": lambda p, a: ex.seely_iso(*p),
    "mu": lambda p, a: ex.monoidal_mu(*p),
    "mu0": lambda p, a: ex.mu0(*p),
    "bang": lambda p, a: ex.bang_map(a[0], p[0]),
    "counit1": lambda p, a: nu.nonunit_counit(*p),
    "comult1": lambda p, a: nu.nonunit_comultiplication(*p),
    "bang1": lambda p, a: nu.nonunit_bang_map(a[0], p[0]),
    "seely1": lambda p, a: nu.nonunit_seely(*p),
    "dereliction": lambda p, a: ex.dereliction(*p),
    "ident1": lambda p, a: nu.identity_seq(*p),
    "kleisli": _kleisli,
    "linear": _linear,
    "curry_seq": lambda p, a: ex.curry_seq(a[0]),
    "uncurry_seq": lambda p, a: ex.uncurry_seq(a[0]),
}


def _matrix_value(t: Typed):
    e, ty = t.node, t.type
    m = Matrix.from_rows(e.rows, ty.dom.dim) if e.rows else Matrix.zeros(ty.cod.dim, ty.dom.dim)
    return sp.LinMap(ty.dom, ty.cod, m)


def _seq_value(t: Typed):
    e, ty = t.node, t.type
    by_grade: dict = {}
    for u, poly in enumerate(e.polys):
        for term in poly:
            ms = tuple(sorted(v for v, k in term.factors for _ in range(k)))
            bucket = by_grade.setdefault(len(ms), {}).setdefault(u, {})
            bucket[ms] = bucket.get(ms, Fraction(0)) + term.coeff
    parts = {g: Monomial.from_polynomials(ty.dom, ty.cod, g, polys) for g, polys in by_grade.items()}
    cls = nu.NonUnitSeq if ty.variant == "nonunit" else ex.MonomialSeq
    return cls.from_dict(ty.dom, ty.cod, ty.degree, {g: m for g, m in parts.items() if g >= cls.min_grade})


def value_type(v):
    if isinstance(v, sp.LinMap):
        return ("map", v.dom, v.cod)
    if isinstance(v, ex.MonomialSeq):
        return ("seq", v.variant, v.dom, v.cod, v.degree)
    return None


def _declared(t):
    if isinstance(t, MapType):
        return ("map", t.dom, t.cod)
    return ("seq", t.variant, t.dom, t.cod, t.degree)


class Evaluator:
    def __init__(self, checked: Checked, bindings: dict | None = None):
        self.checked = checked
        self.env: dict = {}
        bindings = bindings or {}
        for name, t in checked.inputs.items():
            if name not in bindings:
                raise DslError(f"no binding supplied for input {name!r}")
            v = bindings[name]
            if value_type(v) != _declared(t):
                raise DslError(f"binding for {name!r} does not have the declared type {t}")
            self.env[name] = v

    def eval(self, t: Typed):
        e = t.node
        if isinstance(e, n.Var):
            return self.env[e.name]
        if isinstance(e, n.MatrixLit):
            return _matrix_value(t)
        if isinstance(e, n.SeqLit):
            return _seq_value(t)
        args = [self.eval(c) for c in t.children]
        try:
            return EVAL[e.name](list(t.params), args)
        except ShapeError:
            raise  # a typechecked program should never get here
        except (ValueError, ZeroDivisionError) as err:
            raise DslError(f"{e.name}: {err}", e.pos) from None

    def run(self) -> dict:
        out = {}
        for name, typed in self.checked.lets:
            v = self.eval(typed)
            self.env[name] = v
            out[name] = v
        return out


def evaluate(checked: Checked, bindings: dict | None = None) -> dict:
    """Values of all ``let`` declarations, in source order."""
    return Evaluator(checked, bindings).run()
