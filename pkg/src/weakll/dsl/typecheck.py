"""Shape inference for DSL programs.

Every expression gets a :class:`MapType` or a :class:`SeqType`. Each carries the
truncation degree it depends on (None for purely linear terms); combining
terms built at two different degrees is an error that names both.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .. import spaces as sp
from ..errors import DimensionError
from . import nodes as n
from .lexer import DslError
from .polarity import PolarityReport, polarity


@dataclass(frozen=True)
class MapType:
    dom: sp.Space
    cod: sp.Space
    degree: int | None = None

    def __str__(self):
        return f"{self.dom} -> {self.cod}"

    def to_json(self) -> dict:
        return {"kind": "map", "dom": str(self.dom), "cod": str(self.cod), "degree": self.degree}


@dataclass(frozen=True)
class SeqType:
    dom: sp.Space
    cod: sp.Space
    degree: int
    variant: str = "unit"  # or "nonunit"

    def __str__(self):
        name = "seq" if self.variant == "unit" else "seq1"
        return f"{name}[{self.dom}, {self.cod}, {self.degree}]"

    def to_json(self) -> dict:
        return {"kind": "seq", "variant": self.variant, "dom": str(self.dom), "cod": str(self.cod),
                "degree": self.degree}


@dataclass
class Typed:
    """An expression annotated with its type, resolved parameters and typed children."""
    node: object
    type: object
    params: tuple = ()
    children: tuple = ()


@dataclass
class Checked:
    program: n.Program
    spaces: dict = field(default_factory=dict)
    formulas: dict = field(default_factory=dict)  # name -> (ast, Space, PolarityReport)
    inputs: dict = field(default_factory=dict)    # name -> type
    lets: list = field(default_factory=list)      # [(name, Typed)]
    types: dict = field(default_factory=dict)     # every input and let


# ------------------------------------------------------------- degrees

def space_degrees(s: sp.Space) -> set:
    out: set = set()
    stack = [s]
    while stack:
        x = stack.pop()
        if isinstance(x, (sp.Bang, sp.BangNonUnit, sp.FilteredTensor)):
            out.add(x.degree)
        for attr in ("of", "left", "right"):
            child = getattr(x, attr, None)
            if isinstance(child, sp.Space):
                stack.append(child)
    return out


def unify_degrees(degrees, pos) -> int | None:
    found = sorted({d for d in degrees if d is not None})
    if len(found) > 1:
        raise DslError(f"truncation degrees differ: {found[0]} vs {found[1]}", pos)
    return found[0] if found else None


def _map(dom, cod, pos, *extra) -> MapType:
    return MapType(dom, cod, unify_degrees(list(space_degrees(dom) | space_degrees(cod)) + list(extra), pos))


# ------------------------------------------------------------- checker

class Checker:
    def __init__(self):
        self.out: Checked | None = None

    # spaces ----------------------------------------------------------

    def space(self, node) -> sp.Space:
        out = self.out
        if isinstance(node, n.SpaceRef):
            if node.name in out.spaces:
                return out.spaces[node.name]
            if node.name in out.formulas:
                return out.formulas[node.name][1]
            raise DslError(f"unknown space {node.name!r}", node.pos)
        args = [a if isinstance(a, int) else self.space(a) for a in node.args]
        try:
            if node.kind == "base":
                s = sp.Base(*args)
            else:
                s = _SPACE_CTORS[node.kind](*args)
        except (ValueError, TypeError) as e:
            raise DslError(str(e), node.pos) from None
        unify_degrees(space_degrees(s), node.pos)
        return s

    # formulas --------------------------------------------------------

    def formula_space(self, f) -> sp.Space:
        if isinstance(f, n.Atom):
            s = self.out.spaces.get(f.name)
            if s is None:
                raise DslError(f"atom {f.name!r} is not a declared space", f.pos)
            if not isinstance(s, sp.Base):
                raise DslError(f"atom {f.name!r} must be a base space, got {s}", f.pos)
            return s
        if isinstance(f, n.Neg):
            return sp.Dual(self.formula_space(f.a))
        if isinstance(f, (n.ShiftDown, n.ShiftUp)):
            return self.formula_space(f.a)
        if isinstance(f, n.Bang):
            return sp.Bang(self.formula_space(f.a), f.degree)
        if isinstance(f, n.WhyNot):
            return sp.Dual(sp.Bang(sp.Dual(self.formula_space(f.a)), f.degree))
        ctor = {n.Tensor: sp.Tensor, n.Par: sp.Par, n.With: sp.Prod, n.Plus: sp.Coprod}[type(f)]
        s = ctor(self.formula_space(f.a), self.formula_space(f.b))
        unify_degrees(space_degrees(s), f.pos)
        return s

    # types -----------------------------------------------------------

    def type_(self, t, pos):
        dom, cod = self.space(t.dom), self.space(t.cod)
        if isinstance(t, n.MapType):
            return _map(dom, cod, pos)
        variant = "unit" if t.variant == "seq" else "nonunit"
        _need_degree(t.degree, variant == "nonunit", pos)
        unify_degrees(list(space_degrees(dom) | space_degrees(cod)) + [t.degree], pos)
        return SeqType(dom, cod, t.degree, variant)

    # expressions -----------------------------------------------------

    def expr(self, e) -> Typed:
        if isinstance(e, n.Var):
            t = self.out.types.get(e.name)
            if t is None:
                raise DslError(f"unknown name {e.name!r}", e.pos)
            return Typed(e, t)
        if isinstance(e, n.MatrixLit):
            return self._matrix(e)
        if isinstance(e, n.SeqLit):
            return self._seq(e)
        rule = RULES.get(e.name)
        if rule is None:
            raise DslError(f"unknown combinator {e.name!r}", e.pos)
        sig, nargs, fn = rule
        if len(e.params) != len(sig):
            raise DslError(f"{e.name} takes {len(sig)} parameter(s) [{', '.join(sig)}], got {len(e.params)}", e.pos)
        params = []
        for code, p in zip(sig, e.params):
            if code == "D":
                if not isinstance(p, int):
                    raise DslError(f"{e.name}: expected a truncation degree, got a space", e.pos)
                params.append(p)
            else:
                if isinstance(p, int):
                    raise DslError(f"{e.name}: expected a space, got the integer {p}", e.pos)
                params.append(self.space(p))
        if nargs >= 0 and len(e.args) != nargs:
            raise DslError(f"{e.name} takes {nargs} argument(s), got {len(e.args)}", e.pos)
        children = tuple(self.expr(a) for a in e.args)
        t = fn(params, [c.type for c in children], e.pos)
        return Typed(e, t, tuple(params), children)

    def _matrix(self, e) -> Typed:
        dom, cod = self.space(e.dom), self.space(e.cod)
        if len(e.rows) != cod.dim:
            raise DslError(f"matrix literal for {dom} -> {cod} needs {cod.dim} rows, got {len(e.rows)}", e.pos)
        for r in e.rows:
            if len(r) != dom.dim:
                raise DslError(f"matrix literal for {dom} -> {cod} needs rows of length {dom.dim}, "
                               f"got {len(r)}", e.pos)
        return Typed(e, _map(dom, cod, e.pos))

    def _seq(self, e) -> Typed:
        dom, cod = self.space(e.dom), self.space(e.cod)
        nonunit = e.variant == "seq1"
        _need_degree(e.degree, nonunit, e.pos)
        if len(e.polys) != cod.dim:
            raise DslError(f"sequence literal into {cod} needs {cod.dim} polynomial(s), got {len(e.polys)}", e.pos)
        for poly in e.polys:
            for term in poly:
                deg = sum(k for _, k in term.factors)
                for v, _ in term.factors:
                    if v >= dom.dim:
                        raise DslError(f"variable x{v} out of range for {dom} (dim {dom.dim})", e.pos)
                if term.coeff and deg > e.degree:
                    raise DslError(f"term of degree {deg} exceeds truncation {e.degree}", e.pos)
                if term.coeff and nonunit and deg == 0:
                    raise DslError("a seq1 literal has no constant term", e.pos)
        unify_degrees(list(space_degrees(dom) | space_degrees(cod)) + [e.degree], e.pos)
        return Typed(e, SeqType(dom, cod, e.degree, "nonunit" if nonunit else "unit"))

    # program ---------------------------------------------------------

    def check(self, program: n.Program) -> Checked:
        self.out = out = Checked(program)
        for s in program.statements:
            name = s.name
            if name in out.spaces or name in out.formulas or name in out.types:
                raise DslError(f"{name!r} is already defined", s.pos)
            if isinstance(s, n.SpaceDecl):
                out.spaces[name] = self.space(s.space)
            elif isinstance(s, n.FormulaDecl):
                space = self.formula_space(s.formula)
                report: PolarityReport = polarity(s.formula)
                out.formulas[name] = (s.formula, space, report)
            elif isinstance(s, n.InputDecl):
                t = self.type_(s.type, s.pos)
                out.inputs[name] = t
                out.types[name] = t
            else:
                typed = self.expr(s.expr)
                out.lets.append((name, typed))
                out.types[name] = typed.type
        return out


def _need_degree(degree: int, nonunit: bool, pos):
    if nonunit and degree < 1:
        raise DslError(f"the non-unit exponential needs truncation degree >= 1, got {degree}", pos)


_SPACE_CTORS = {
    "dual": sp.Dual, "tensor": sp.Tensor, "par": sp.Par, "hom": sp.Hom, "prod": sp.Prod,
    "coprod": sp.Coprod, "sympow": sp.SymPow, "bang": sp.Bang, "bang1": sp.BangNonUnit,
    "ftensor": sp.FilteredTensor,
}


# ------------------------------------------------------------ rules

def _want_map(t, what, pos) -> MapType:
    if not isinstance(t, MapType):
        raise DslError(f"{what} needs a linear map, got {t}", pos)
    return t


def _want_seq(t, what, pos) -> SeqType:
    if not isinstance(t, SeqType):
        raise DslError(f"{what} needs a sequence, got {t}", pos)
    return t


def _grade_one(d, what, pos):
    if d < 1:
        raise DslError(f"{what} needs truncation degree >= 1, got {d}", pos)


def _compose(params, ts, pos):
    if len(ts) < 2:
        raise DslError(f"compose takes at least 2 arguments, got {len(ts)}", pos)
    if all(isinstance(t, MapType) for t in ts):
        for outer, inner in zip(ts, ts[1:]):
            if inner.cod != outer.dom:
                raise DslError(f"cannot compose: inner codomain {inner.cod} vs outer domain {outer.dom}", pos)
        return _map(ts[-1].dom, ts[0].cod, pos, *(t.degree for t in ts))
    if all(isinstance(t, SeqType) for t in ts):
        unify_degrees([t.degree for t in ts], pos)
        if len({t.variant for t in ts}) > 1:
            raise DslError("cannot compose a unit sequence with a non-unit one", pos)
        for outer, inner in zip(ts, ts[1:]):
            if inner.cod != outer.dom:
                raise DslError(f"cannot compose: inner codomain {inner.cod} vs outer domain {outer.dom}", pos)
        return SeqType(ts[-1].dom, ts[0].cod, ts[0].degree, ts[0].variant)
    raise DslError("compose needs all linear maps or all sequences, got " + ", ".join(map(str, ts)), pos)


def _binary_map(name, ctor):
    def rule(params, ts, pos):
        f, g = (_want_map(t, name, pos) for t in ts)
        unify_degrees([f.degree, g.degree], pos)
        return _map(ctor(f.dom, g.dom), ctor(f.cod, g.cod), pos, f.degree, g.degree)
    return rule


def _add(params, ts, pos):
    f, g = ts
    if type(f) is not type(g) or (f.dom, f.cod) != (g.dom, g.cod):
        raise DslError(f"cannot add {f} and {g}", pos)
    if isinstance(f, SeqType) and (f.degree, f.variant) != (g.degree, g.variant):
        raise DslError(f"cannot add {f} and {g}", pos)
    unify_degrees([f.degree, g.degree], pos)
    return f


def _pair(params, ts, pos):
    f, g = (_want_map(t, "pair", pos) for t in ts)
    if f.dom != g.dom:
        raise DslError(f"pair needs a common domain, got {f.dom} and {g.dom}", pos)
    return _map(f.dom, sp.Prod(f.cod, g.cod), pos, f.degree, g.degree)


def _copair(params, ts, pos):
    f, g = (_want_map(t, "copair", pos) for t in ts)
    if f.cod != g.cod:
        raise DslError(f"copair needs a common codomain, got {f.cod} and {g.cod}", pos)
    return _map(sp.Coprod(f.dom, g.dom), f.cod, pos, f.degree, g.degree)


def _curry(params, ts, pos):
    f = _want_map(ts[0], "curry", pos)
    if not isinstance(f.dom, sp.Tensor):
        raise DslError(f"curry needs a map out of a tensor, got domain {f.dom}", pos)
    return _map(f.dom.left, sp.Hom(f.dom.right, f.cod), pos, f.degree)


def _uncurry(params, ts, pos):
    f = _want_map(ts[0], "uncurry", pos)
    if not isinstance(f.cod, sp.Hom):
        raise DslError(f"uncurry needs a map into a hom space, got codomain {f.cod}", pos)
    return _map(sp.Tensor(f.dom, f.cod.left), f.cod.right, pos, f.degree)


def _transpose(params, ts, pos):
    f = _want_map(ts[0], "transpose", pos)
    return _map(sp.Dual(f.cod), sp.Dual(f.dom), pos, f.degree)


def _fixed(fn):
    """A rule for a parameter-only combinator: ``fn(*params) -> (dom, cod)``."""
    def rule(params, ts, pos):
        dom, cod = fn(*params)
        return _map(dom, cod, pos)
    return rule


def _exp(fn, what, needs_one=True):
    def rule(params, ts, pos):
        if needs_one:
            _grade_one(params[-1], what, pos)
        dom, cod = fn(*params)
        return _map(dom, cod, pos)
    return rule


def _bang_functor(nonunit):
    kind = sp.BangNonUnit if nonunit else sp.Bang
    name = "bang1" if nonunit else "bang"

    def rule(params, ts, pos):
        (d,) = params
        f = _want_map(ts[0], name, pos)
        if nonunit:
            _grade_one(d, name, pos)
        unify_degrees([f.degree, d], pos)
        return _map(kind(f.dom, d), kind(f.cod, d), pos, f.degree)
    return rule


def _seq_param(nonunit):
    def rule(params, ts, pos):
        s, d = params
        _grade_one(d, "ident1" if nonunit else "dereliction", pos)
        unify_degrees(list(space_degrees(s)) + [d], pos)
        return SeqType(s, s, d, "nonunit" if nonunit else "unit")
    return rule


def _kleisli(params, ts, pos):
    f = _want_map(ts[0], "kleisli", pos)
    if not isinstance(f.dom, (sp.Bang, sp.BangNonUnit)):
        raise DslError(f"kleisli needs a map out of an exponential, got domain {f.dom}", pos)
    nonunit = isinstance(f.dom, sp.BangNonUnit)
    return SeqType(f.dom.of, f.cod, f.dom.degree, "nonunit" if nonunit else "unit")


def _linear(params, ts, pos):
    s = _want_seq(ts[0], "linear", pos)
    kind = sp.BangNonUnit if s.variant == "nonunit" else sp.Bang
    return _map(kind(s.dom, s.degree), s.cod, pos, s.degree)


def _curry_seq(params, ts, pos):
    s = _want_seq(ts[0], "curry_seq", pos)
    if s.variant != "unit" or not isinstance(s.dom, sp.Prod):
        raise DslError(f"curry_seq needs a unit sequence on a product, got {s}", pos)
    return SeqType(s.dom.left, sp.Hom(sp.Bang(s.dom.right, s.degree), s.cod), s.degree)


def _uncurry_seq(params, ts, pos):
    s = _want_seq(ts[0], "uncurry_seq", pos)
    cod = s.cod
    if s.variant != "unit" or not isinstance(cod, sp.Hom) or not isinstance(cod.left, sp.Bang):
        raise DslError(f"uncurry_seq needs a unit sequence into hom(bang(T, D), U), got {s}", pos)
    unify_degrees([cod.left.degree, s.degree], pos)
    return SeqType(sp.Prod(s.dom, cod.left.of), cod.right, s.degree)


def _b(s, d):
    return sp.Bang(s, d)


def _b1(s, d):
    return sp.BangNonUnit(s, d)


# name -> (parameter codes, argument count or -1 for variadic, rule)
RULES = {
    "id": ("S", 0, _fixed(lambda s: (s, s))),
    "compose": ("", -1, _compose),
    "tensor": ("", 2, _binary_map("tensor", sp.Tensor)),
    "par": ("", 2, _binary_map("par", sp.Par)),
    "add": ("", 2, _add),
    "pair": ("", 2, _pair),
    "copair": ("", 2, _copair),
    "curry": ("", 1, _curry),
    "uncurry": ("", 1, _uncurry),
    "transpose": ("", 1, _transpose),
    "ev": ("SS", 0, _fixed(lambda s, t: (sp.Tensor(sp.Hom(s, t), s), t))),
    "assoc": ("SSS", 0, _fixed(lambda s, t, u: (sp.Tensor(sp.Tensor(s, t), u), sp.Tensor(s, sp.Tensor(t, u))))),
    "sym": ("SS", 0, _fixed(lambda s, t: (sp.Tensor(s, t), sp.Tensor(t, s)))),
    "lunit": ("S", 0, _fixed(lambda s: (sp.Tensor(sp.UNIT, s), s))),
    "runit": ("S", 0, _fixed(lambda s: (sp.Tensor(s, sp.UNIT), s))),
    "inl": ("SS", 0, _fixed(lambda s, t: (s, sp.Coprod(s, t)))),
    "inr": ("SS", 0, _fixed(lambda s, t: (t, sp.Coprod(s, t)))),
    "fst": ("SS", 0, _fixed(lambda s, t: (sp.Prod(s, t), s))),
    "snd": ("SS", 0, _fixed(lambda s, t: (sp.Prod(s, t), t))),
    "diag": ("S", 0, _fixed(lambda s: (s, sp.Prod(s, s)))),
    "counit": ("SD", 0, _exp(lambda s, d: (_b(s, d), s), "counit")),
    "comult": ("SD", 0, _exp(lambda s, d: (_b(s, d), _b(_b(s, d), d)), "comult", False)),
    "coder": ("SD", 0, _exp(lambda s, d: (s, _b(s, d)), "coder")),
    "contraction": ("SD", 0, _exp(lambda s, d: (_b(s, d), sp.FilteredTensor(_b(s, d), _b(s, d), d)),
                                  "contraction", False)),
    "weakening": ("SD", 0, _exp(lambda s, d: (_b(s, d), sp.UNIT), "weakening", False)),
    "cocontraction": ("SD", 0, _exp(lambda s, d: (sp.FilteredTensor(_b(s, d), _b(s, d), d), _b(s, d)),
                                    "cocontraction", False)),
    "coweakening": ("SD", 0, _exp(lambda s, d: (sp.UNIT, _b(s, d)), "coweakening", False)),
    "seely": ("SSD", 0, _exp(lambda s, t, d: (_b(sp.Prod(s, t), d), sp.FilteredTensor(_b(s, d), _b(t, d), d)),
                             "seely", False)),
    "mu": ("SSD", 0, _exp(lambda s, t, d: (sp.Tensor(_b(s, d), _b(t, d)), _b(sp.Tensor(s, t), d)), "mu", False)),
    "mu0": ("D", 0, _exp(lambda d: (sp.UNIT, _b(sp.UNIT, d)), "mu0", False)),
    "bang": ("D", 1, _bang_functor(False)),
    "counit1": ("SD", 0, _exp(lambda s, d: (_b1(s, d), s), "counit1")),
    "comult1": ("SD", 0, _exp(lambda s, d: (_b1(s, d), _b1(_b1(s, d), d)), "comult1")),
    "bang1": ("D", 1, _bang_functor(True)),
    "seely1": ("SSD", 0, _exp(lambda s, t, d: (_b1(sp.Prod(s, t), d),
                                               sp.FilteredTensor(_b(s, d), _b(t, d), d, 1)), "seely1")),
    "dereliction": ("SD", 0, _seq_param(False)),
    "ident1": ("SD", 0, _seq_param(True)),
    "kleisli": ("", 1, _kleisli),
    "linear": ("", 1, _linear),
    "curry_seq": ("", 1, _curry_seq),
    "uncurry_seq": ("", 1, _uncurry_seq),
}


def typecheck(program: n.Program) -> Checked:
    try:
        return Checker().check(program)
    except DimensionError as e:  # pragma: no cover - spaces validate their own arguments
        raise DslError(str(e)) from None
