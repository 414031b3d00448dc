import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakll.dsl import (DslError, evaluate, parse, parse_formula, parse_space, polarity, pretty,
                        pretty_formula, typecheck)
from weakll.dsl import nodes as n
from weakll.dsl.parser import COMBINATORS
from weakll.errors import ShapeError
from weakll.exponential import MonomialSeq, seely_iso
from weakll.exponential_nonunit import NonUnitSeq
from weakll.spaces import UNIT, Bang, Base, Dual, Hom, LinMap, Tensor


def run(source, bindings=None):
    return evaluate(typecheck(parse(source)), bindings)


# ------------------------------------------------------------------ parsing

def test_parse_examples():
    prog = parse("space E = base 2; let d = coder[E,3];")
    assert prog.statements[0] == n.SpaceDecl("E", n.SpaceApp("base", (2,)))
    assert prog.statements[1] == n.LetDecl("d", n.Call("coder", (n.SpaceRef("E"), 3), ()))


def test_syntax_error_position():
    with pytest.raises(DslError) as e:
        parse("let = ;")
    assert e.value.pos == (1, 5)
    assert str(e.value) == "1:5: expected a name, found '='"


@pytest.mark.parametrize("source,fragment", [
    ("space E = base 2", "expected ';'"),
    ("let x = matrix[base 1, base 1]{1/0};", "zero denominator"),
    ("let x = seq[base 1, base 1, 2]{y0};", "expected a variable"),
    ("space E = bang(base 2);", "expected ','"),
    ("frobnicate;", "expected 'space'"),
])
def test_syntax_errors(source, fragment):
    with pytest.raises(DslError, match=fragment):
        parse(source)


def test_formula_precedence():
    f = parse_formula("X * Y | Z^ & W")
    assert f == n.Par(n.Tensor(n.Atom("X"), n.Atom("Y")), n.With(n.Neg(n.Atom("Z")), n.Atom("W")))
    assert pretty_formula(parse_formula("![2]X^ + Y")) == "(![2](X^) + Y)"


# --------------------------------------------------------------- round trip

names = st.sampled_from(["E", "F", "X", "Y", "G2"])
degrees = st.integers(0, 4)

spaces = st.recursive(
    st.one_of(names.map(n.SpaceRef), st.integers(1, 5).map(lambda d: n.SpaceApp("base", (d,)))),
    lambda inner: st.one_of(
        inner.map(lambda a: n.SpaceApp("dual", (a,))),
        st.tuples(st.sampled_from(["tensor", "par", "hom", "prod", "coprod"]), inner, inner).map(
            lambda t: n.SpaceApp(t[0], (t[1], t[2]))),
        st.tuples(st.sampled_from(["sympow", "bang", "bang1"]), inner, degrees).map(
            lambda t: n.SpaceApp(t[0], (t[1], t[2]))),
        st.tuples(inner, inner, degrees).map(lambda t: n.SpaceApp("ftensor", t)),
        st.tuples(inner, inner, degrees, degrees).map(lambda t: n.SpaceApp("ftensor", t)),
    ), max_leaves=6)

formulas = st.recursive(
    names.map(n.Atom),
    lambda inner: st.one_of(
        inner.map(n.Neg), inner.map(n.ShiftDown), inner.map(n.ShiftUp),
        st.tuples(inner, degrees).map(lambda t: n.Bang(*t)),
        st.tuples(inner, degrees).map(lambda t: n.WhyNot(*t)),
        st.tuples(st.sampled_from([n.Tensor, n.Par, n.With, n.Plus]), inner, inner).map(
            lambda t: t[0](t[1], t[2])),
    ), max_leaves=8)

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
terms = st.builds(n.Term, fractions,
                  st.lists(st.tuples(st.integers(0, 3), st.integers(1, 4)), max_size=3).map(tuple))
seq_lits = st.builds(n.SeqLit, st.sampled_from(["seq", "seq1"]), spaces, spaces, degrees,
                     st.lists(st.lists(terms, min_size=1, max_size=3).map(tuple),
                              min_size=1, max_size=2).map(tuple))
matrix_lits = st.builds(n.MatrixLit, spaces, spaces,
                        st.lists(st.lists(fractions, min_size=1, max_size=3).map(tuple),
                                 max_size=3).map(tuple))
params = st.lists(st.one_of(spaces, degrees), max_size=3).map(tuple)

exprs = st.recursive(
    st.one_of(st.sampled_from(["f", "g", "h1"]).map(n.Var), matrix_lits, seq_lits),
    lambda inner: st.builds(n.Call, st.sampled_from(sorted(COMBINATORS)), params,
                            st.lists(inner, max_size=3).map(tuple)),
    max_leaves=6)

types = st.one_of(st.builds(n.MapType, spaces, spaces),
                  st.builds(n.SeqType, st.sampled_from(["seq", "seq1"]), spaces, spaces, degrees))

statements = st.one_of(
    st.builds(n.SpaceDecl, names, spaces),
    st.builds(n.FormulaDecl, names, formulas),
    st.builds(n.InputDecl, names, types),
    st.builds(n.LetDecl, names, exprs),
)


@given(formulas)
def test_formula_roundtrip(f):
    assert parse_formula(pretty_formula(f)) == f


@given(spaces)
def test_space_roundtrip(s):
    prog = n.Program((n.SpaceDecl("S", s),))
    assert parse(pretty(prog)) == prog


@given(st.lists(statements, max_size=5).map(tuple))
def test_program_roundtrip(stmts):
    prog = n.Program(stmts)
    assert parse(pretty(prog)) == prog


# ---------------------------------------------------------------- typechecks

def test_typecheck_examples():
    checked = typecheck(parse("space E = base 2; let i = compose(counit[E,3], coder[E,3]);"))
    t = checked.types["i"]
    assert str(t.dom) == "base 2" and str(t.cod) == "base 2"


@pytest.mark.parametrize("source,message", [
    ("space E = base 1; let t = tensor(counit[E,2], counit[E,3]);",
     "truncation degrees differ: 2 vs 3"),
    ("let c = curry(id[base 2]);", "curry needs a map out of a tensor, got domain base 2"),
    ("let c = compose(id[base 2], id[base 3]);",
     "cannot compose: inner codomain base 3 vs outer domain base 2"),
    ("let m = matrix[base 2, base 1]{1, 2, 3};", "row"),
    ("let x = nosuch;", "unknown name"),
    ("space E = base 1; space E = base 2;", "already"),
    ("formula F = X * Y;", "X"),
])
def test_type_errors(source, message):
    with pytest.raises(DslError, match=message):
        typecheck(parse(source))


def test_formula_spaces_and_shifts():
    checked = typecheck(parse(
        "space X = base 2; space Y = base 3;"
        "formula A = X * Y; formula B = dn(X * Y); formula C = up(X^) + Y; formula W = ?[2](X^);"))
    _, sa, ra = checked.formulas["A"]
    _, sb, rb = checked.formulas["B"]
    assert sa == sb == Tensor(Base(2), Base(3))
    assert ra.requires_shift and not rb.requires_shift
    _, sc, _ = checked.formulas["C"]
    assert sc.dim == 5
    _, sw, rw = checked.formulas["W"]
    assert sw.dim == 6 and rw.polarity == "negative"


# ----------------------------------------------------------------- evaluate

def test_evaluate_examples():
    out = run("space E = base 2;"
              "let i = compose(counit[E,3], coder[E,3]);"
              "let s = seely[base 1, base 1, 2];"
              "let m = matrix[base 2, base 2]{1, 2; 3, 4};")
    assert out["i"] == LinMap.identity(Base(2))
    assert out["s"] == seely_iso(UNIT, UNIT, 2)
    assert out["s"].matrix.shape == (6, 6)
    assert out["m"].matrix.to_rows() == [[1, 2], [3, 4]]


def test_evaluate_sequences():
    out = run("let f = seq1[base 1, base 1, 4]{x0 + x0^2};"
              "let g = seq1[base 1, base 1, 4]{x0^2};"
              "let h = compose(g, f);"
              "let u = compose(seq[base 1, base 1, 4]{x0^2}, seq[base 1, base 1, 4]{x0 + x0^2});"
              "let k = kleisli(linear(f));")
    h, u = out["h"], out["u"]
    assert isinstance(h, NonUnitSeq) and isinstance(u, MonomialSeq)
    assert [h[p](["1"])[0] for p in range(1, 5)] == [0, 1, 2, 1]
    assert [u[p](["1"])[0] for p in range(5)] == [0, 0, 1, 0, 1]
    assert out["k"] == out["f"]


def test_evaluate_inputs():
    f = LinMap.from_rows(Base(2), Base(2), [[0, 1], [1, 0]])
    out = run("input f : base 2 -> base 2; let g = compose(f, f);", {"f": f})
    assert out["g"] == LinMap.identity(Base(2))
    with pytest.raises(DslError, match="no binding"):
        run("input f : base 2 -> base 2; let g = f;")
    with pytest.raises(DslError, match="declared type"):
        run("input f : base 2 -> base 1; let g = f;", {"f": f})


def test_evaluate_curry_and_hom():
    out = run("let e = ev[base 2, base 1]; let c = curry(e);")
    assert out["e"].dom == Tensor(Hom(Base(2), UNIT), Base(2))
    assert out["c"] == LinMap.identity(Hom(Base(2), UNIT))


# ---------------------------------------------------- soundness of the checker

BASES = [Base(1), Base(2)]
D = 2


def _matrix(rng, dom, cod):
    rows = "; ".join(", ".join(str(rng.randint(-2, 2)) for _ in range(dom.dim)) for _ in range(cod.dim))
    return f"matrix[{dom}, {cod}]{{{rows}}}"


def gen_from(rng, depth, dom):
    """A random well-typed map expression out of ``dom``; returns ``(text, cod)``."""
    choice = rng.randrange(6) if depth and dom.dim <= 12 else 5
    if choice == 0:
        return f"id[{dom}]", dom
    if choice == 1:
        inner, mid = gen_from(rng, depth - 1, dom)
        outer, cod = gen_from(rng, depth - 1, mid)
        return f"compose({outer}, {inner})", cod
    if choice == 2 and dom.dim <= 2:
        return f"coder[{dom}, {D}]", Bang(dom, D)
    if choice == 3 and isinstance(dom, Bang):
        return f"counit[{dom.of}, {dom.degree}]", dom.of
    if choice == 4 and isinstance(dom, Bang):
        return f"weakening[{dom.of}, {dom.degree}]", UNIT
    cod = rng.choice(BASES)
    return _matrix(rng, dom, cod), cod


def gen_map(rng, depth):
    """A random well-typed map expression; returns ``(text, dom, cod)``."""
    choice = rng.randrange(5) if depth else 0
    if choice == 1:
        a, da, ca = gen_map(rng, depth - 1)
        b, db, cb = gen_map(rng, depth - 1)
        return f"tensor({a}, {b})", Tensor(da, db), Tensor(ca, cb)
    if choice == 2:
        text, d0, c0 = gen_map(rng, depth - 1)
        if d0.dim <= 2:
            return f"bang[{D}]({text})", Bang(d0, D), Bang(c0, D)
    if choice == 3:
        text, d0, c0 = gen_map(rng, depth - 1)
        if isinstance(d0, Tensor):
            return f"curry({text})", d0.left, Hom(d0.right, c0)
        return f"transpose({text})", Dual(c0), Dual(d0)
    dom = rng.choice(BASES + [Bang(UNIT, D), Tensor(UNIT, Base(2))])
    text, cod = gen_from(rng, depth, dom)
    return text, dom, cod


@given(st.integers(0, 10 ** 6))
def test_typecheck_is_sound(seed):
    rng = random.Random(seed)
    text, dom, cod = gen_map(rng, 3)
    checked = typecheck(parse(f"let f = {text};"))
    assert (checked.types["f"].dom, checked.types["f"].cod) == (dom, cod)
    try:
        value = evaluate(checked)["f"]
    except ShapeError as e:  # pragma: no cover - this is the failure being tested for
        pytest.fail(f"typechecked program raised {e!r}: {text}")
    assert (value.dom, value.cod) == (dom, cod)


# ------------------------------------------------------------------ polarity

@given(formulas)
def test_polarity_total_or_positioned_error(f):
    try:
        r = polarity(f)
    except DslError as e:
        assert "expects" in str(e) or "atoms only" in str(e)
        return
    assert r.polarity in ("negative", "positive")
    if r.polarity == "negative":
        assert not r.requires_shift


@pytest.mark.parametrize("text,pol,shift", [
    ("?[2](X^)", "negative", False),
    ("X * Y", "positive", True),
    ("X + Y", "positive", False),
    ("![3]X", "positive", True),
    ("dn(X * Y)", "negative", False),
])
def test_polarity_table(text, pol, shift):
    r = polarity(parse_formula(text))
    assert (r.polarity, r.requires_shift) == (pol, shift)


def test_polarity_rejects_mixed():
    with pytest.raises(DslError, match="insert up"):
        polarity(parse_formula("X * Y^"))
    with pytest.raises(DslError, match="atoms only"):
        polarity(parse_formula("(X * Y)^"))


def test_parse_space_helper():
    assert parse_space("bang(base 2, 3)") == n.SpaceApp("bang", (n.SpaceApp("base", (2,)), 3))
