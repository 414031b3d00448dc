"""Recursive-descent parser; the grammar is written out in ``docs/grammar.ebnf``."""
from __future__ import annotations

from fractions import Fraction

from . import nodes as n
from .lexer import DslError, Token, tokenize

SPACE_KINDS = {
    "dual": "S", "tensor": "SS", "par": "SS", "hom": "SS", "prod": "SS", "coprod": "SS",
    "sympow": "SI", "bang": "SI", "bang1": "SI", "ftensor": "SSI",
}

COMBINATORS = frozenset({
    "id", "compose", "tensor", "par", "add", "pair", "copair", "curry", "uncurry", "transpose",
    "ev", "assoc", "sym", "lunit", "runit", "inl", "inr", "fst", "snd", "diag",
    "counit", "comult", "coder", "contraction", "weakening", "cocontraction", "coweakening",
    "seely", "mu", "mu0", "bang",
    "counit1", "comult1", "bang1", "seely1",
    "dereliction", "ident1", "kleisli", "linear", "curry_seq", "uncurry_seq",
})

KEYWORDS = frozenset({"space", "formula", "input", "let", "matrix", "seq", "seq1", "base", "dn", "up"})


class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.i = 0

    # -------------------------------------------------------------- helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "ident") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise DslError(f"expected {text!r}, found {self._describe()}", self.tok.pos)
        return self.advance()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "eof" else repr(self.tok.text)

    def name(self, what: str = "identifier") -> Token:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS or t.text in COMBINATORS:
            raise DslError(f"expected {what}, found {self._describe()}", t.pos)
        return self.advance()

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise DslError(f"expected an integer, found {self._describe()}", t.pos)
        self.advance()
        return int(t.text)

    def rational(self) -> Fraction:
        sign = -1 if self.at("-") and self.advance() else 1
        num = self.integer()
        den = 1
        if self.at("/"):
            pos = self.advance().pos
            den = self.integer()
            if den == 0:
                raise DslError("zero denominator", pos)
        return sign * Fraction(num, den)

    # ----------------------------------------------------------- statements

    def program(self) -> n.Program:
        stmts = []
        while self.tok.kind != "eof":
            stmts.append(self.statement())
        return n.Program(tuple(stmts))

    def statement(self):
        t = self.tok
        if self.at("space"):
            self.advance()
            name = self.name("a space name").text
            self.expect("=")
            node = n.SpaceDecl(name, self.space(), pos=t.pos)
        elif self.at("formula"):
            self.advance()
            name = self.name("a formula name").text
            self.expect("=")
            node = n.FormulaDecl(name, self.formula(), pos=t.pos)
        elif self.at("input"):
            self.advance()
            name = self.name("an input name").text
            self.expect(":")
            node = n.InputDecl(name, self.type_(), pos=t.pos)
        elif self.at("let"):
            self.advance()
            name = self.name("a name").text
            self.expect("=")
            node = n.LetDecl(name, self.expr(), pos=t.pos)
        else:
            raise DslError(f"expected 'space', 'formula', 'input' or 'let', found {self._describe()}", t.pos)
        self.expect(";")
        return node

    def type_(self):
        if self.at("seq") or self.at("seq1"):
            variant = self.advance().text
            self.expect("[")
            dom = self.space()
            self.expect(",")
            cod = self.space()
            self.expect(",")
            degree = self.integer()
            self.expect("]")
            return n.SeqType(variant, dom, cod, degree)
        dom = self.space()
        self.expect("->")
        return n.MapType(dom, self.space())

    # --------------------------------------------------------------- spaces

    def space(self):
        t = self.tok
        if self.at("base"):
            self.advance()
            return n.SpaceApp("base", (self.integer(),), pos=t.pos)
        if t.kind == "ident" and t.text in SPACE_KINDS:
            self.advance()
            self.expect("(")
            args = []
            for k, code in enumerate(SPACE_KINDS[t.text]):
                if k:
                    self.expect(",")
                args.append(self.space() if code == "S" else self.integer())
            if t.text == "ftensor" and self.at(","):
                self.advance()
                args.append(self.integer())
            self.expect(")")
            return n.SpaceApp(t.text, tuple(args), pos=t.pos)
        if t.kind == "ident" and t.text not in KEYWORDS:
            self.advance()
            return n.SpaceRef(t.text, pos=t.pos)
        raise DslError(f"expected a space, found {self._describe()}", t.pos)

    # ------------------------------------------------------------- formulas

    def formula(self):
        return self._binary(0)

    _LEVELS = (("|", n.Par), ("+", n.Plus), ("&", n.With), ("*", n.Tensor))

    def _binary(self, level: int):
        if level == len(self._LEVELS):
            return self._unary()
        op, cls = self._LEVELS[level]
        left = self._binary(level + 1)
        while self.at(op):
            pos = self.advance().pos
            left = cls(left, self._binary(level + 1), pos=pos)
        return left

    def _unary(self):
        t = self.tok
        if self.at("!") or self.at("?"):
            self.advance()
            self.expect("[")
            degree = self.integer()
            self.expect("]")
            cls = n.Bang if t.text == "!" else n.WhyNot
            return cls(self._unary(), degree, pos=t.pos)
        node = self._primary()
        while self.at("^"):
            node = n.Neg(node, pos=self.advance().pos)
        return node

    def _primary(self):
        t = self.tok
        if self.at("dn") or self.at("up"):
            self.advance()
            self.expect("(")
            inner = self.formula()
            self.expect(")")
            return (n.ShiftDown if t.text == "dn" else n.ShiftUp)(inner, pos=t.pos)
        if self.at("("):
            self.advance()
            inner = self.formula()
            self.expect(")")
            return inner
        return n.Atom(self.name("a formula").text, pos=t.pos)

    # ---------------------------------------------------------- expressions

    def expr(self):
        t = self.tok
        if self.at("matrix"):
            return self._matrix()
        if self.at("seq") or self.at("seq1"):
            return self._seq()
        if t.kind == "ident" and t.text in COMBINATORS:
            self.advance()
            params, args = (), ()
            if self.at("["):
                self.advance()
                params = self._list(self._param, "]")
            if self.at("("):
                self.advance()
                args = self._list(self.expr, ")")
            return n.Call(t.text, params, args, pos=t.pos)
        return n.Var(self.name("an expression").text, pos=t.pos)

    def _list(self, item, close: str) -> tuple:
        out = [item()]
        while self.at(","):
            self.advance()
            out.append(item())
        self.expect(close)
        return tuple(out)

    def _param(self):
        return self.integer() if self.tok.kind == "int" else self.space()

    def _matrix(self):
        pos = self.advance().pos
        self.expect("[")
        dom = self.space()
        self.expect(",")
        cod = self.space()
        self.expect("]")
        self.expect("{")
        rows = []
        if not self.at("}"):
            rows.append(self._row())
            while self.at(";"):
                self.advance()
                rows.append(self._row())
        self.expect("}")
        return n.MatrixLit(dom, cod, tuple(rows), pos=pos)

    def _row(self) -> tuple:
        out = [self.rational()]
        while self.at(","):
            self.advance()
            out.append(self.rational())
        return tuple(out)

    def _seq(self):
        t = self.advance()
        self.expect("[")
        dom = self.space()
        self.expect(",")
        cod = self.space()
        self.expect(",")
        degree = self.integer()
        self.expect("]")
        self.expect("{")
        polys = self._list(self._poly, "}")
        return n.SeqLit(t.text, dom, cod, degree, polys, pos=t.pos)

    def _poly(self) -> tuple:
        terms = [self._term()]
        while self.at("+") or self.at("-"):
            neg = self.advance().text == "-"
            term = self._term()
            terms.append(n.Term(-term.coeff, term.factors) if neg else term)
        return tuple(terms)

    def _term(self) -> n.Term:
        sign = -1 if self.at("-") and self.advance() else 1
        if self.tok.kind == "int":
            coeff = self.rational()
            if not self.at("*"):
                return n.Term(sign * coeff)
            self.advance()
        else:
            coeff = Fraction(1)
        factors = [self._factor()]
        while self.at("*"):
            self.advance()
            factors.append(self._factor())
        return n.Term(sign * coeff, tuple(factors))

    def _factor(self) -> tuple:
        t = self.tok
        if t.kind != "ident" or not (t.text[:1] == "x" and t.text[1:].isdigit()):
            raise DslError(f"expected a variable x0, x1, ..., found {self._describe()}", t.pos)
        self.advance()
        power = 1
        if self.at("^"):
            self.advance()
            power = self.integer()
        return int(t.text[1:]), power


def parse(source: str) -> n.Program:
    return Parser(source).program()


def parse_space(source: str):
    p = Parser(source)
    node = p.space()
    if p.tok.kind != "eof":
        raise DslError(f"unexpected {p._describe()} after the space", p.tok.pos)
    return node


def parse_formula(source: str):
    p = Parser(source)
    node = p.formula()
    if p.tok.kind != "eof":
        raise DslError(f"unexpected {p._describe()} after the formula", p.tok.pos)
    return node
