"""Syntax trees. Positions are carried along but ignored by equality."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _pos():
    return field(default=None, compare=False, repr=False)


# ------------------------------------------------------------------ spaces

@dataclass(frozen=True)
class SpaceRef:
    name: str
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class SpaceApp:
    """``base 2``, ``tensor(S, T)``, ``bang(S, 3)`` ...; ``args`` mixes spaces and ints."""
    kind: str
    args: tuple
    pos: tuple | None = _pos()


# ---------------------------------------------------------------- formulas

@dataclass(frozen=True)
class Atom:
    name: str
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Neg:
    a: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Tensor:
    a: object
    b: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Par:
    a: object
    b: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class With:
    a: object
    b: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Plus:
    a: object
    b: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Bang:
    a: object
    degree: int
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class WhyNot:
    a: object
    degree: int
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class ShiftDown:
    a: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class ShiftUp:
    a: object
    pos: tuple | None = _pos()


BINARY = {Tensor: "*", Par: "|", With: "&", Plus: "+"}
FORMULA_TYPES = (Atom, Neg, Tensor, Par, With, Plus, Bang, WhyNot, ShiftDown, ShiftUp)


# ------------------------------------------------------------- morphisms

@dataclass(frozen=True)
class Var:
    name: str
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Call:
    """``name[params](args)``; params are spaces or ints, args are expressions."""
    name: str
    params: tuple = ()
    args: tuple = ()
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class MatrixLit:
    dom: object
    cod: object
    rows: tuple  # of tuples of Fraction
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Term:
    """``coeff * x_i^k * ...``; ``factors`` is a tuple of ``(variable, power)``."""
    coeff: Fraction
    factors: tuple = ()


@dataclass(frozen=True)
class SeqLit:
    """One polynomial (a tuple of terms) per codomain coordinate."""
    variant: str  # "seq" or "seq1"
    dom: object
    cod: object
    degree: int
    polys: tuple
    pos: tuple | None = _pos()


# --------------------------------------------------------------- statements

@dataclass(frozen=True)
class MapType:
    dom: object
    cod: object


@dataclass(frozen=True)
class SeqType:
    variant: str
    dom: object
    cod: object
    degree: int


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    space: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class FormulaDecl:
    name: str
    formula: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class InputDecl:
    name: str
    type: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class LetDecl:
    name: str
    expr: object
    pos: tuple | None = _pos()


@dataclass(frozen=True)
class Program:
    statements: tuple = ()
