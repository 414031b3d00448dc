"""Polarities of LL_pol formulas and where a shift is needed.

    N ::= X^ | N | N | N & N | ?N | dn(P)
    P ::= X  | P * P | P + P | !P | up(N)

Negative connectives keep a space in its weak topology, so they never need a
shift. Among positives, ``*`` and ``!`` produce spaces that are not weak: the
model can only use them after a ``dn``. Binary ``+`` is a finite coproduct,
which coincides with the product and stays weak. Atoms stand for finite
dimensional spaces, which are always weak. ``up`` has no semantic content and
is the identity.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import nodes as n
from .lexer import DslError

NEGATIVE, POSITIVE = "negative", "positive"

_SHAPE = {
    n.Par: (NEGATIVE, NEGATIVE), n.With: (NEGATIVE, NEGATIVE), n.WhyNot: (NEGATIVE, NEGATIVE),
    n.ShiftDown: (NEGATIVE, POSITIVE),
    n.Tensor: (POSITIVE, POSITIVE), n.Plus: (POSITIVE, POSITIVE), n.Bang: (POSITIVE, POSITIVE),
    n.ShiftUp: (POSITIVE, NEGATIVE),
}


@dataclass(frozen=True)
class PolarityReport:
    polarity: str
    shifts: tuple  # paths of the subformulas that need a dn; "" is the root

    @property
    def requires_shift(self) -> bool:
        return bool(self.shifts)

    def to_json(self) -> dict:
        return {"polarity": self.polarity, "requires_shift": self.requires_shift,
                "shift_points": list(self.shifts)}


def _children(f) -> tuple:
    if isinstance(f, n.Atom):
        return ()
    if isinstance(f, (n.Neg, n.Bang, n.WhyNot, n.ShiftDown, n.ShiftUp)):
        return (f.a,)
    return (f.a, f.b)


def _name(f) -> str:
    return f"atom {f.name}" if isinstance(f, n.Atom) else type(f).__name__


def _join(path: str, k: int) -> str:
    return f"{path}.{k}" if path else str(k)


def _classify(f, path: str) -> tuple:
    """``(polarity, shift points)``; the points of a negative formula are all
    covered by its own ``dn`` nodes, so only positives report any."""
    if isinstance(f, n.Atom):
        return POSITIVE, []
    if isinstance(f, n.Neg):
        if not isinstance(f.a, n.Atom):
            raise DslError("negation applies to atoms only in LL_pol", f.pos)
        return NEGATIVE, []
    own, wanted = _SHAPE[type(f)]
    points: list = []
    for k, child in enumerate(_children(f)):
        got, sub = _classify(child, _join(path, k))
        if got != wanted:
            where = _join(path, k)
            raise DslError(
                f"{_name(f)} expects a {wanted} operand but {_name(child)} at {where} is "
                f"{got}; insert {'dn' if got == POSITIVE else 'up'}(...)", getattr(child, "pos", None))
        points.extend(sub)
    if own == NEGATIVE or isinstance(f, n.ShiftUp):
        return own, []
    if isinstance(f, (n.Tensor, n.Bang)):
        return own, [path]
    return own, points  # a binary coproduct is weak exactly when both sides are


def polarity(f) -> PolarityReport:
    """Classify ``f``. ``shifts`` lists the outermost positive subformulas
    (tensors and bangs) that must be put under a ``dn`` before the model can
    interpret ``f``; it is empty for negatives and for coproducts of atoms."""
    pol, points = _classify(f, "")
    return PolarityReport(pol, tuple(points))
