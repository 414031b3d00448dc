"""A small combinator language for spaces, formulas and morphisms of the model."""
from .evaluate import evaluate
from .lexer import DslError
from .parser import parse, parse_formula, parse_space
from .polarity import polarity
from .pretty import pretty, pretty_formula
from .typecheck import Checked, MapType, SeqType, typecheck

__all__ = ["DslError", "parse", "parse_space", "parse_formula", "pretty", "pretty_formula",
           "typecheck", "evaluate", "polarity", "Checked", "MapType", "SeqType"]
