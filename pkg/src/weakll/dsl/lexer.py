"""Tokenizer. ``#`` starts a comment that runs to the end of the line."""
from __future__ import annotations

import re
from dataclasses import dataclass


class DslError(ValueError):
    """An error tied to a source position (1-based line and column)."""

    def __init__(self, message: str, pos: tuple | None = None):
        self.message = message
        self.pos = pos
        super().__init__(f"{pos[0]}:{pos[1]}: {message}" if pos else message)


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "int", "op" or "eof"
    text: str
    pos: tuple


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>[0-9]+)
  | (?P<op>->|[;=(){}\[\],:*+\-/|&!?^])
""", re.VERBOSE)


def tokenize(source: str) -> list:
    tokens = []
    line, line_start, i = 1, 0, 0
    while i < len(source):
        m = _TOKEN.match(source, i)
        if not m:
            raise DslError(f"unexpected character {source[i]!r}", (line, i - line_start + 1))
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), (line, i - line_start + 1)))
        i = m.end()
    tokens.append(Token("eof", "", (line, i - line_start + 1)))
    return tokens
