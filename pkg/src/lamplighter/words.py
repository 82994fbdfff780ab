"""Generator tokens and the textual word grammar.

A word is a whitespace-separated list of tokens such as ``a``, ``t^-4``,
``l[2]``, ``g[1,0,1]^-1``.  Indexed letters carry integer arguments in
brackets; every letter takes an optional integer exponent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError

__all__ = ["Token", "parse_word", "format_word", "invert_word", "power_word", "LETTER_ARITY"]

# letter name -> number of bracketed integer arguments
LETTER_ARITY = {
    "a": 0,
    "t": 0,
    "s": 0,
    "mu": 0,
    "nu": 0,
    "c": 0,
    "d": 0,
    "l": 1,
    "m": 1,
    "n": 1,
    "g": (2, 3),
}


@dataclass(frozen=True, order=True)
class Token:
    name: str
    args: tuple = ()
    power: int = 1

    def inverse(self) -> "Token":
        return Token(self.name, self.args, -self.power)

    def with_power(self, p: int) -> "Token":
        return Token(self.name, self.args, p)

    def base(self) -> "Token":
        return Token(self.name, self.args, 1)

    def __str__(self):
        s = self.name
        if self.args:
            s += "[" + ",".join(str(v) for v in self.args) + "]"
        if self.power != 1:
            s += f"^{self.power}"
        return s


_TOKEN_RE = re.compile(
    r"(?P<name>[A-Za-z]+)"
    r"(?:\[(?P<args>\s*[+-]?\d+\s*(?:,\s*[+-]?\d+\s*)*)\])?"
    r"(?:\^(?P<pow>[+-]?\d+))?"
)


def parse_word(text: str) -> tuple:
    """Parse a word into a tuple of tokens.  The empty string is the empty word."""
    out = []
    pos = 0
    size = len(text)
    while pos < size:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError("expected a generator letter", text, pos)
        name = m.group("name")
        if name not in LETTER_ARITY:
            raise ParseError(f"unknown letter {name!r}", text, pos)
        args = tuple(int(v) for v in m.group("args").split(",")) if m.group("args") else ()
        end = m.end()
        if end < size and not text[end].isspace():
            if text[end] == "^":
                raise ParseError("expected an integer exponent after '^'", text, end)
            if text[end] == "[":
                raise ParseError("malformed index list", text, end)
            raise ParseError("expected whitespace between tokens", text, end)
        arity = LETTER_ARITY[name]
        allowed = arity if isinstance(arity, tuple) else (arity,)
        if len(args) not in allowed:
            want = " or ".join(str(k) for k in allowed)
            raise ParseError(f"letter {name!r} takes {want} index argument(s)", text, pos)
        power = int(m.group("pow")) if m.group("pow") else 1
        out.append(Token(name, args, power))
        pos = end
    return tuple(out)


def format_word(word: Iterable[Token]) -> str:
    return " ".join(str(t) for t in word)


def invert_word(word: Iterable[Token]) -> tuple:
    return tuple(t.inverse() for t in reversed(tuple(word)))


def power_word(word: Iterable[Token], k: int) -> tuple:
    word = tuple(word)
    if k < 0:
        word, k = invert_word(word), -k
    return word * k
