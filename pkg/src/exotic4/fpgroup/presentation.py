"""Finite presentations and the ``<g1, g2 | w1, w2>`` text grammar.

Grammar (whitespace is ignored)::

    presentation := '<' [name {',' name}] '|' [word {',' word}] '>'
    word         := factor {'*' factor}
    factor       := atom ['^' integer]
    atom         := name | '1' | '(' word ')' | '[' word ',' word ']'

``[x, y]`` is the commutator ``x*y*x^-1*y^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .words import (
    IDENTITY,
    AlphabetError,
    Word,
    commutator,
    cyclic_reduce,
    format_word,
    invert,
    power,
)

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<int>-?\d+)|(?P<op>[<>|,*^\[\]()]))"
)


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Presentation:
    """Generators plus cyclically reduced relators.

    Identity relators are dropped on construction; order and repeats of
    the remaining relators are kept.
    """

    generators: tuple
    relators: tuple = ()
    label: str = field(default="", compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        for g in gens:
            if not NAME_RE.match(g):
                raise ValueError(f"invalid generator name {g!r}")
        allowed = set(gens)
        rels = []
        for r in self.relators:
            if isinstance(r, str):
                r = parse_word(r)
            extra = r.generators() - allowed
            if extra:
                raise AlphabetError(f"relator {format_word(r)} uses undeclared {sorted(extra)}")
            r = cyclic_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        return self.generators.index(name)

    def with_relators(self, extra: Iterable[Word], label: str | None = None) -> "Presentation":
        return Presentation(
            self.generators,
            self.relators + tuple(extra),
            self.label if label is None else label,
        )

    def encode(self) -> list[list[int]]:
        """Relators as lists of nonzero ints: generator ``i`` is ``i+1``, its inverse ``-(i+1)``."""
        idx = {g: i + 1 for i, g in enumerate(self.generators)}
        return [[idx[g] * s for g, s in r.letters] for r in self.relators]

    def encode_word(self, w: Word) -> list[int]:
        idx = {g: i + 1 for i, g in enumerate(self.generators)}
        try:
            return [idx[g] * s for g, s in w.letters]
        except KeyError as exc:
            raise AlphabetError(f"generator {exc.args[0]!r} not in presentation") from None

    def decode_word(self, code: Sequence[int]) -> Word:
        return Word(tuple((self.generators[abs(c) - 1], 1 if c > 0 else -1) for c in code))

    def __str__(self) -> str:
        return format_presentation(self)


def relator_key(w: Word) -> tuple:
    """Canonical key of a relator up to cyclic rotation and inversion."""
    w = cyclic_reduce(w)
    best = None
    for cand in (w.letters, invert(w).letters):
        for i in range(max(len(cand), 1)):
            rot = cand[i:] + cand[:i]
            if best is None or rot < best:
                best = rot
    return best or ()


def relator_multiset(P: Presentation) -> dict:
    out: dict = {}
    for r in P.relators:
        key = relator_key(r)
        out[key] = out.get(key, 0) + 1
    return out


def same_relator_set(P: Presentation, Q: Presentation) -> bool:
    """Relator sets agree up to rotation, inversion, order and repeats."""
    return set(P.generators) == set(Q.generators) and set(relator_multiset(P)) == set(
        relator_multiset(Q)
    )


def format_presentation(P: Presentation) -> str:
    gens = ", ".join(P.generators)
    rels = ", ".join(format_word(r) for r in P.relators)
    return f"<{gens} | {rels}>"


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, value) -> bool:
        return self.peek() == ("op", value)

    def done(self) -> bool:
        return self.i == len(self.tokens)

    def word(self) -> Word:
        parts = [self.factor()]
        while self.at("*"):
            self.take("*")
            parts.append(self.factor())
        return Word.product(parts)

    def factor(self) -> Word:
        base = self.atom()
        if self.at("^"):
            self.take("^")
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"expected integer exponent, found {val!r}")
            base = power(base, int(val))
        return base

    def atom(self) -> Word:
        kind, val = self.peek()
        if kind == "name":
            self.take()
            return Word.gen(val)
        if kind == "int" and val == "1":
            self.take()
            return IDENTITY
        if self.at("("):
            self.take("(")
            w = self.word()
            self.take(")")
            return w
        if self.at("["):
            self.take("[")
            x = self.word()
            self.take(",")
            y = self.word()
            self.take("]")
            return commutator(x, y)
        raise ParseError(f"unexpected token {val!r}")


def parse_word(text: str) -> Word:
    p = _Parser(text)
    if p.done():
        raise ParseError("empty word text; use '1' for the identity")
    w = p.word()
    if not p.done():
        raise ParseError(f"trailing input after word: {p.peek()[1]!r}")
    return w


def parse_presentation(text: str, label: str = "") -> Presentation:
    p = _Parser(text)
    p.take("<")
    gens = []
    if not p.at("|"):
        gens.append(p.take()[1])
        while p.at(","):
            p.take(",")
            gens.append(p.take()[1])
    p.take("|")
    rels = []
    if not p.at(">"):
        rels.append(p.word())
        while p.at(","):
            p.take(",")
            rels.append(p.word())
    p.take(">")
    if not p.done():
        raise ParseError("trailing input after presentation")
    return Presentation(tuple(gens), tuple(rels), label)
