"""Reader for ideal documents.

Grammar (whitespace insignificant, ``#`` starts a comment line)::

    document   := ring_decl ideal_decl
    ring_decl  := "ring" name+ ";"
    ideal_decl := "ideal" "=" poly (";" poly)* [";"]
    poly       := ["-"] term (("+" | "-") term)*
    term       := factor ("*" factor)*
    factor     := base ["^" nat]
    base       := rational | name | "(" poly ")"
    rational   := nat ["/" nat_nonzero]

Comment lines of the form ``# key: value`` are kept as metadata.
Multiplication is always explicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, ReservedNameError, UnknownVariableError
from .groebner import Ideal
from .poly import Ring

KEYWORDS = ("ring", "ideal")
_RESERVED_RE = re.compile(r"(lambda\d*|u\d+)\Z")

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<name>@?[A-Za-z][A-Za-z0-9_]*)
  | (?P<nat>[0-9]+)
  | (?P<sym>[;=+\-*^/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "nat", "sym", "eof"
    text: str
    line: int
    column: int

    def describe(self):
        if self.kind == "eof":
            return "end of input"
        return repr(self.text)


@dataclass(frozen=True)
class IdealDocument:
    ring: Ring
    polynomials: tuple
    metadata: dict = field(default_factory=dict)

    def ideal(self):
        return Ideal(self.ring, self.polynomials)


def reserved_name(name):
    return name.startswith("@") or bool(_RESERVED_RE.match(name)) or name in KEYWORDS


def tokenize(text):
    tokens = []
    metadata = {}
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line += 1
            col = 1
        else:
            if kind == "comment":
                body = s[1:].strip()
                if ":" in body:
                    key, value = body.split(":", 1)
                    if re.fullmatch(r"[A-Za-z][\w-]*", key.strip()):
                        metadata[key.strip()] = value.strip()
            elif kind != "ws":
                tokens.append(Token(kind, s, line, col))
            col += len(s)
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens, metadata


class _Parser:
    def __init__(self, tokens, ring=None):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.index = {}

    @property
    def tok(self):
        return self.toks[self.i]

    def fail(self, expected, message=None):
        t = self.tok
        raise ParseError(message or f"unexpected {t.describe()}", t.line, t.column, expected)

    def at(self, text):
        t = self.tok
        return t.kind in ("sym", "name") and t.text == text

    def expect(self, text):
        if not self.at(text):
            self.fail([repr(text)])
        t = self.tok
        self.i += 1
        return t

    def document(self):
        self.ring_decl()
        polys = self.ideal_decl()
        if self.tok.kind != "eof":
            self.fail(["end of input"])
        return polys

    def ring_decl(self):
        self.expect("ring")
        names = []
        while self.tok.kind == "name":
            t = self.tok
            if reserved_name(t.text):
                raise ReservedNameError(f"variable name {t.text!r} is reserved", t.line, t.column)
            if t.text in names:
                raise ParseError(f"duplicate variable {t.text!r}", t.line, t.column)
            names.append(t.text)
            self.i += 1
        if not names:
            self.fail(["variable name"])
        self.expect(";")
        self.ring = Ring(names)
        self.index = {n: i for i, n in enumerate(names)}

    def ideal_decl(self):
        self.expect("ideal")
        self.expect("=")
        polys = [self.poly()]
        while self.at(";"):
            self.i += 1
            if self.tok.kind == "eof":
                break
            polys.append(self.poly())
        return polys

    def poly(self):
        negate = False
        if self.at("-"):
            negate = True
            self.i += 1
        acc = self.term()
        if negate:
            acc = -acc
        while self.at("+") or self.at("-"):
            op = self.tok
            self.i += 1
            if not self._starts_factor():
                raise ParseError(
                    f"{op.text!r} is missing its right operand, found {self.tok.describe()}",
                    op.line, op.column, self.FACTOR_START,
                )
            t = self.term()
            acc = acc + t if op.text == "+" else acc - t
        return acc

    FACTOR_START = ("'('", "natural number", "variable name")

    def _starts_factor(self):
        t = self.tok
        return t.kind == "nat" or (t.kind == "name" and t.text not in KEYWORDS) or self.at("(")

    def term(self):
        acc = self.factor()
        while self.at("*"):
            op = self.tok
            self.i += 1
            if not self._starts_factor():
                raise ParseError(
                    f"'*' is missing its right operand, found {self.tok.describe()}",
                    op.line, op.column, self.FACTOR_START,
                )
            acc = acc * self.factor()
        return acc

    def factor(self):
        b = self.base()
        if self.at("^"):
            self.i += 1
            if self.tok.kind != "nat":
                self.fail(["natural number"])
            k = int(self.tok.text)
            self.i += 1
            b = b**k
        return b

    def base(self):
        t = self.tok
        if t.kind == "nat":
            self.i += 1
            value = Fraction(int(t.text))
            if self.at("/"):
                self.i += 1
                d = self.tok
                if d.kind != "nat":
                    self.fail(["natural number"])
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.line, d.column, ["nonzero natural number"])
                self.i += 1
                value /= int(d.text)
            return self.ring.const(value)
        if t.kind == "name" and t.text not in KEYWORDS:
            if t.text not in self.index:
                if t.text.startswith("@"):
                    raise ReservedNameError(f"name {t.text!r} is reserved", t.line, t.column)
                raise UnknownVariableError(f"unknown variable {t.text!r}", t.line, t.column)
            self.i += 1
            return self.ring.var(self.index[t.text])
        if self.at("("):
            self.i += 1
            p = self.poly()
            self.expect(")")
            return p
        self.fail(self.FACTOR_START)


def parse_ideal(text):
    """Parse an ideal document into an :class:`IdealDocument`."""
    tokens, metadata = tokenize(text)
    p = _Parser(tokens)
    polys = p.document()
    return IdealDocument(p.ring, tuple(polys), metadata)


def parse_polynomial(text, ring):
    """Parse a single polynomial over an existing ring."""
    tokens, _ = tokenize(text)
    p = _Parser(tokens, ring)
    p.index = {n: i for i, n in enumerate(ring.variables)}
    poly = p.poly()
    if p.tok.kind != "eof":
        p.fail(["'+'", "'-'", "'*'", "'^'", "end of input"])
    return poly
