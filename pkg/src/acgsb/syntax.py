"""Text form of words and polynomials.

Grammar::

    poly      := ['-'] term (('+' | '-') term)*  |  '0'
    term      := [coeff '*'] word
    coeff     := integer | integer '/' integer
    word      := generator | '(' word word ')'
    generator := 'x' positive-integer

Printing is canonical: terms in descending deg-lex order, unit coefficients
omitted, so ``parse_expression(format_polynomial(p)) == p``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial
from .words import Word, gen, node

__all__ = [
    "ParseError",
    "parse_expression",
    "parse_tree",
    "parse_word",
    "parse_relations",
    "format_polynomial",
    "format_coefficient",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(r"(?P<gen>x(?P<idx>\d+))|(?P<int>\d+)|(?P<op>[()+\-*/])")


def _tokenize(text: str, line: int):
    toks = []
    pos, n = 0, len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        col = pos + 1
        if m.group("gen"):
            i = int(m.group("idx"))
            if i < 1:
                raise ParseError("generator index must be positive", line, col)
            toks.append(("gen", i, col))
        elif m.group("int") is not None:
            toks.append(("int", int(m.group("int")), col))
        else:
            toks.append((m.group("op"), None, col))
        pos = m.end()
    toks.append(("end", None, n + 1))
    return toks


class _Parser:
    def __init__(self, text: str, line: int = 1):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.line, tok[2])

    def expect(self, kind):
        t = self.peek()
        if t[0] != kind:
            raise self.error(f"expected {kind!r}, found {self._show(t)}")
        return self.take()

    @staticmethod
    def _show(t):
        if t[0] == "end":
            return "end of input"
        if t[0] == "gen":
            return f"'x{t[1]}'"
        if t[0] == "int":
            return f"'{t[1]}'"
        return f"{t[0]!r}"

    def word(self) -> Word:
        t = self.peek()
        if t[0] == "gen":
            self.take()
            return gen(t[1])
        if t[0] == "(":
            self.take()
            items = []
            while self.peek()[0] in ("gen", "("):
                items.append(self.word())
            close = self.peek()
            if close[0] != ")":
                raise self.error(f"expected ')', found {self._show(close)}")
            if len(items) != 2:
                raise ParseError(
                    f"bracket must group exactly two words, got {len(items)}", self.line, t[2]
                )
            self.take()
            return node(items[0], items[1])
        raise self.error(f"expected a word, found {self._show(t)}")

    def coeff(self):
        t = self.expect("int")
        num = t[1]
        if self.peek()[0] == "/":
            self.take()
            d = self.expect("int")
            if d[1] == 0:
                raise self.error("zero denominator", d)
            return Fraction(num, d[1])
        return Fraction(num)

    def term(self, sign: int) -> Polynomial:
        c = Fraction(1)
        if self.peek()[0] == "int":
            c = self.coeff()
            self.expect("*")
        return Polynomial.from_tree(self.word(), sign * c)

    def poly(self) -> Polynomial:
        t = self.peek()
        if t[0] == "int" and t[1] == 0 and self.toks[self.i + 1][0] == "end":
            self.take()
            return Polynomial.zero()
        sign = 1
        if t[0] == "-":
            self.take()
            sign = -1
        elif t[0] == "+":
            self.take()
        acc = {}
        self._add(acc, self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            self._add(acc, self.term(sign))
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self._show(self.peek())}")
        return Polynomial(acc)

    @staticmethod
    def _add(acc, p):
        for w, c in p.terms():
            acc[w] = acc.get(w, 0) + c


def parse_expression(text: str, line: int = 1) -> Polynomial:
    """Parse a polynomial; words are normalized and signs folded in."""
    return _Parser(text, line).poly()


def parse_tree(text: str) -> Word:
    """Parse a single bracketed word without normalizing it."""
    p = _Parser(text)
    w = p.word()
    if p.peek()[0] != "end":
        raise p.error(f"unexpected {p._show(p.peek())}")
    return w


def parse_word(text: str) -> Word:
    """Parse a word that must already be normal."""
    w = parse_tree(text)
    if not w.is_normal:
        raise ParseError(f"{text.strip()} is not a normal word")
    return w


def parse_relations(text: str) -> list[Polynomial]:
    """One polynomial per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        out.append(parse_expression(body, lineno))
    return out


def format_coefficient(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    if isinstance(c, Fraction):
        return str(c.numerator)
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    from .poly import ModP

    parts = []
    for w, c in p.terms():
        if isinstance(c, ModP):
            neg, mag = False, c
        else:
            neg, mag = c < 0, abs(c)
        body = str(w) if mag == 1 else f"{format_coefficient(mag)}*{w}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"
