"""
Expression grammar for ``heckebraid mult``:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom
    atom   := INT | 'q' ['^' ['-'] INT] | BASIS '(' word ')' | '(' expr ')'
    BASIS  := 'T' | 'C' | 'Tinv'

Scalars are promoted to multiples of t_e when mixed with Hecke elements.
"""
from __future__ import annotations

import re

from .hecke import HeckeElement, KLTable, t_basis, t_inverse, unit
from .laurent import LaurentPolyQ
from .rootdata import CartanDatum
from .weyl import from_word, parse_word


class ExpressionError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<basis>Tinv|T|C)\s*\((?P<word>[^()]*)\)|(?P<int>[0-9]+)|(?P<q>q)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ExpressionError(f"unexpected token {text[start]!r} at position {start}")
        if m.group("basis") is not None:
            tokens.append(("basis", m.group("basis") + "|" + m.group("word"), m.start("basis")))
        else:
            kind = m.lastgroup
            tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, cartan: CartanDatum, table: KLTable):
        self.tokens = tokenize(text)
        self.i = 0
        self.cartan = cartan
        self.table = table

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, tok) -> ExpressionError:
        kind, val, pos = tok
        shown = "end of input" if kind == "end" else repr(val.split("|")[0] if kind == "basis" else val)
        return ExpressionError(f"unexpected {shown} at position {pos}")

    def parse(self):
        val = self.expr()
        if self.peek()[0] != "end":
            raise self.error(self.peek())
        return val

    def expr(self):
        val = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = _add(val, rhs, self.cartan) if op == "+" else _add(val, _neg(rhs), self.cartan)
        return val

    def term(self):
        val = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            val = _mul(val, self.factor())
        return val

    def factor(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return _neg(self.factor())
        return self.atom()

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return LaurentPolyQ.const(int(val))
        if kind == "q":
            if self.peek()[:2] != ("op", "^"):
                return LaurentPolyQ.monomial(1)
            self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            exp = self.take()
            if exp[0] != "int":
                raise self.error(exp)
            return LaurentPolyQ.monomial(sign * int(exp[1]))
        if kind == "basis":
            name, word = val.split("|", 1)
            try:
                w = from_word(self.cartan, parse_word(word))
            except (ValueError, IndexError) as exc:
                raise ExpressionError(f"bad word in {name}({word}) at position {pos}: {exc}") from None
            if name == "T":
                return t_basis(w)
            if name == "Tinv":
                return t_inverse(w)
            return self.table.basis_element(w)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.error(close)
            return inner
        raise self.error(tok)


def _promote(x, cartan: CartanDatum) -> HeckeElement:
    return x if isinstance(x, HeckeElement) else unit(cartan).scale(x)


def _add(a, b, cartan):
    if isinstance(a, LaurentPolyQ) and isinstance(b, LaurentPolyQ):
        return a + b
    return _promote(a, cartan) + _promote(b, cartan)


def _neg(a):
    return -a


def _mul(a, b):
    if isinstance(a, HeckeElement) and isinstance(b, HeckeElement):
        return a * b
    if isinstance(a, HeckeElement):
        return a.scale(b)
    if isinstance(b, HeckeElement):
        return b.scale(a)
    return a * b


def evaluate(text: str, cartan: CartanDatum, table: KLTable | None = None) -> HeckeElement:
    """
    >>> from heckebraid.rootdata import build_cartan
    >>> str(evaluate("T(1)*T(1)", build_cartan("A1")))
    '(q)*T[] + (-1 + q)*T[1]'
    """
    table = table if table is not None else KLTable(cartan)
    return _promote(_Parser(text, cartan, table).parse(), cartan)
