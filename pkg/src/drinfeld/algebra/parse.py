"""Parse polynomial text such as ``T^2+T+2`` or ``(T^2+1)^2`` over F_q.

Grammar: sums of products of powers; factors are integers, the variable,
or parenthesised expressions; juxtaposition means multiplication
(``2T``, ``T(T+1)``).  Integer coefficients are reduced mod p.
"""

import re

from .field import field
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\*\*|[-+*^()]))")


class ParseError(ValueError):
    pass


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, q, var):
        self.toks = _tokens(text)
        self.i = 0
        self.F = field(q)
        self.var = var
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial text")
        val = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        sign = 1
        kind, v = self.peek()
        if kind == "op" and v in "+-":
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, v = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, v = self.peek()
            if kind == "op" and v == "*":
                self.take()
                acc = acc * self.power()
            elif kind in ("num", "var") or (kind == "op" and v == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, v = self.peek()
        if kind == "op" and v == "^":
            self.take()
            k, e = self.take()
            if k != "num":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base**e
        return base

    def atom(self):
        kind, v = self.take()
        if kind == "num":
            return Poly.const(self.F, self.F(v))
        if kind == "var":
            if v != self.var:
                raise ParseError(f"unknown variable {v!r} (expected {self.var})")
            return Poly.gen(self.F)
        if kind == "op" and v == "(":
            val = self.expr()
            k, w = self.take()
            if (k, w) != ("op", ")"):
                raise ParseError(f"missing ')' in {self.text!r}")
            return val
        if kind == "op" and v == "-":
            return -self.power()
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def parse_poly(text, q, var="T"):
    """Polynomial in F_q[var] from its text form."""
    return _Parser(text, q, var).parse()
