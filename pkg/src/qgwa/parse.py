"""Tokenizer and recursive-descent parser for scalar and element expressions.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | power
    power := atom ('^' exponent)?
    exponent := ['-'] INT | '(' ['-'] INT ')'
    atom  := INT | NAME | '(' expr ')'

Parsing yields a small tuple AST; :func:`evaluate` folds it with Python
operators over whatever values the name table supplies, so the same grammar
serves scalars (names p q l u) and algebra elements (x y s t w z as well).
"""

from __future__ import annotations

import re
from typing import Callable, List, Mapping, NamedTuple


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, token: str):
        self.line = line
        self.col = col
        self.token = token
        super().__init__(f"{message} at line {line}, column {col}: {token!r}")


class Token(NamedTuple):
    kind: str  # INT NAME OP END
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            j = pos
            while j < n and text[j].isspace():
                j += 1
            line, col = _linecol(text, j)
            raise ParseError("unexpected character", line, col, text[j])
        start = m.start(m.lastindex)
        line, col = _linecol(text, start)
        if m.group(1):
            out.append(Token("INT", m.group(1), line, col))
        elif m.group(2):
            out.append(Token("NAME", m.group(2), line, col))
        else:
            op = m.group(3)
            out.append(Token("OP", "^" if op == "**" else op, line, col))
        pos = m.end()
    line, col = _linecol(text, n)
    out.append(Token("END", "", line, col))
    return out


def _linecol(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Token):
        raise ParseError(msg, tok.line, tok.col, tok.text or "<end of input>")

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.kind != "OP" or t.text != text:
            self.error(f"expected {text!r}", t)
        return t

    def parse(self):
        if self.peek().kind == "END":
            self.error("empty expression", self.peek())
        node = self.expr()
        t = self.peek()
        if t.kind != "END":
            self.error("unexpected token", t)
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            t = self.next()
            node = ("add" if t.text == "+" else "sub", node, self.term(), t)
        return node

    def term(self):
        node = self.unary()
        while self.peek().kind == "OP" and self.peek().text in "*/":
            t = self.next()
            node = ("mul" if t.text == "*" else "div", node, self.unary(), t)
        return node

    def unary(self):
        t = self.peek()
        if t.kind == "OP" and t.text in "+-":
            self.next()
            inner = self.unary()
            return ("neg", inner, t) if t.text == "-" else inner
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            t = self.next()
            node = ("pow", node, self.exponent(), t)
        return node

    def exponent(self) -> int:
        t = self.peek()
        paren = t.kind == "OP" and t.text == "("
        if paren:
            self.next()
        sign = 1
        t = self.peek()
        if t.kind == "OP" and t.text in "+-":
            self.next()
            sign = -1 if t.text == "-" else 1
        t = self.next()
        if t.kind != "INT":
            self.error("exponent must be an integer", t)
        if paren:
            self.expect(")")
        return sign * int(t.text)

    def atom(self):
        t = self.next()
        if t.kind == "INT":
            return ("int", int(t.text), t)
        if t.kind == "NAME":
            return ("name", t.text, t)
        if t.kind == "OP" and t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        self.error("unexpected token", t)


def parse(text: str):
    """Parse ``text`` into an AST (raises :class:`ParseError`)."""
    return _Parser(text).parse()


def evaluate(node, names: Mapping[str, object], lit: Callable[[int], object],
             power: Callable[[object, int, Token], object] = None):
    """Fold an AST with Python operators.

    ``names`` maps identifiers to values, ``lit`` turns integer literals into
    values.  ``power`` may override exponentiation (used to reject negative
    powers of non-units with a positioned error).
    """
    kind = node[0]
    if kind == "int":
        return lit(node[1])
    if kind == "name":
        name, tok = node[1], node[2]
        if name not in names:
            raise ParseError("unknown name", tok.line, tok.col, name)
        return names[name]
    if kind == "neg":
        return -evaluate(node[1], names, lit, power)
    if kind == "pow":
        base = evaluate(node[1], names, lit, power)
        if power is not None:
            return power(base, node[2], node[3])
        return base ** node[2]
    a = evaluate(node[1], names, lit, power)
    b = evaluate(node[2], names, lit, power)
    tok = node[3]
    try:
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        if kind == "div":
            return a / b
    except ZeroDivisionError:
        raise ParseError("division by zero", tok.line, tok.col, tok.text)
    except TypeError as exc:
        raise ParseError(str(exc), tok.line, tok.col, tok.text)
    raise AssertionError(kind)


def parse_scalar(text: str):
    """Parse a scalar over Q(p, q, l, u); ``l`` is lambda and ``u`` is mu."""
    from .scalars import ParamScalar

    names = {n: ParamScalar.symbol(n) for n in ("p", "q", "l", "u")}
    node = parse(text)
    value = evaluate(node, names, lambda k: ParamScalar(k))
    if not isinstance(value, ParamScalar):
        raise TypeError(f"{text!r} is not a scalar")
    return value
