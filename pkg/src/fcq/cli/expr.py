"""A small recursive-descent parser for algebra expressions.

Grammar (``^`` binds tighter than unary minus, which binds tighter than ``*``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" exponent)?
    exponent := ["-" | "+"] INT | "(" ["-" | "+"] INT ")"
    atom   := INT | NAME | NAME "(" expr ("," expr)* ")" | "(" expr ")"

``**`` is accepted as a synonym for ``^``.  The parser produces a tuple AST;
:func:`evaluate` folds it against a namespace of names and functions.
"""

from __future__ import annotations

import re
from typing import Any, Callable, Mapping


class ParseError(ValueError):
    pass


class EvalError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^(),]))")


def tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("int", num))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, kind: str | None = None, value: str | None = None) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == value

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*"):
            self.take()
            node = ("mul", node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            self.take()
            return ("neg", self.unary())
        if self.at("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            self.take()
            node = ("pow", node, self.exponent())
            if self.at("^"):
                raise ParseError("chained exponents need parentheses")
        return node

    def exponent(self) -> int:
        paren = self.at("(")
        if paren:
            self.take()
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.take()[1] == "-" else 1
        tok = self.peek()
        if tok is None or tok[0] != "int":
            raise ParseError("exponent must be an integer")
        self.take()
        if paren:
            self.take("op", ")")
        return sign * int(tok[1])

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if tok[0] == "int":
            self.take()
            return ("int", int(tok[1]))
        if tok[0] == "name":
            self.take()
            if self.at("("):
                self.take()
                args = [self.expr()]
                while self.at(","):
                    self.take()
                    args.append(self.expr())
                self.take("op", ")")
                return ("call", tok[1], tuple(args))
            return ("name", tok[1])
        if self.at("("):
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        raise ParseError(f"unexpected token {tok[1]!r}")


def parse(text: str):
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    p = _Parser(tokens)
    node = p.expr()
    if p.peek() is not None:
        raise ParseError(f"unexpected token {p.peek()[1]!r}")
    return node


def int_value(node) -> int:
    """Fold an integer-only subtree (for arguments like e(-2) or f(1+1))."""
    kind = node[0]
    if kind == "int":
        return node[1]
    if kind == "neg":
        return -int_value(node[1])
    if kind in ("add", "sub", "mul"):
        a, b = int_value(node[1]), int_value(node[2])
        return a + b if kind == "add" else a - b if kind == "sub" else a * b
    if kind == "pow" and node[2] >= 0:
        return int_value(node[1]) ** node[2]
    raise EvalError("expected an integer")


def evaluate(node, names: Mapping[str, Any], functions: Mapping[str, Callable] | None = None) -> Any:
    """Evaluate an AST; integers stay Python ints until they meet an algebra element."""
    functions = functions or {}
    kind = node[0]
    if kind == "int":
        return node[1]
    if kind == "name":
        if node[1] not in names:
            raise EvalError(f"unknown name {node[1]!r}; known: {', '.join(sorted(names))}")
        return names[node[1]]
    if kind == "call":
        fn = functions.get(node[1])
        if fn is None:
            raise EvalError(f"unknown function {node[1]!r}; known: {', '.join(sorted(functions)) or 'none'}")
        return fn(*node[2])
    if kind == "neg":
        return -evaluate(node[1], names, functions)
    if kind == "pow":
        base = evaluate(node[1], names, functions)
        if isinstance(base, int) and node[2] < 0:
            raise EvalError("negative power of an integer")
        return base ** node[2]
    a = evaluate(node[1], names, functions)
    b = evaluate(node[2], names, functions)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    return a * b
