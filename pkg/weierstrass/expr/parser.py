# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Precedence-climbing parser for the expression language. See
documents/grammar.md for the grammar.
"""
import re
from dataclasses import dataclass
from typing import List

from weierstrass.errors import ExprSyntaxError, UnknownIdentifier
from weierstrass.expr.nodes import Expression, Constant, NamedConstant, Variable, Unary, Binary, \
    UnaryOp, BinaryOp, FUNCTIONS, NAMED_CONSTANTS, VARIABLE_NAME, PRECEDENCE, NEG_PRECEDENCE, \
    RIGHT_ASSOCIATIVE

_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_SYMBOLS = {op.value: op for op in BinaryOp}

_OPERAND_START = ("number", "identifier", "(", "-")
_OPERATORS = tuple(_SYMBOLS)
_END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        column = i + 1
        m = _NUMBER.match(text, i)
        if m:
            tokens.append(Token("number", m.group(0), column))
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if m:
            tokens.append(Token("identifier", m.group(0), column))
            i = m.end()
            continue
        if c in _SYMBOLS or c in "()":
            tokens.append(Token(c, c, column))
            i += 1
            continue
        raise ExprSyntaxError("Unexpected character", column, _OPERAND_START + _OPERATORS, c)
    tokens.append(Token(_END, "", len(text) + 1))
    return tokens


class _Parser:

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0
        self.depth = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, expected) -> ExprSyntaxError:
        token = self.peek()
        return ExprSyntaxError(message, token.column, expected, token.text or _END)

    def expect(self, kind: str, expected) -> Token:
        if self.peek().kind != kind:
            raise self.error(f"Expected {kind!r}", expected)
        return self.advance()

    def after_operand(self):
        """Tokens that may legally follow a complete operand here"""
        return _OPERATORS + ((")",) if self.depth > 0 else (_END,))

    def expression(self, min_prec: int) -> Expression:
        lhs = self.operand()
        while self.peek().kind in _SYMBOLS:
            op = _SYMBOLS[self.peek().kind]
            prec = PRECEDENCE[op]
            if prec < min_prec:
                break
            self.advance()
            rhs = self.expression(prec if op in RIGHT_ASSOCIATIVE else prec + 1)
            lhs = Binary(op, lhs, rhs)
        return lhs

    def operand(self) -> Expression:
        token = self.peek()
        if token.kind == "number":
            self.advance()
            return Constant(float(token.text))
        if token.kind == "-":
            self.advance()
            return Unary(UnaryOp.NEG, self.expression(NEG_PRECEDENCE))
        if token.kind == "(":
            self.advance()
            inner = self.parenthesised()
            return inner
        if token.kind == "identifier":
            return self.identifier()
        raise self.error("Expected an operand", _OPERAND_START)

    def parenthesised(self) -> Expression:
        self.depth += 1
        inner = self.expression(0)
        self.expect(")", self.after_operand())
        self.depth -= 1
        return inner

    def identifier(self) -> Expression:
        token = self.advance()
        name = token.text
        if name == VARIABLE_NAME:
            return Variable()
        if name in NAMED_CONSTANTS:
            return NamedConstant(name)
        if name in FUNCTIONS:
            self.expect("(", ("(",))
            return Unary(FUNCTIONS[name], self.parenthesised())
        raise UnknownIdentifier(name, token.column)


def parse(text: str) -> Expression:
    """
    Parse the text of a function of x.

    :raises ExprSyntaxError: with a 1-based column and the set of expected tokens.
    :raises UnknownIdentifier: for a name that is neither x, a constant nor a function.
    """
    if not text or not text.strip():
        raise ExprSyntaxError("Empty expression", 1, _OPERAND_START, _END)
    if not text.isascii():
        column = next(i for i, c in enumerate(text) if not c.isascii()) + 1
        raise ExprSyntaxError("Non-ASCII character", column, _OPERAND_START + _OPERATORS, text[column - 1])

    parser = _Parser(tokenize(text))
    expr = parser.expression(0)
    if parser.peek().kind != _END:
        raise parser.error("Unexpected token", parser.after_operand())
    return expr
