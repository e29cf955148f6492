# Copyright (c) 2024, Alibaba Group;
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

# http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Recursive-descent parser for rational expressions.

    outputs := expr (',' expr)*
    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | base ('^' nat)?
    base    := rational | 'x' nat | '(' expr ')' | '1' '/' base

A rational literal is digits with an optional '/digits' suffix and is read greedily, so
"1/2" is one literal while "1/x0" and "1/(...)" are reciprocals. a/b means a * (1/b).
A '-' directly in front of a literal makes a negative literal. A literal standing bare
on the left of '*' becomes a scalar multiplication.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from weilcalc.errors import ExprSyntaxError
from weilcalc.smoothexpr.nodes import Add, Const, Expr, ExprMap, Inv, IntPow, Mul, Neg, ScalarMul, Var

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*/^(),]))")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprSyntaxError("unexpected character '{}'".format(text[start]), start)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def _literal(text: str, position: int) -> Fraction:
    if "/" in text:
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise ExprSyntaxError("zero denominator in literal '{}'".format(text), position)
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(text))


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def at_op(self, op: str) -> bool:
        return self.current.kind == "op" and self.current.text == op

    def expect_op(self, op: str):
        if not self.at_op(op):
            raise ExprSyntaxError("expected '{}'".format(op), self.current.position)
        self.advance()

    def outputs(self) -> List[Expr]:
        outputs = [self.expr()]
        while self.at_op(","):
            self.advance()
            outputs.append(self.expr())
        if self.current.kind != "end":
            raise ExprSyntaxError("unexpected '{}'".format(self.current.text), self.current.position)
        return outputs

    def expr(self) -> Expr:
        node, _ = self.term()
        while self.at_op("+") or self.at_op("-"):
            op = self.advance().text
            right, _ = self.term()
            node = Add(node, right if op == "+" else Neg(right))
        return node

    def term(self) -> Tuple[Expr, bool]:
        node, bare = self.factor()
        while self.at_op("*") or self.at_op("/"):
            op = self.advance().text
            right, _ = self.factor()
            if op == "/":
                node = Mul(node, Inv(right))
            elif bare:
                node = ScalarMul(node.value, right)
            else:
                node = Mul(node, right)
            bare = False
        return node, bare

    def factor(self) -> Tuple[Expr, bool]:
        """Returns the node and whether it is a bare literal."""
        if self.at_op("-"):
            self.advance()
            if self.current.kind == "number" and not self._reciprocal_ahead():
                token = self.advance()
                value = _literal(token.text, token.position)
                if self.at_op("^"):
                    return Neg(self._power(Const(value))), False
                return Const(-value), True
            node, _ = self.factor()
            return Neg(node), False
        node, bare = self.base()
        if self.at_op("^"):
            return self._power(node), False
        return node, bare

    def _reciprocal_ahead(self) -> bool:
        following = self.peek()
        return self.current.text == "1" and following.kind == "op" and following.text == "/"

    def _power(self, node: Expr) -> Expr:
        self.expect_op("^")
        token = self.current
        if token.kind != "number" or "/" in token.text:
            raise ExprSyntaxError("expected a natural exponent", token.position)
        self.advance()
        return IntPow(node, int(token.text))

    def base(self) -> Tuple[Expr, bool]:
        token = self.current
        if token.kind == "number":
            if self._reciprocal_ahead():
                self.advance()
                self.advance()
                node, _ = self.base()
                return Inv(node), False
            self.advance()
            return Const(_literal(token.text, token.position)), True
        if token.kind == "var":
            self.advance()
            return Var(int(token.text[1:])), False
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node, False
        if token.kind == "end":
            raise ExprSyntaxError("unexpected end of input", token.position)
        raise ExprSyntaxError("unexpected '{}'".format(token.text), token.position)


def parse(text: str, arity: Optional[int] = None) -> ExprMap:
    """Parse comma-separated output expressions; arity defaults to 1 + the largest variable index."""
    return ExprMap.of(_Parser(text).outputs(), arity)
