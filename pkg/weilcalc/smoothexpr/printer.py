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

from fractions import Fraction
from typing import Any, Union

from weilcalc.scalars.modint import ModInt
from weilcalc.smoothexpr.nodes import Const, Expr, ExprMap


def format_literal(value: Any) -> str:
    """Bare literal text, possibly with a leading '-'."""
    if isinstance(value, ModInt):
        return str(value.value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


class TextMapper:
    """Fully parenthesized printing; parse(to_text(f)) == f."""

    def __call__(self, expr: Expr) -> str:
        return expr.invoke_mapper(self)

    def map_const(self, expr):
        text = format_literal(expr.value)
        return "({})".format(text) if text.startswith("-") else text

    def map_var(self, expr):
        return "x{}".format(expr.index)

    def map_add(self, expr):
        return "({} + {})".format(self(expr.left), self(expr.right))

    def map_neg(self, expr):
        return "-({})".format(self(expr.child))

    def map_mul(self, expr):
        left = self(expr.left)
        if isinstance(expr.left, Const) and not left.startswith("("):
            left = "({})".format(left)
        return "({} * {})".format(left, self(expr.right))

    def map_scalar_mul(self, expr):
        return "({} * {})".format(format_literal(expr.scalar), self(expr.child))

    def map_int_pow(self, expr):
        return "({})^{}".format(self(expr.base), expr.exponent)

    def map_inv(self, expr):
        return "1/({})".format(self(expr.child))


def to_text(f: Union[ExprMap, Expr]) -> str:
    mapper = TextMapper()
    if isinstance(f, ExprMap):
        return ", ".join(mapper(out) for out in f.outputs)
    return mapper(f)
