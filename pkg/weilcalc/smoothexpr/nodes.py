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

"""Rational expression IR: polynomials closed under inversion, one tree per output."""

from dataclasses import dataclass
from typing import Any, ClassVar, Dict, Optional, Sequence, Tuple

from weilcalc.errors import ArityMismatch


class Expr:
    mapper_method: ClassVar[str]

    def invoke_mapper(self, mapper, *args):
        return getattr(mapper, self.mapper_method)(self, *args)

    def children(self) -> Tuple["Expr", ...]:
        return ()


@dataclass(frozen=True)
class Const(Expr):
    value: Any
    mapper_method: ClassVar[str] = "map_const"


@dataclass(frozen=True)
class Var(Expr):
    index: int
    mapper_method: ClassVar[str] = "map_var"


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr
    mapper_method: ClassVar[str] = "map_add"

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class Neg(Expr):
    child: Expr
    mapper_method: ClassVar[str] = "map_neg"

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr
    mapper_method: ClassVar[str] = "map_mul"

    def children(self):
        return self.left, self.right


@dataclass(frozen=True)
class ScalarMul(Expr):
    scalar: Any
    child: Expr
    mapper_method: ClassVar[str] = "map_scalar_mul"

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class IntPow(Expr):
    base: Expr
    exponent: int
    mapper_method: ClassVar[str] = "map_int_pow"

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("IntPow needs a non-negative exponent, got {}".format(self.exponent))

    def children(self):
        return (self.base,)


@dataclass(frozen=True)
class Inv(Expr):
    child: Expr
    mapper_method: ClassVar[str] = "map_inv"

    def children(self):
        return (self.child,)


def iter_nodes(expr: Expr):
    """Pre-order walk, each shared subtree visited once."""
    seen = set()
    stack = [expr]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        stack.extend(reversed(node.children()))


def max_var_index(expr: Expr) -> int:
    return max((node.index for node in iter_nodes(expr) if isinstance(node, Var)), default=-1)


class _Substitution:
    def __init__(self, replacements: Sequence[Expr]):
        self.replacements = replacements
        self.cache: Dict[int, Expr] = {}

    def __call__(self, expr: Expr) -> Expr:
        key = id(expr)
        if key not in self.cache:
            self.cache[key] = expr.invoke_mapper(self)
        return self.cache[key]

    def map_const(self, expr):
        return expr

    def map_var(self, expr):
        return self.replacements[expr.index]

    def map_add(self, expr):
        return Add(self(expr.left), self(expr.right))

    def map_neg(self, expr):
        return Neg(self(expr.child))

    def map_mul(self, expr):
        return Mul(self(expr.left), self(expr.right))

    def map_scalar_mul(self, expr):
        return ScalarMul(expr.scalar, self(expr.child))

    def map_int_pow(self, expr):
        return IntPow(self(expr.base), expr.exponent)

    def map_inv(self, expr):
        return Inv(self(expr.child))


@dataclass(frozen=True)
class ExprMap:
    """Rational map K^arity -> K^coarity."""

    arity: int
    outputs: Tuple[Expr, ...]

    def __post_init__(self):
        for out in self.outputs:
            top = max_var_index(out)
            if top >= self.arity:
                raise ArityMismatch("variable x{} in a map of arity {}".format(top, self.arity))

    @classmethod
    def of(cls, outputs: Sequence[Expr], arity: Optional[int] = None) -> "ExprMap":
        if arity is None:
            arity = max((max_var_index(out) for out in outputs), default=-1) + 1
        return cls(arity, tuple(outputs))

    @property
    def coarity(self) -> int:
        return len(self.outputs)

    def is_polynomial(self) -> bool:
        return not any(isinstance(node, Inv) for out in self.outputs for node in iter_nodes(out))

    def __str__(self):
        # printer imports this module
        from weilcalc.smoothexpr.printer import to_text
        return to_text(self)


def compose(g: ExprMap, f: ExprMap) -> ExprMap:
    """g o f: substitute the outputs of f for the variables of g."""
    if g.arity != f.coarity:
        raise ArityMismatch("cannot compose arity {} after coarity {}".format(g.arity, f.coarity))
    substitute = _Substitution(f.outputs)
    return ExprMap(f.arity, tuple(substitute(out) for out in g.outputs))


def product(f: ExprMap, g: ExprMap) -> ExprMap:
    """Tupling x -> (f(x), g(x))."""
    if f.arity != g.arity:
        raise ArityMismatch("cannot tuple maps of arity {} and {}".format(f.arity, g.arity))
    return ExprMap(f.arity, f.outputs + g.outputs)


def from_polymap(P) -> ExprMap:
    """ExprMap with the same monomials as the polynomial map P."""
    outputs = []
    for poly in P.outputs:
        expr: Optional[Expr] = None
        for exps, c in poly.sorted_terms():
            factors = [Var(i) if e == 1 else IntPow(Var(i), e) for i, e in enumerate(exps) if e > 0]
            if not factors:
                term: Expr = Const(c)
            else:
                term = factors[0]
                for factor in factors[1:]:
                    term = Mul(term, factor)
                if c != 1:
                    term = ScalarMul(c, term)
            expr = term if expr is None else Add(expr, term)
        outputs.append(expr if expr is not None else Const(P.ring.zero()))
    return ExprMap(P.arity, tuple(outputs))
