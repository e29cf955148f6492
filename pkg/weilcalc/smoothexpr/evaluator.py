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
from typing import Any, Dict, Sequence, Tuple

from weilcalc.errors import AlgebraMismatch, ArityMismatch, DomainError, NotPolynomial, RingMismatch
from weilcalc.polymap.polymap import PolyMap
from weilcalc.polymap.polynomial import PolynomialRing
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.nodes import Expr, ExprMap


def lift_scalar(ring: CommutativeRing, c: Any, node: Any = None) -> Any:
    """Constant c in ring; p/q literals become p * q^-1."""
    if isinstance(c, Fraction) and c.denominator != 1:
        denominator = ring.coerce(c.denominator)
        if not ring.is_unit(denominator):
            raise DomainError(node if node is not None else c, c)
        return ring.coerce(c.numerator) * ring.inv(denominator)
    return ring.coerce(c)


class EvaluationMapper:
    """Homomorphic evaluation over a commutative ring; shared subtrees are computed once."""

    def __init__(self, ring: CommutativeRing, values: Sequence[Any]):
        self.ring = ring
        self.values = values
        self.cache: Dict[int, Any] = {}

    def __call__(self, expr: Expr) -> Any:
        key = id(expr)
        if key not in self.cache:
            self.cache[key] = expr.invoke_mapper(self)
        return self.cache[key]

    def map_const(self, expr):
        return lift_scalar(self.ring, expr.value, expr)

    def map_var(self, expr):
        return self.values[expr.index]

    def map_add(self, expr):
        return self(expr.left) + self(expr.right)

    def map_neg(self, expr):
        return -self(expr.child)

    def map_mul(self, expr):
        return self(expr.left) * self(expr.right)

    def map_scalar_mul(self, expr):
        return lift_scalar(self.ring, expr.scalar, expr) * self(expr.child)

    def map_int_pow(self, expr):
        if expr.exponent == 0:
            return self.ring.one()
        return self(expr.base) ** expr.exponent

    def map_inv(self, expr):
        value = self(expr.child)
        if not self.ring.is_unit(value):
            raise DomainError(expr, value)
        return self.ring.inv(value)


def eval_expr(f: ExprMap, A: CommutativeRing, z: Sequence[Any]) -> Tuple[Any, ...]:
    """f over the commutative K-algebra A at z in A^arity."""
    if len(z) != f.arity:
        raise ArityMismatch("{} arguments for a map of arity {}".format(len(z), f.arity))
    try:
        values = [A.coerce(v) for v in z]
    except RingMismatch as e:
        raise AlgebraMismatch(str(e)) from e
    mapper = EvaluationMapper(A, values)
    return tuple(mapper(out) for out in f.outputs)


def to_polymap(f: ExprMap, ring: RingDescriptor) -> PolyMap:
    """Expand a polynomial ExprMap into coefficient form."""
    if not f.is_polynomial():
        raise NotPolynomial("expression contains an inversion")
    source = PolynomialRing(ring, f.arity)
    return PolyMap(ring, f.arity, list(eval_expr(f, source, source.gens())))
