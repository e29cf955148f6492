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

"""Cubic and simplicial difference quotients.

The scalar ring is generic. Over K, every divisor must be a unit (SingularTime
otherwise). Over a polynomial ring of formal times the quotients are exact polynomial
divisions, which gives their extension to singular times.
"""

from typing import Any, Sequence

from weilcalc.diffcalc.points import (CubicPoint, SimplicialPoint, Vector, cubic_point, simplicial_nodes)
from weilcalc.errors import SingularTime
from weilcalc.polymap.polynomial import PolynomialRing
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap


def divide_by_time(ring: CommutativeRing, a: Any, t: Any) -> Any:
    if ring.is_unit(t):
        return a * ring.inv(t)
    if isinstance(ring, PolynomialRing) and t:
        return ring.divide(a, t)
    raise SingularTime("time {} is not invertible".format(t))


def cubic_dq(f: ExprMap, x: Sequence[Any], v: Sequence[Any], t: Any, ring: CommutativeRing) -> Vector:
    """f^]1[(x, v, t) = (f(x + t v) - f(x)) / t."""
    t = ring.coerce(t)
    x = [ring.coerce(c) for c in x]
    moved = [c + t * ring.coerce(d) for c, d in zip(x, v)]
    return tuple(divide_by_time(ring, a - b, t)
                 for a, b in zip(eval_expr(f, ring, moved), eval_expr(f, ring, x)))


def extended_tangent(f: ExprMap, p: CubicPoint, ring: CommutativeRing) -> CubicPoint:
    """T^]k[ f(p): every lower quotient assembled into a cubic point; times pass through.

    T^]k[ f (X, U, t) = (F(X), (F(X + t U) - F(X)) / t, t) with F = T^]k-1[ f.
    """
    if p.order == 0:
        return CubicPoint(0, (tuple(eval_expr(f, ring, p.space[0])),), p.time)
    X, U, t = p.split()
    at_x = extended_tangent(f, X, ring)
    at_shifted = extended_tangent(f, X.shifted(t, U), ring)
    quotient = CubicPoint(
        X.order,
        tuple(tuple(divide_by_time(ring, a - b, t) for a, b in zip(va, vb))
              for va, vb in zip(at_shifted.space, at_x.space)),
        U.time)
    return CubicPoint.join(at_x, quotient, t)


def cubic_difference(f: ExprMap, p: CubicPoint, ring: CommutativeRing) -> Vector:
    """f^]k[(p): the top space component of T^]k[ f(p)."""
    return extended_tangent(f, p, ring).space[-1]


def simplicial_dq(f: ExprMap, p: SimplicialPoint, ring: CommutativeRing) -> Vector:
    """f^>k<(v; s) = sum_i f(node_i) / prod_{j != i} (s_i - s_j)."""
    zero = ring.zero()
    total = None
    for i, node in enumerate(simplicial_nodes(p, ring)):
        denominator = ring.one()
        for j in range(p.order + 1):
            if j != i:
                denominator = denominator * (p.s(i, zero) - p.s(j, zero))
        term = tuple(divide_by_time(ring, a, denominator) for a in eval_expr(f, ring, node))
        total = term if total is None else tuple(a + b for a, b in zip(total, term))
    return total


def extended_jet(f: ExprMap, p: SimplicialPoint, ring: CommutativeRing) -> SimplicialPoint:
    """J^>k< f(p) = (f^>0<, f^>1<, ..., f^>k<; s)."""
    components = []
    for j in range(p.order + 1):
        sub = SimplicialPoint(p.vectors[:j + 1], p.times[:j])
        components.append(simplicial_dq(f, sub, ring))
    return SimplicialPoint(tuple(components), p.times)


def second_differential(f: ExprMap, x: Sequence[Any], u: Sequence[Any], v: Sequence[Any],
                        ring: CommutativeRing) -> Vector:
    """d^2 f(x)(u, v): f^]2[ at (x, u, v, 0; t_1, t_2, 0) with formal times, then t = 0."""
    formal = PolynomialRing(ring, 2)
    t1, t2 = formal.gens()
    zero = [ring.zero()] * len(x)
    p = cubic_point([x, u, v, zero], [0, t1, t2, 0], formal)
    return tuple(c.constant_term() for c in cubic_difference(f, p, formal))
