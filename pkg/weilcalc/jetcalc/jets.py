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

"""Normalized differentials D^alpha, simplicial jets and the identities between them."""

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, Iterator, Optional, Sequence, Tuple

from weilcalc.errors import ArityMismatch, ConsistencyError, NotAUnit
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polymap import eval_over, truncated_compose
from weilcalc.reports import EqualityReport, compare
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap, compose
from weilcalc.jetcalc.taylor import Vector, infer_ring, taylor
from weilcalc.weil.presentation import jet

logger = init_logger(__name__)


@dataclass(frozen=True)
class JetValue:
    """(w_0, ..., w_k), each a coarity vector."""

    order: int
    components: Tuple[Vector, ...]

    def __post_init__(self):
        if len(self.components) != self.order + 1:
            raise ConsistencyError("jet of order {} with {} components".format(self.order, len(self.components)))

    def fiber(self) -> Tuple[Vector, ...]:
        return self.components[1:]

    def to_json(self, ring) -> Dict[str, Any]:
        return {"order": self.order,
                "components": [[ring.format_scalar(c) for c in w] for w in self.components]}


def normalized_diff(f: ExprMap, x: Sequence[Any], vs: Sequence[Sequence[Any]], alpha: Sequence[int],
                    ring: Optional[CommutativeRing] = None, order: Optional[Sequence[int]] = None) -> Vector:
    """D^alpha_v f(x) = D^{alpha_k}_{v_k} o ... o D^{alpha_1}_{v_1} f(x).

    Every step adjoins a fresh jet variable delta_j with delta_j^(alpha_j + 1) = 0 on top of
    the previous coefficient ring; ``order`` lists the step indices from the innermost ring
    outwards, and the result does not depend on it.
    """
    if len(vs) != len(alpha):
        raise ArityMismatch("{} vectors for a multi-index of length {}".format(len(vs), len(alpha)))
    if order is not None and sorted(order) != list(range(len(alpha))):
        raise ArityMismatch("{} is not an ordering of {} steps".format(list(order), len(alpha)))
    ring = infer_ring(x, ring)
    steps = [j for j in (range(len(alpha)) if order is None else order) if alpha[j] > 0]

    levels = []
    current: CommutativeRing = ring
    for j in steps:
        current = jet(alpha[j], base=current)
        levels.append(current)
    top = current

    point = []
    for i, c in enumerate(x):
        total = top.coerce(ring.coerce(c))
        for j, level in zip(steps, levels):
            total = total + top.coerce(level.gen(0)) * top.coerce(ring.coerce(vs[j][i]))
        point.append(total)
    images = eval_expr(f, top, point)

    result = []
    for value in images:
        for j in reversed(steps):
            value = value.coeffs[alpha[j]]
        result.append(value)
    return tuple(result)


def classical_differential(f: ExprMap, x: Sequence[Any], vs: Sequence[Sequence[Any]],
                           ring: Optional[CommutativeRing] = None) -> Vector:
    """d^j f(x)(v_1, ..., v_j) as the iterated first differential D^(1,...,1)."""
    return normalized_diff(f, x, vs, [1] * len(vs), ring)


def factorial_check(f: ExprMap, x: Sequence[Any], v: Sequence[Any], j: int,
                    ring: Optional[CommutativeRing] = None) -> EqualityReport:
    """D^j_v f(x) against d^j f(x)(v, ..., v) / j!."""
    ring = infer_ring(x, ring)
    j_factorial = ring.coerce(factorial(j))
    if not ring.is_unit(j_factorial):
        raise NotAUnit("{}! is not invertible in {}".format(j, ring))
    lhs = normalized_diff(f, x, [v], [j], ring)
    d_j = classical_differential(f, x, [v] * j, ring)
    rhs = tuple(c * ring.inv(j_factorial) for c in d_j)
    return compare("factorial", lhs, rhs, j=j)


def simplicial_jet(f: ExprMap, vs: Sequence[Sequence[Any]], ring: Optional[CommutativeRing] = None) -> JetValue:
    """J^k f(v_0, ..., v_k): f over jet(k) at v_0 + delta v_1 + ... + delta^k v_k."""
    k = len(vs) - 1
    if k < 0:
        raise ArityMismatch("a jet needs at least the base vector v_0")
    ring = infer_ring(vs[0], ring)
    algebra = jet(k, base=ring)
    point = []
    for i in range(f.arity):
        point.append(algebra.element([ring.coerce(v[i]) for v in vs]))
    images = eval_expr(f, algebra, point)
    return JetValue(k, tuple(tuple(a.coeffs[ell] for a in images) for ell in range(k + 1)))


def jet_direction(f: ExprMap, x: Sequence[Any], v: Sequence[Any], k: int,
                  ring: Optional[CommutativeRing] = None) -> JetValue:
    """J^k f along (v, 0, ..., 0)."""
    ring = infer_ring(x, ring)
    zero = [ring.zero()] * len(x)
    return simplicial_jet(f, [x, v] + [zero] * (k - 1) if k >= 1 else [x], ring)


def jet_from_taylor(f: ExprMap, x: Sequence[Any], k: int, vs: Sequence[Sequence[Any]],
                    ring: Optional[CommutativeRing] = None) -> Tuple[Vector, ...]:
    """Fiber components of J^k_x f via the nilpotent extension of Tay^k_x f over jet(k)."""
    if len(vs) != k:
        raise ArityMismatch("{} vectors for a jet of order {}".format(len(vs), k))
    ring = infer_ring(x, ring)
    tay = taylor(f, x, k, ring)
    algebra = jet(k, base=ring)
    nu = [algebra.element([ring.zero()] + [ring.coerce(v[i]) for v in vs]) for i in range(f.arity)]
    images = eval_over(tay.poly, algebra, nu)
    fiber = tuple(tuple(a.coeffs[ell] for a in images) for ell in range(1, k + 1))
    direct = simplicial_jet(f, [x] + list(vs), ring).fiber()
    if fiber != direct:
        raise ConsistencyError("Taylor extension {} disagrees with the simplicial jet {}".format(fiber, direct))
    return fiber


def weighted_multi_indices(k: int, j: int) -> Iterator[Tuple[int, ...]]:
    """All alpha in N^k with sum_i i * alpha_i = j."""
    ranges = [range(j // i + 1) for i in range(1, k + 1)]
    for alpha in itertools.product(*ranges):
        if sum((i + 1) * a for i, a in enumerate(alpha)) == j:
            yield alpha


def taylor_eqn_rhs(f: ExprMap, x: Sequence[Any], vs: Sequence[Sequence[Any]], j: int,
                   ring: Optional[CommutativeRing] = None) -> Vector:
    """sum over alpha with sum_i i * alpha_i = j of D^alpha_v f(x); checked against J^k f."""
    k = len(vs)
    if not 0 <= j <= k:
        raise ArityMismatch("component {} of a jet of order {}".format(j, k))
    ring = infer_ring(x, ring)
    total = None
    for alpha in weighted_multi_indices(k, j):
        term = normalized_diff(f, x, vs, alpha, ring)
        total = term if total is None else tuple(a + b for a, b in zip(total, term))
    jet_value = simplicial_jet(f, [x] + list(vs), ring)
    if total != jet_value.components[j]:
        raise ConsistencyError("sum of D^alpha {} disagrees with jet component {}".format(
            total, jet_value.components[j]))
    return total


def taylor_chain(g: ExprMap, h: ExprMap, x: Sequence[Any], k: int,
                 ring: Optional[CommutativeRing] = None) -> EqualityReport:
    """Tay^k_x (g o h) against Tay^k_{h(x)} g composed with Tay^k_x h, truncated at k."""
    ring = infer_ring(x, ring)
    lhs = taylor(compose(g, h), x, k, ring).poly
    inner = taylor(h, x, k, ring)
    outer = taylor(g, inner.value, k, ring)
    rhs = truncated_compose(outer.poly, inner.poly, k)
    return compare("taylor-chain", lhs, rhs, k=k)
