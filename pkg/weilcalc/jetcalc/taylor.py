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

"""Taylor polynomials and limited (radial) expansions of rational maps."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from weilcalc.errors import ConsistencyError, NotPolynomial
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polymap import PolyMap
from weilcalc.polymap.polynomial import Polynomial, PolynomialRing
from weilcalc.scalars.descriptor import RingDescriptor, ring_of
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap
from weilcalc.weil.presentation import truncated

logger = init_logger(__name__)

Vector = Tuple[Any, ...]


def infer_ring(point: Sequence[Any], ring: Optional[CommutativeRing] = None) -> CommutativeRing:
    if ring is not None:
        return ring
    if not point:
        return RingDescriptor.rationals()
    return ring_of(point[0])


@dataclass(frozen=True)
class TaylorPoly:
    """Tay^k_x f as a polynomial map in the displacement h, without constant term."""

    base_point: Vector
    order: int
    value: Vector
    poly: PolyMap

    def __post_init__(self):
        if self.poly.degree > self.order:
            raise ConsistencyError("Taylor polynomial of degree {} > order {}".format(self.poly.degree, self.order))
        for out in self.poly.outputs:
            if out.constant_term() != 0:
                raise ConsistencyError("Taylor polynomial with a constant term")

    def homogeneous_part(self, i: int) -> PolyMap:
        """D^i f(x) as a homogeneous polynomial map in h."""
        return self.poly.homogeneous_part(i)

    def evaluate(self, h: Sequence[Any]) -> Vector:
        return self.poly(h)

    def coefficients(self, i: int) -> List[Vector]:
        """Coefficients of the univariate part h^i for each output (one-variable maps)."""
        exps = (i,) + (0,) * (self.poly.arity - 1)
        return [out.coefficient(exps) for out in self.poly.outputs]

    def to_json(self) -> Dict[str, Any]:
        data = self.poly.to_json()
        data["base_point"] = [self.poly.ring.format_scalar(c) for c in self.base_point]
        data["value"] = [self.poly.ring.format_scalar(c) for c in self.value]
        data["order"] = self.order
        return data


def taylor(f: ExprMap, x: Sequence[Any], k: int, ring: Optional[CommutativeRing] = None) -> TaylorPoly:
    """Tay^k_x f, read off from f evaluated over W^k_m at x + sum X_i e_i."""
    ring = infer_ring(x, ring)
    x = tuple(ring.coerce(c) for c in x)
    algebra = truncated(f.arity, k, base=ring)
    point = [algebra.embed(c) + X for c, X in zip(x, algebra.gens())]
    images = eval_expr(f, algebra, point)
    source = PolynomialRing(ring, f.arity)
    value = tuple(algebra.project(a) for a in images)
    outputs = [algebra.to_polynomial(algebra.nilpotent_part(a), source) for a in images]
    logger.debug("taylor order {} at {} over {}".format(k, x, algebra.label))
    return TaylorPoly(x, k, value, PolyMap(ring, f.arity, outputs))


@dataclass(frozen=True)
class RadialExpansion:
    """f(x + t v) = f(x) + sum_{i<=k} a_i t^i + t^k R_k(t)."""

    value: Vector
    coefficients: Tuple[Vector, ...]
    remainder: Tuple[Polynomial, ...]

    def remainder_at_zero(self) -> Vector:
        return tuple(r.constant_term() for r in self.remainder)


def radial_expansion(f: ExprMap, x: Sequence[Any], v: Sequence[Any], k: int,
                     ring: Optional[CommutativeRing] = None) -> RadialExpansion:
    if not f.is_polynomial():
        raise NotPolynomial("radial expansion needs a polynomial map")
    ring = infer_ring(x, ring)
    t_ring = PolynomialRing(ring, 1)
    t = t_ring.gen(0)
    images = eval_expr(f, t_ring, [ring.coerce(a) + t * ring.coerce(b) for a, b in zip(x, v)])
    value = tuple(p.coefficient((0,)) for p in images)
    coefficients = tuple(tuple(p.coefficient((i,)) for p in images) for i in range(1, k + 1))
    remainder = tuple(Polynomial(t_ring, {(e - k,): c for (e,), c in p.terms.items() if e > k})
                      for p in images)
    expansion = RadialExpansion(value, coefficients, remainder)
    if any(c != 0 for c in expansion.remainder_at_zero()):
        raise ConsistencyError("remainder of the order-{} expansion does not vanish at t = 0".format(k))
    return expansion
