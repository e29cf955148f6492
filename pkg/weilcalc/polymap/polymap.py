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

from typing import Any, Dict, List, Sequence, Tuple

from weilcalc.errors import AlgebraMismatch, ArityMismatch, RingMismatch
from weilcalc.polymap.polynomial import Exponents, Polynomial, PolynomialRing
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.scalars.ring import CommutativeRing


class PolyMap:
    """Polynomial map K^arity -> K^coarity, one sparse polynomial per output coordinate."""

    def __init__(self, ring: RingDescriptor, arity: int, outputs: Sequence[Polynomial]):
        self.ring = ring
        self.arity = arity
        self.source = PolynomialRing(ring, arity)
        for poly in outputs:
            if poly.parent != self.source:
                raise RingMismatch("output {} does not live in {}".format(poly, self.source))
        self.outputs: Tuple[Polynomial, ...] = tuple(outputs)

    @classmethod
    def from_terms(cls, ring: RingDescriptor, arity: int, coarity: int,
                   terms: Sequence[Tuple[int, Sequence[int], Any]]) -> "PolyMap":
        source = PolynomialRing(ring, arity)
        stores: List[Dict[Exponents, Any]] = [{} for _ in range(coarity)]
        for out, exps, coef in terms:
            if len(exps) != arity:
                raise ArityMismatch("exponent vector {} has length != {}".format(exps, arity))
            exps = tuple(exps)
            coef = ring.coerce(coef)
            store = stores[out]
            store[exps] = store[exps] + coef if exps in store else coef
        return cls(ring, arity, [Polynomial(source, store) for store in stores])

    @classmethod
    def identity(cls, ring: RingDescriptor, arity: int) -> "PolyMap":
        source = PolynomialRing(ring, arity)
        return cls(ring, arity, source.gens())

    @classmethod
    def zero(cls, ring: RingDescriptor, arity: int, coarity: int) -> "PolyMap":
        source = PolynomialRing(ring, arity)
        return cls(ring, arity, [source.zero() for _ in range(coarity)])

    @property
    def coarity(self) -> int:
        return len(self.outputs)

    @property
    def degree(self) -> int:
        return max((p.degree() for p in self.outputs), default=-1)

    def is_zero(self) -> bool:
        return not any(self.outputs)

    def _check_shape(self, other: "PolyMap"):
        if self.ring != other.ring or self.arity != other.arity or self.coarity != other.coarity:
            raise ArityMismatch("polynomial maps of different shapes")

    def __add__(self, other: "PolyMap") -> "PolyMap":
        self._check_shape(other)
        return PolyMap(self.ring, self.arity, [a + b for a, b in zip(self.outputs, other.outputs)])

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        self._check_shape(other)
        return PolyMap(self.ring, self.arity, [a - b for a, b in zip(self.outputs, other.outputs)])

    def __mul__(self, other: "PolyMap") -> "PolyMap":
        """Coordinatewise product."""
        self._check_shape(other)
        return PolyMap(self.ring, self.arity, [a * b for a, b in zip(self.outputs, other.outputs)])

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.ring == other.ring and self.arity == other.arity and self.outputs == other.outputs

    def __hash__(self):
        return hash((self.ring, self.arity, self.outputs))

    def __repr__(self):
        return "PolyMap({}, arity={}, [{}])".format(self.ring, self.arity,
                                                    ", ".join(repr(p) for p in self.outputs))

    def terms(self) -> List[Tuple[int, Exponents, Any]]:
        """All (output, exponents, coefficient) triples in deterministic order."""
        return [(out, exps, c) for out, poly in enumerate(self.outputs) for exps, c in poly.sorted_terms()]

    def num_terms(self) -> int:
        return sum(len(p.terms) for p in self.outputs)

    def without_term(self, index: int) -> "PolyMap":
        out, exps, _ = self.terms()[index]
        outputs = list(self.outputs)
        outputs[out] = Polynomial(self.source, {e: c for e, c in outputs[out].terms.items() if e != exps})
        return PolyMap(self.ring, self.arity, outputs)

    def truncate(self, k: int) -> "PolyMap":
        return PolyMap(self.ring, self.arity, [p.truncate(k) for p in self.outputs])

    def homogeneous_part(self, d: int) -> "PolyMap":
        return PolyMap(self.ring, self.arity, [p.homogeneous_part(d) for p in self.outputs])

    def __call__(self, point: Sequence[Any]) -> Tuple[Any, ...]:
        return eval_over(self, self.ring, point)

    def to_json(self) -> Dict[str, Any]:
        return {
            "arity": self.arity,
            "coarity": self.coarity,
            "terms": [{"out": out, "exps": list(exps), "coef": self.ring.format_scalar(c)}
                      for out, exps, c in self.terms()],
        }

    @classmethod
    def from_json(cls, ring: RingDescriptor, data: Dict[str, Any]) -> "PolyMap":
        return cls.from_terms(ring, data["arity"], data["coarity"],
                              [(t["out"], t["exps"], ring.parse_scalar(t["coef"])) for t in data["terms"]])


def eval_over(P: PolyMap, A: CommutativeRing, z: Sequence[Any]) -> Tuple[Any, ...]:
    """Scalar extension of P to the commutative K-algebra A, evaluated at z in A^arity."""
    if len(z) != P.arity:
        raise ArityMismatch("{} arguments for a map of arity {}".format(len(z), P.arity))
    try:
        values = [A.coerce(v) for v in z]
    except RingMismatch as e:
        raise AlgebraMismatch(str(e)) from e
    return tuple(poly.evaluate(values, A) for poly in P.outputs)


def homogeneous_parts(P: PolyMap) -> List[PolyMap]:
    """The nonzero homogeneous parts of P, by increasing degree."""
    parts = [P.homogeneous_part(d) for d in range(P.degree + 1)]
    return [part for part in parts if not part.is_zero()]


def multihomogeneous_component(P: PolyMap, alpha: Sequence[int],
                               points: Sequence[Sequence[Any]]) -> Tuple[Any, ...]:
    """Component of P(v_1 + ... + v_n) of multidegree alpha in the n points."""
    if len(alpha) != len(points):
        raise ArityMismatch("multi-index of length {} for {} points".format(len(alpha), len(points)))
    for v in points:
        if len(v) != P.arity:
            raise ArityMismatch("point of length {} for a map of arity {}".format(len(v), P.arity))
    markers = PolynomialRing(P.ring, len(points))
    taus = markers.gens()
    argument = []
    for coord in range(P.arity):
        total = markers.zero()
        for tau, v in zip(taus, points):
            total = total + tau * P.ring.coerce(v[coord])
        argument.append(total)
    expanded = eval_over(P, markers, argument)
    return tuple(poly.coefficient(alpha) for poly in expanded)


def compose(Q: PolyMap, P: PolyMap) -> PolyMap:
    """Plain composition Q o P."""
    if Q.arity != P.coarity:
        raise ArityMismatch("cannot compose arity {} after coarity {}".format(Q.arity, P.coarity))
    return PolyMap(P.ring, P.arity, list(eval_over(Q, P.source, P.outputs)))


def truncated_compose(Q: PolyMap, P: PolyMap, k: int) -> PolyMap:
    """Q o P with every monomial of total degree > k discarded.

    Evaluates Q over the truncated polynomial algebra W^k_m, so intermediate products
    never grow past degree k.
    """
    # weil.presentation imports this package at module level
    from weilcalc.weil.presentation import truncated

    if Q.arity != P.coarity:
        raise ArityMismatch("cannot compose arity {} after coarity {}".format(Q.arity, P.coarity))
    if Q.ring != P.ring:
        raise RingMismatch("cannot compose maps over {} and {}".format(Q.ring, P.ring))
    algebra = truncated(P.arity, k, base=P.ring)
    arguments = [algebra.from_polynomial(poly) for poly in P.outputs]
    results = eval_over(Q, algebra, arguments)
    return PolyMap(P.ring, P.arity, [algebra.to_polynomial(r, P.source) for r in results])

