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

"""Exact simplicial limited expansions of polynomial maps in formal times s_1, ..., s_k."""

from typing import Any, List, Sequence, Tuple

from weilcalc.errors import ArityMismatch, NotPolynomial
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polynomial import Polynomial, PolynomialRing
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap

logger = init_logger(__name__)

SymbolicComponent = Tuple[Polynomial, ...]


def symbolic_simplicial(f: ExprMap, vs: Sequence[Sequence[Any]], ring: CommutativeRing) -> List[SymbolicComponent]:
    """f^<1>, ..., f^<k> at v_0, ..., v_k as polynomials in s_1, ..., s_k (s_0 = 0).

    Component j solves the Newton identity
        f(node_j) = f(v_0) + sum_{i<=j} prod_{l<i} (s_j - s_l) f^<i>
    and is obtained from it by exact division by s_j - s_l for l = 0, ..., j-1.
    """
    if not f.is_polynomial():
        raise NotPolynomial("the symbolic expansion needs a polynomial map")
    k = len(vs) - 1
    if k < 0:
        raise ArityMismatch("the expansion needs at least the base vector v_0")
    formal = PolynomialRing(ring, k)
    zero = formal.zero()

    def s(i: int) -> Polynomial:
        return zero if i == 0 else formal.gen(i - 1)

    vectors = [[formal.coerce(ring.coerce(c)) for c in v] for v in vs]
    base_value = eval_expr(f, formal, vectors[0])
    components: List[SymbolicComponent] = []
    for j in range(1, k + 1):
        node = list(vectors[0])
        weight = formal.one()
        for i in range(1, j + 1):
            weight = weight * (s(j) - s(i - 1))
            node = [a + weight * b for a, b in zip(node, vectors[i])]
        residual = [a - b for a, b in zip(eval_expr(f, formal, node), base_value)]
        weight = formal.one()
        for i in range(1, j):
            weight = weight * (s(j) - s(i - 1))
            residual = [r - weight * c for r, c in zip(residual, components[i - 1])]
        for ell in range(j):
            # raises DivisionNotExact on a nonzero remainder
            residual = [formal.divide(r, s(j) - s(ell)) for r in residual]
        components.append(tuple(residual))
    logger.debug("symbolic expansion of order {} over {}".format(k, ring))
    return components


def evaluate_symbolic(components: Sequence[SymbolicComponent], s: Sequence[Any],
                      ring: CommutativeRing) -> List[Tuple[Any, ...]]:
    """Specialize the formal times to s = (s_1, ..., s_k)."""
    values = [ring.coerce(c) for c in s]
    return [tuple(p.evaluate(values, ring) for p in component) for component in components]
