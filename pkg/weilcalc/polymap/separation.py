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

"""Recovery of homogeneous parts from evaluations at scalar multiples of a point."""

from typing import Any, Callable, Dict, List, Sequence, Tuple

from weilcalc.constants import SEPARATION_CANDIDATES, UNIT_BACKTRACK_MODULUS_LIMIT
from weilcalc.errors import Exhausted, NoSeparatingScalars
from weilcalc.logging.logger import init_logger
from weilcalc.scalars.descriptor import RingDescriptor, sample_units

logger = init_logger(__name__)

Vector = Tuple[Any, ...]


def _candidate_scalars(ring: RingDescriptor, seed: int) -> List[Any]:
    if ring.is_finite and ring.modulus <= UNIT_BACKTRACK_MODULUS_LIMIT:
        return list(ring.units())
    try:
        return sample_units(ring, SEPARATION_CANDIDATES, seed)
    except Exhausted:
        return list(ring.units()) if ring.is_finite else [ring.coerce(2)]


def find_separating_scalar(ring: RingDescriptor, gap: int, seed: int = 0) -> Any:
    """A unit r with 1 - r^gap a unit, so that r^j - r^(j+gap) is invertible."""
    for r in _candidate_scalars(ring, seed):
        if ring.is_unit(ring.one() - r ** gap):
            return r
    raise NoSeparatingScalars("no unit r in {} makes 1 - r^{} a unit".format(ring, gap))


def separating_scalars(ring: RingDescriptor, k: int, seed: int = 0) -> List[Any]:
    """Scalars r_1..r_{k-1} with lambda = prod (r_j^j - r_j^k) a unit."""
    return [find_separating_scalar(ring, k - j, seed) for j in range(1, k)]


def _sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _scale(c: Any, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def separate_homogeneous_blackbox(evaluate: Callable[[Sequence[Any]], Sequence[Any]], k: int,
                                  x: Sequence[Any], ring: RingDescriptor, seed: int = 0) -> List[Vector]:
    """Values [P_0(x), ..., P_k(x)] of the homogeneous parts of a polynomial map of degree <= k.

    Only evaluations of the black box at scalar multiples c*x are used. The top part is
    isolated by the operators Q -> r^j Q(c) - Q(r c), which annihilate degree j, and then
    peeled off before recursing on the lower degrees.
    """
    x = [ring.coerce(v) for v in x]
    cache: Dict[Any, Vector] = {}

    def g(c: Any) -> Vector:
        if c not in cache:
            cache[c] = tuple(ring.coerce(v) for v in evaluate([c * v for v in x]))
        return cache[c]

    zero, one = ring.zero(), ring.one()
    constant = g(zero)
    parts: Dict[int, Vector] = {0: constant}
    peeled: Dict[int, Vector] = {}

    def residual(c: Any) -> Vector:
        value = _sub(g(c), constant)
        for degree, part in peeled.items():
            value = _sub(value, _scale(c ** degree, part))
        return value

    for top in range(k, 0, -1):
        scalars = separating_scalars(ring, top, seed)

        def annihilate(level: int, c: Any) -> Vector:
            if level == 0:
                return residual(c)
            r = scalars[level - 1]
            return _sub(_scale(r ** level, annihilate(level - 1, c)), annihilate(level - 1, r * c))

        lam = one
        for j, r in enumerate(scalars, start=1):
            lam = lam * (r ** j - r ** top)
        value = _scale(ring.inv(lam), annihilate(top - 1, one))
        parts[top] = value
        peeled[top] = value
        logger.debug("separated degree {} with scalars {}".format(top, [str(r) for r in scalars]))
    return [parts[d] for d in range(k + 1)]
