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

"""The affine, K^x-equivariant imbedding g_k of simplicial into cubic extended domains."""

from typing import Any, List, Optional, Sequence, Tuple

from weilcalc.constants import EMBEDDING_SIGN_TABLE
from weilcalc.diffcalc.points import CubicPoint, SimplicialPoint, Vector
from weilcalc.diffcalc.quotients import extended_jet, extended_tangent
from weilcalc.errors import ConsistencyError, NotInImage
from weilcalc.logging.logger import init_logger
from weilcalc.reports import EqualityReport, compare
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.nodes import ExprMap

logger = init_logger(__name__)


def _chain_mask(i: int) -> int:
    """Bitmask of {1, ..., i}."""
    return (1 << i) - 1


def _pair_mask(i: int) -> int:
    """Bitmask of {i, i+1}."""
    return (1 << (i - 1)) | (1 << i)


def g_embed(p: SimplicialPoint, ring: CommutativeRing) -> CubicPoint:
    """u_{1..i} = v_i, t_{i,i+1} = 1, t_{i} = s_i - s_{i-1}; every other coordinate is 0."""
    k = p.order
    zero = ring.zero()
    zero_vector = tuple(zero for _ in p.vectors[0])
    space: List[Vector] = [zero_vector] * (1 << k)
    time: List[Any] = [zero] * (1 << k)
    for i, v in enumerate(p.vectors):
        space[_chain_mask(i)] = v
    for i in range(1, k + 1):
        time[1 << (i - 1)] = p.s(i, zero) - p.s(i - 1, zero)
    for i in range(1, k):
        time[_pair_mask(i)] = ring.one()
    return CubicPoint(k, tuple(space), tuple(time))


def g_unembed(q: CubicPoint, ring: CommutativeRing) -> SimplicialPoint:
    """Inverse of g_embed on its image; s_i = t_{1} + ... + t_{i}."""
    k = q.order
    chains = {_chain_mask(i) for i in range(k + 1)}
    singletons = {1 << (i - 1) for i in range(1, k + 1)}
    pairs = {_pair_mask(i) for i in range(1, k)}
    for mask in range(1 << k):
        if mask not in chains and any(c != 0 for c in q.space[mask]):
            raise NotInImage("space coordinate at mask {} is nonzero".format(mask))
        if mask in pairs:
            if q.time[mask] != 1:
                raise NotInImage("time coordinate at mask {} is not 1".format(mask))
        elif mask not in singletons and q.time[mask] != 0:
            raise NotInImage("time coordinate at mask {} is nonzero".format(mask))
    times = []
    s = ring.zero()
    for i in range(1, k + 1):
        s = s + q.time[1 << (i - 1)]
        times.append(s)
    return SimplicialPoint(tuple(q.space[_chain_mask(i)] for i in range(k + 1)), tuple(times))


def apply_signs(q: CubicPoint, signs: Sequence[int]) -> CubicPoint:
    return CubicPoint(q.order, tuple(v if sign == 1 else tuple(-c for c in v) for sign, v in zip(signs, q.space)),
                      q.time)


def _embedding_sides(f: ExprMap, p: SimplicialPoint, ring: CommutativeRing) -> Tuple[CubicPoint, CubicPoint]:
    lhs = extended_tangent(f, g_embed(p, ring), ring)
    rhs = g_embed(extended_jet(f, p, ring), ring)
    return lhs, rhs


def calibrate_embedding_signs(k: int, maps: Sequence[ExprMap], points: Sequence[SimplicialPoint],
                              ring: CommutativeRing) -> Tuple[int, ...]:
    """Componentwise signs sigma with T^]k[ f o g_k = sigma * (g_k o J^>k< f) on every sample.

    A component that vanishes on both sides for every sample keeps +1.
    """
    signs: List[Optional[int]] = [None] * (1 << k)
    for f in maps:
        for p in points:
            lhs, rhs = _embedding_sides(f, p, ring)
            for mask, (a, b) in enumerate(zip(lhs.space, rhs.space)):
                if a == b and all(c == 0 for c in a):
                    continue
                if a == b:
                    candidate = 1
                elif a == tuple(-c for c in b):
                    candidate = -1
                else:
                    raise ConsistencyError("no sign relates component {} of the imbedding square".format(mask))
                if signs[mask] is not None and signs[mask] != candidate:
                    raise ConsistencyError("inconsistent signs at component {}".format(mask))
                signs[mask] = candidate
    calibrated = tuple(1 if sign is None else sign for sign in signs)
    logger.info("calibrated order-{} imbedding signs {}".format(k, calibrated))
    return calibrated


def check_embedding(f: ExprMap, p: SimplicialPoint, ring: CommutativeRing,
                    signs: Optional[Sequence[int]] = None) -> EqualityReport:
    """T^]k[ f(g_k(p)) against sigma(k) * g_k(J^>k< f(p)) with the frozen sign table."""
    signs = EMBEDDING_SIGN_TABLE[p.order] if signs is None else signs
    lhs, rhs = _embedding_sides(f, p, ring)
    return compare("embedding", lhs, apply_signs(rhs, signs), order=p.order)
