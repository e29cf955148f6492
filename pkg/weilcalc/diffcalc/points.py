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

"""Points of the cubic and simplicial extended domains.

Cubic coordinates are indexed by subset bitmasks of {1..k}: bit i-1 stands for i.
Space components exist for every mask including the empty one; time components for
every nonempty mask (slot 0 of ``time`` is unused and holds zero).
"""

from dataclasses import dataclass
from typing import Any, Sequence, Tuple

from weilcalc.constants import MAX_CUBIC_ORDER
from weilcalc.errors import ArityMismatch, NotAUnit
from weilcalc.scalars.ring import CommutativeRing

Vector = Tuple[Any, ...]


def _add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _scale(c: Any, a: Vector) -> Vector:
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class CubicPoint:
    order: int
    space: Tuple[Vector, ...]
    time: Tuple[Any, ...]

    def __post_init__(self):
        if not 0 <= self.order <= MAX_CUBIC_ORDER:
            raise ArityMismatch("cubic order {} outside 0..{}".format(self.order, MAX_CUBIC_ORDER))
        size = 1 << self.order
        if len(self.space) != size or len(self.time) != size:
            raise ArityMismatch("cubic point of order {} needs {} slots".format(self.order, size))

    @property
    def top(self) -> int:
        return 1 << (self.order - 1)

    def split(self) -> Tuple["CubicPoint", "CubicPoint", Any]:
        """(X, U, t): masks without the top bit, masks with it, and t at the top bit alone."""
        top = self.top
        X = CubicPoint(self.order - 1, self.space[:top], self.time[:top])
        U = CubicPoint(self.order - 1, self.space[top:], (self.time[0],) + self.time[top + 1:])
        return X, U, self.time[top]

    @classmethod
    def join(cls, X: "CubicPoint", U: "CubicPoint", t: Any) -> "CubicPoint":
        return cls(X.order + 1, X.space + U.space, X.time + (t,) + U.time[1:])

    def shifted(self, t: Any, U: "CubicPoint") -> "CubicPoint":
        """X + t U, on space and time coordinates alike."""
        return CubicPoint(self.order,
                          tuple(_add(a, _scale(t, b)) for a, b in zip(self.space, U.space)),
                          (self.time[0],) + tuple(a + t * b for a, b in zip(self.time[1:], U.time[1:])))


@dataclass(frozen=True)
class SimplicialPoint:
    """(v_0, ..., v_k; s_1, ..., s_k) with s_0 = 0."""

    vectors: Tuple[Vector, ...]
    times: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.vectors) != len(self.times) + 1:
            raise ArityMismatch("{} vectors need {} times".format(len(self.vectors), len(self.vectors) - 1))

    @property
    def order(self) -> int:
        return len(self.times)

    def s(self, i: int, zero: Any) -> Any:
        return zero if i == 0 else self.times[i - 1]


def cubic_point(space: Sequence[Sequence[Any]], time: Sequence[Any], ring: CommutativeRing) -> CubicPoint:
    order = max(len(space).bit_length() - 1, 0)
    return CubicPoint(order, tuple(tuple(ring.coerce(c) for c in v) for v in space),
                      (ring.zero(),) + tuple(ring.coerce(t) for t in time[1:]))


def simplicial_point(vectors: Sequence[Sequence[Any]], times: Sequence[Any], ring: CommutativeRing) -> SimplicialPoint:
    return SimplicialPoint(tuple(tuple(ring.coerce(c) for c in v) for v in vectors),
                           tuple(ring.coerce(t) for t in times))


def cubic_is_nonsingular(p: CubicPoint, ring: CommutativeRing) -> bool:
    """Every divisor used by the recursion f^]k[ = (f^]k-1[)^]1[ is a unit."""
    if p.order == 0:
        return True
    X, U, t = p.split()
    if not ring.is_unit(t):
        return False
    return cubic_is_nonsingular(X, ring) and cubic_is_nonsingular(X.shifted(t, U), ring)


def simplicial_is_nonsingular(p: SimplicialPoint, ring: CommutativeRing) -> bool:
    zero = ring.zero()
    for i in range(p.order + 1):
        for j in range(i):
            if not ring.is_unit(p.s(i, zero) - p.s(j, zero)):
                return False
    return True


def simplicial_nodes(p: SimplicialPoint, ring: CommutativeRing) -> Tuple[Vector, ...]:
    """node_i = v_0 + sum_{j<=i} prod_{m<j} (s_i - s_m) v_j."""
    zero = ring.zero()
    nodes = []
    for i in range(p.order + 1):
        node = p.vectors[0]
        weight = ring.one()
        for j in range(1, i + 1):
            weight = weight * (p.s(i, zero) - p.s(j - 1, zero))
            node = _add(node, _scale(weight, p.vectors[j]))
        nodes.append(node)
    return tuple(nodes)


def _require_unit(r: Any, ring: CommutativeRing) -> Any:
    r = ring.coerce(r)
    if not ring.is_unit(r):
        raise NotAUnit("{} is not a unit".format(r))
    return r


def rho_cubic(r: Any, p: CubicPoint, ring: CommutativeRing) -> CubicPoint:
    """(v_alpha, t_alpha) -> (r^|alpha| v_alpha, r^(|alpha|-2) t_alpha)."""
    r = _require_unit(r, ring)
    r_inv = ring.inv(r)

    def power(e: int) -> Any:
        return r ** e if e >= 0 else r_inv ** (-e)

    space = tuple(_scale(power(bin(mask).count("1")), v) for mask, v in enumerate(p.space))
    time = (p.time[0],) + tuple(power(bin(mask).count("1") - 2) * t
                                for mask, t in enumerate(p.time) if mask > 0)
    return CubicPoint(p.order, space, time)


def rho_simplicial(r: Any, p: SimplicialPoint, ring: CommutativeRing) -> SimplicialPoint:
    """(v_0, r v_1, r^2 v_2, ...; r^-1 s_1, ..., r^-1 s_k)."""
    r = _require_unit(r, ring)
    r_inv = ring.inv(r)
    return SimplicialPoint(tuple(_scale(r ** i, v) for i, v in enumerate(p.vectors)),
                           tuple(r_inv * s for s in p.times))


def cubic_projection(p: CubicPoint, j: int) -> CubicPoint:
    """pi^[k]_[j]: keep the coordinates indexed by subsets of {1..j}."""
    if not 0 <= j <= p.order:
        raise ArityMismatch("cannot project order {} to {}".format(p.order, j))
    size = 1 << j
    return CubicPoint(j, p.space[:size], p.time[:size])


def cubic_injection(p: CubicPoint, k: int, ring: CommutativeRing) -> CubicPoint:
    """sigma^[k]_[j]: extend by zero coordinates."""
    if k < p.order:
        raise ArityMismatch("cannot inject order {} into {}".format(p.order, k))
    extra = (1 << k) - (1 << p.order)
    width = len(p.space[0])
    zero_vector = tuple(ring.zero() for _ in range(width))
    return CubicPoint(k, p.space + (zero_vector,) * extra, p.time + (ring.zero(),) * extra)


def simplicial_projection(p: SimplicialPoint, j: int) -> SimplicialPoint:
    if not 0 <= j <= p.order:
        raise ArityMismatch("cannot project order {} to {}".format(p.order, j))
    return SimplicialPoint(p.vectors[:j + 1], p.times[:j])


def simplicial_injection(p: SimplicialPoint, k: int, ring: CommutativeRing) -> SimplicialPoint:
    if k < p.order:
        raise ArityMismatch("cannot inject order {} into {}".format(p.order, k))
    width = len(p.vectors[0])
    zero_vector = tuple(ring.zero() for _ in range(width))
    extra = k - p.order
    return SimplicialPoint(p.vectors + (zero_vector,) * extra, p.times + (ring.zero(),) * extra)
