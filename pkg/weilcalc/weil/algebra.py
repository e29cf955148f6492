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

import random
from abc import abstractmethod
from typing import Any, Hashable, List, Optional, Sequence, Tuple

from weilcalc.errors import AlgebraMismatch, NotAUnit, RingMismatch, Ungraded
from weilcalc.scalars.ring import CommutativeRing

# (j, k, c): e_i * e_j has coefficient c on e_k; c is None for a plain 1
ProductRow = List[Tuple[int, int, Any]]


class WeilAlgebra(CommutativeRing):
    """A = K (+) N with a finite basis and structure constants.

    The multiplication table is built eagerly at construction; algebras are immutable
    afterwards. The coefficient ring may itself be a Weil algebra, which realizes
    iterated extensions T^B(T^A).
    """

    def __init__(self, base: CommutativeRing, dim: int, unit_index: int,
                 augmentation: Sequence[Any], grading: Optional[Sequence[int]],
                 rows: Sequence[ProductRow]):
        self.base = base
        self.dim = dim
        self.unit_index = unit_index
        self.augmentation = tuple(augmentation)
        self.grading = None if grading is None else tuple(grading)
        self._rows = [list(row) for row in rows]

    @abstractmethod
    def _key(self) -> Hashable:
        pass

    @property
    @abstractmethod
    def nilpotency_order(self) -> int:
        pass

    @property
    @abstractmethod
    def label(self) -> str:
        pass

    @abstractmethod
    def over(self, ring: CommutativeRing) -> "WeilAlgebra":
        """The same algebra with coefficients in ring."""

    @abstractmethod
    def basis_labels(self) -> List[str]:
        pass

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, WeilAlgebra) and type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return "{}({}, dim={})".format(type(self).__name__, self.label, self.dim)

    @property
    def is_graded(self) -> bool:
        return self.grading is not None

    @property
    def top_degree(self) -> int:
        return max(self.grading) if self.grading is not None else 0

    def structure_constants(self, i: int, j: int) -> List[Any]:
        out = [self.base.zero() for _ in range(self.dim)]
        for jj, k, c in self._rows[i]:
            if jj == j:
                out[k] = out[k] + (self.base.one() if c is None else self.base.coerce(c))
        return out

    # element construction

    def element(self, coeffs: Sequence[Any]) -> "WeilElement":
        if len(coeffs) != self.dim:
            raise AlgebraMismatch("expected {} coefficients for {}, got {}".format(self.dim, self.label, len(coeffs)))
        return WeilElement(self, tuple(self.base.coerce(c) for c in coeffs))

    def zero(self) -> "WeilElement":
        return WeilElement(self, tuple(self.base.zero() for _ in range(self.dim)))

    def basis_element(self, i: int, coef: Any = 1) -> "WeilElement":
        coeffs = [self.base.zero()] * self.dim
        coeffs[i] = self.base.coerce(coef)
        return WeilElement(self, tuple(coeffs))

    def embed(self, t: Any) -> "WeilElement":
        """sigma^A: t -> t * 1."""
        return self.basis_element(self.unit_index, t)

    def one(self) -> "WeilElement":
        return self.embed(self.base.one())

    def tower_contains(self, algebra: "WeilAlgebra") -> bool:
        ring = self.base
        while isinstance(ring, WeilAlgebra):
            if ring == algebra:
                return True
            ring = ring.base
        return False

    def coerce(self, value: Any) -> "WeilElement":
        if isinstance(value, WeilElement):
            if value.algebra == self:
                return value
            if not self.tower_contains(value.algebra):
                raise AlgebraMismatch("element of {} is not in {}".format(value.algebra.label, self.label))
        try:
            return self.embed(self.base.coerce(value))
        except RingMismatch as e:
            raise AlgebraMismatch(str(e)) from e

    def project(self, a: "WeilElement") -> Any:
        """pi^A: the augmentation of a."""
        a = self.coerce(a)
        if self.augmentation[self.unit_index] == 1 and all(
                p == 0 for i, p in enumerate(self.augmentation) if i != self.unit_index):
            return a.coeffs[self.unit_index]
        total = self.base.zero()
        for p, c in zip(self.augmentation, a.coeffs):
            if p != 0:
                total = total + p * c
        return total

    def nilpotent_part(self, a: "WeilElement") -> "WeilElement":
        return a - self.embed(self.project(a))

    def is_unit(self, a: Any) -> bool:
        return self.base.is_unit(self.project(self.coerce(a)))

    def inv(self, a: Any) -> "WeilElement":
        return inv_element(self.coerce(a))

    # arithmetic kernels

    def mul(self, a: "WeilElement", b: "WeilElement") -> "WeilElement":
        zero = self.base.zero()
        out = [zero] * self.dim
        bc = b.coeffs
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, k, c in self._rows[i]:
                bj = bc[j]
                if not bj:
                    continue
                term = ai * bj
                if c is not None:
                    term = term * c
                out[k] = out[k] + term
        return WeilElement(self, tuple(out))

    def random_element(self, rng: random.Random) -> "WeilElement":
        return self.element([self.base.random_element(rng) for _ in range(self.dim)])

    def random_nilpotent(self, rng: random.Random) -> "WeilElement":
        return self.nilpotent_part(self.random_element(rng))

    def random_unit(self, rng: random.Random) -> "WeilElement":
        return self.embed(self.base.random_unit(rng)) + self.random_nilpotent(rng)

    def components(self, a: "WeilElement") -> List["WeilElement"]:
        """Graded components a_0, ..., a_top of a."""
        if self.grading is None:
            raise Ungraded("{} carries no grading".format(self.label))
        parts = []
        for d in range(self.top_degree + 1):
            parts.append(WeilElement(self, tuple(c if self.grading[i] == d else self.base.zero()
                                                 for i, c in enumerate(a.coeffs))))
        return parts


class WeilElement:
    """Dense coefficient vector over the basis of a Weil algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: WeilAlgebra, coeffs: Tuple[Any, ...]):
        self.algebra = algebra
        self.coeffs = coeffs

    def _operand(self, other) -> Optional["WeilElement"]:
        """Lift other into this algebra; None defers to other's reflected operator."""
        if isinstance(other, WeilElement):
            if other.algebra == self.algebra:
                return other
            if other.algebra.tower_contains(self.algebra):
                return None
            if not self.algebra.tower_contains(other.algebra):
                raise AlgebraMismatch("{} and {}".format(self.algebra.label, other.algebra.label))
        try:
            return self.algebra.coerce(other)
        except AlgebraMismatch:
            return None

    def __add__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return WeilElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return WeilElement(self.algebra, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return WeilElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, WeilElement) and other.algebra == self.algebra:
            return self.algebra.mul(self, other)
        if isinstance(other, WeilElement) and other.algebra.tower_contains(self.algebra):
            return NotImplemented
        if isinstance(other, WeilElement) and not self.algebra.tower_contains(other.algebra):
            raise AlgebraMismatch("{} and {}".format(self.algebra.label, other.algebra.label))
        try:
            scalar = self.algebra.base.coerce(other)
        except (AlgebraMismatch, RingMismatch):
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def scale(self, scalar: Any) -> "WeilElement":
        return WeilElement(self.algebra, tuple(scalar * a for a in self.coeffs))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return inv_element(self) ** (-exponent)
        result = self.algebra.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._operand(other)
        if other is None:
            return NotImplemented
        return self * inv_element(other)

    def __eq__(self, other):
        if isinstance(other, WeilElement):
            if other.algebra != self.algebra:
                if other.algebra.tower_contains(self.algebra):
                    return NotImplemented
                if not self.algebra.tower_contains(other.algebra):
                    return False
        try:
            other = self.algebra.coerce(other)
        except (AlgebraMismatch, RingMismatch):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.algebra, self.coeffs))

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __repr__(self):
        terms = []
        for label, c in zip(self.algebra.basis_labels(), self.coeffs):
            if c:
                terms.append(str(c) if label == "1" else "{}*{}".format(c, label))
        return "{}[{}]".format(self.algebra.label, " + ".join(terms) if terms else "0")

    def project(self) -> Any:
        return self.algebra.project(self)

    def is_unit(self) -> bool:
        return self.algebra.is_unit(self)


def inv_element(a: WeilElement) -> WeilElement:
    """(x + y)^-1 = x^-1 * sum_j (-x^-1 y)^j; the series stops below the nilpotency order."""
    algebra = a.algebra
    x = algebra.project(a)
    if not algebra.base.is_unit(x):
        raise NotAUnit("augmentation of {} is not a unit".format(a))
    x_inv = algebra.base.inv(x)
    y = algebra.nilpotent_part(a)
    step = -(y * x_inv)
    term = algebra.one()
    total = algebra.one()
    for _ in range(1, algebra.nilpotency_order):
        term = term * step
        if not term:
            break
        total = total + term
    return total * x_inv
