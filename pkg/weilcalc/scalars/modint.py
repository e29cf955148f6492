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
from functools import wraps
from math import gcd
from typing import Tuple

from weilcalc.errors import NotAUnit, RingMismatch


def extgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Extended Euclid: returns (x, y, d) with a*x + b*y = d = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b != 0:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0, a


def _coerced(func):
    @wraps(func)
    def method(self, other):
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise RingMismatch("cannot mix residues mod {} and mod {}".format(self.modulus, other.modulus))
        elif isinstance(other, bool):
            return NotImplemented
        elif isinstance(other, int):
            other = ModInt(other, self.modulus)
        elif isinstance(other, Fraction):
            raise RingMismatch("cannot mix residues mod {} with rational {}".format(self.modulus, other))
        else:
            return NotImplemented
        return func(self, other)

    return method


class ModInt:
    """A residue class of Z/mZ, stored as its representative in [0, m)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    @_coerced
    def __add__(self, other):
        return ModInt(self.value + other.value, self.modulus)

    @_coerced
    def __radd__(self, other):
        return ModInt(other.value + self.value, self.modulus)

    @_coerced
    def __sub__(self, other):
        return ModInt(self.value - other.value, self.modulus)

    @_coerced
    def __rsub__(self, other):
        return ModInt(other.value - self.value, self.modulus)

    @_coerced
    def __mul__(self, other):
        return ModInt(self.value * other.value, self.modulus)

    @_coerced
    def __rmul__(self, other):
        return ModInt(other.value * self.value, self.modulus)

    @_coerced
    def __truediv__(self, other):
        return self * other.inverse()

    @_coerced
    def __rtruediv__(self, other):
        return other * self.inverse()

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ModInt(pow(self.inverse().value, -exponent, self.modulus), self.modulus)
        return ModInt(pow(self.value, exponent, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> "ModInt":
        x, _, d = extgcd(self.value, self.modulus)
        if d != 1:
            raise NotAUnit("{} is not a unit mod {}".format(self.value, self.modulus))
        return ModInt(x, self.modulus)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return "ModInt({}, {})".format(self.value, self.modulus)

    def __str__(self):
        return str(self.value)
