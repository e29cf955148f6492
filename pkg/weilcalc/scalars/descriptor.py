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
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Iterator, List, Optional, Union

from weilcalc.constants import (RATIONAL_RANDOM_DENOMINATOR, RATIONAL_RANDOM_NUMERATOR,
                                RATIONAL_SAMPLE_WIDTH, UNIT_BACKTRACK_MODULUS_LIMIT,
                                UNIT_REJECTION_ATTEMPTS)
from weilcalc.errors import Exhausted, NotAUnit, RingMismatch
from weilcalc.logging.logger import init_logger
from weilcalc.scalars.modint import ModInt
from weilcalc.scalars.ring import CommutativeRing

logger = init_logger(__name__)

Scalar = Union[Fraction, ModInt]


class RingKind(str, Enum):
    RATIONALS = "rationals"
    MODULAR = "modular"


@dataclass(frozen=True)
class RingDescriptor(CommutativeRing):
    kind: RingKind
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind == RingKind.MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modular rings need a modulus m >= 2, got {}".format(self.modulus))
        elif self.modulus is not None:
            raise ValueError("the rationals take no modulus")

    @classmethod
    def rationals(cls) -> "RingDescriptor":
        return cls(RingKind.RATIONALS)

    @classmethod
    def modular(cls, modulus: int) -> "RingDescriptor":
        return cls(RingKind.MODULAR, modulus)

    @classmethod
    def parse(cls, text: str) -> "RingDescriptor":
        """Parse the ring selection string "rat" | "mod:<m>"."""
        text = text.strip()
        if text == "rat":
            return cls.rationals()
        if text.startswith("mod:"):
            try:
                modulus = int(text[len("mod:"):])
            except ValueError as e:
                raise ValueError("invalid modulus in ring '{}'".format(text)) from e
            return cls.modular(modulus)
        raise ValueError("unknown ring '{}', expected 'rat' or 'mod:<m>'".format(text))

    @property
    def is_rational(self) -> bool:
        return self.kind == RingKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.is_rational else self.modulus

    @property
    def is_finite(self) -> bool:
        return not self.is_rational

    def __str__(self):
        return "rat" if self.is_rational else "mod:{}".format(self.modulus)

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value: Any) -> Scalar:
        if isinstance(value, bool):
            raise RingMismatch("refusing to coerce bool {} into {}".format(value, self))
        if self.is_rational:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise RingMismatch("cannot coerce {!r} into the rationals".format(value))
        if isinstance(value, ModInt):
            if value.modulus != self.modulus:
                raise RingMismatch("cannot coerce residue mod {} into {}".format(value.modulus, self))
            return value
        if isinstance(value, int):
            return ModInt(value, self.modulus)
        if isinstance(value, Fraction) and value.denominator == 1:
            return ModInt(value.numerator, self.modulus)
        raise RingMismatch("cannot coerce {!r} into {}".format(value, self))

    def contains(self, value: Any) -> bool:
        if self.is_rational:
            return isinstance(value, Fraction)
        return isinstance(value, ModInt) and value.modulus == self.modulus

    def is_unit(self, a: Any) -> bool:
        a = self.coerce(a)
        if self.is_rational:
            return a != 0
        return gcd(a.value, self.modulus) == 1

    def inv(self, a: Any) -> Scalar:
        a = self.coerce(a)
        if not self.is_unit(a):
            raise NotAUnit("{} is not a unit of {}".format(format_scalar(a), self))
        if self.is_rational:
            return 1 / a
        return a.inverse()

    def units(self) -> Iterator[Scalar]:
        """Enumerate the unit group of a modular ring in increasing residue order."""
        if self.is_rational:
            raise ValueError("the unit group of the rationals is infinite")
        for value in range(1, self.modulus):
            if gcd(value, self.modulus) == 1:
                yield ModInt(value, self.modulus)

    def random_element(self, rng: random.Random) -> Scalar:
        if self.is_rational:
            return Fraction(rng.randint(-RATIONAL_RANDOM_NUMERATOR, RATIONAL_RANDOM_NUMERATOR),
                            rng.randint(1, RATIONAL_RANDOM_DENOMINATOR))
        return ModInt(rng.randrange(self.modulus), self.modulus)

    def random_unit(self, rng: random.Random) -> Scalar:
        for _ in range(UNIT_REJECTION_ATTEMPTS):
            candidate = self.random_element(rng)
            if self.is_unit(candidate):
                return candidate
        return self.one()

    def parse_scalar(self, text: Union[str, int]) -> Scalar:
        """Parse "p/q" or "p"; over modular rings p/q means p * q^-1."""
        if isinstance(text, int) and not isinstance(text, bool):
            return self.coerce(text)
        text = str(text).strip()
        if "/" in text:
            numerator, denominator = text.split("/", 1)
            p, q = int(numerator), int(denominator)
            if q == 0:
                raise ValueError("zero denominator in scalar '{}'".format(text))
            if self.is_rational:
                return Fraction(p, q)
            return self.coerce(p) * self.inv(self.coerce(q))
        return self.coerce(int(text))

    def format_scalar(self, a: Any) -> Union[str, int]:
        return format_scalar(self.coerce(a))


def format_scalar(a: Scalar) -> Union[str, int]:
    """Rationals as "p/q" (or "p" when integral) strings, residues as integers."""
    if isinstance(a, ModInt):
        return a.value
    if isinstance(a, int):
        return str(a)
    if a.denominator == 1:
        return str(a.numerator)
    return "{}/{}".format(a.numerator, a.denominator)


def ring_of(a: Any) -> RingDescriptor:
    if isinstance(a, ModInt):
        return RingDescriptor.modular(a.modulus)
    if isinstance(a, (int, Fraction)) and not isinstance(a, bool):
        return RingDescriptor.rationals()
    raise RingMismatch("{!r} is not a base-ring scalar".format(a))


def is_unit(a: Scalar) -> bool:
    return ring_of(a).is_unit(a)


def inv(a: Scalar) -> Scalar:
    return ring_of(a).inv(a)


def _pairwise_units(ring: RingDescriptor, candidate: Scalar, chosen: List[Scalar]) -> bool:
    return all(ring.is_unit(candidate - other) for other in chosen)


def _backtrack_units(ring: RingDescriptor, n: int, rng: random.Random) -> Optional[List[Scalar]]:
    pool = list(ring.units())
    rng.shuffle(pool)

    def extend(chosen: List[Scalar], start: int) -> Optional[List[Scalar]]:
        if len(chosen) == n:
            return chosen
        for idx in range(start, len(pool)):
            if _pairwise_units(ring, pool[idx], chosen):
                found = extend(chosen + [pool[idx]], idx + 1)
                if found is not None:
                    return found
        return None

    return extend([], 0)


def sample_units(ring: RingDescriptor, n: int, seed: int = 0) -> List[Scalar]:
    """Draw n distinct units whose pairwise differences are units, deterministically in seed."""
    if n < 0:
        raise ValueError("cannot sample a negative number of units")
    rng = random.Random(seed)
    if ring.is_rational:
        width = RATIONAL_SAMPLE_WIDTH * max(n, 1)
        population = [v for v in range(-width, width + 1) if v != 0]
        return [Fraction(v) for v in rng.sample(population, n)]

    chosen: List[Scalar] = []
    for _ in range(UNIT_REJECTION_ATTEMPTS * max(n, 1)):
        if len(chosen) == n:
            return chosen
        candidate = ModInt(rng.randrange(1, ring.modulus), ring.modulus)
        if ring.is_unit(candidate) and _pairwise_units(ring, candidate, chosen):
            chosen.append(candidate)
    if len(chosen) == n:
        return chosen

    if ring.modulus <= UNIT_BACKTRACK_MODULUS_LIMIT:
        found = _backtrack_units(ring, n, rng)
        if found is not None:
            return found
    logger.debug("no {} units with pairwise unit differences in {}".format(n, ring))
    raise Exhausted("{} has no {} units with pairwise unit differences".format(ring, n))
