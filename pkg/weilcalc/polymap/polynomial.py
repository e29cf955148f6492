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

from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from weilcalc.errors import DivisionNotExact, NotAUnit, RingMismatch
from weilcalc.scalars.ring import CommutativeRing

Exponents = Tuple[int, ...]


def add_exponents(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


class PolynomialRing(CommutativeRing):
    """K[y_1, ..., y_n] over a coefficient ring K, lexicographic term order."""

    def __init__(self, base: CommutativeRing, nvars: int):
        if nvars < 0:
            raise ValueError("a polynomial ring needs nvars >= 0")
        self.base = base
        self.nvars = nvars
        self._zero_exps: Exponents = (0,) * nvars

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.base == other.base and self.nvars == other.nvars

    def __hash__(self):
        return hash(("PolynomialRing", self.base, self.nvars))

    def __repr__(self):
        return "PolynomialRing({}, {})".format(self.base, self.nvars)

    def element(self, terms: Dict[Exponents, Any]) -> "Polynomial":
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.base.one())

    def constant(self, c: Any) -> "Polynomial":
        return Polynomial(self, {self._zero_exps: self.base.coerce(c)})

    def gen(self, i: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.base.one()})

    def gens(self) -> List["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coef: Any = 1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): self.base.coerce(coef)})

    def coerce(self, value: Any) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.parent == self:
                return value
            raise RingMismatch("polynomial over {} is not in {}".format(value.parent, self))
        return self.constant(value)

    def is_unit(self, a: Any) -> bool:
        a = self.coerce(a)
        if not a.is_constant():
            return False
        return self.base.is_unit(a.constant_term())

    def inv(self, a: Any) -> "Polynomial":
        a = self.coerce(a)
        if not self.is_unit(a):
            raise NotAUnit("only constant units are invertible in {}".format(self))
        return self.constant(self.base.inv(a.constant_term()))

    def divide(self, a: Any, b: Any) -> "Polynomial":
        quotient, remainder = self.coerce(a).divmod(self.coerce(b))
        if remainder:
            raise DivisionNotExact("{} is not divisible by {}".format(a, b))
        return quotient


class Polynomial:
    """Sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: PolynomialRing, terms: Dict[Exponents, Any]):
        self.parent = parent
        self.terms = {exps: c for exps, c in terms.items() if c != 0}

    @property
    def nvars(self) -> int:
        return self.parent.nvars

    def _lift(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.parent != self.parent:
                raise RingMismatch("polynomials over {} and {}".format(self.parent, other.parent))
            return other
        try:
            return self.parent.constant(other)
        except RingMismatch:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms[exps] + c if exps in terms else c
        return Polynomial(self.parent, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.parent, {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms: Dict[Exponents, Any] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = add_exponents(ea, eb)
                c = ca * cb
                terms[exps] = terms[exps] + c if exps in terms else c
        return Polynomial(self.parent, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.parent.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.parent == other.parent and self.terms == other.terms
        try:
            other = self.parent.constant(other)
        except RingMismatch:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join("y{}^{}".format(i, e) if e > 1 else "y{}".format(i)
                            for i, e in enumerate(exps) if e > 0)
            parts.append("{}*{}".format(c, mono) if mono else str(c))
        return " + ".join(parts)

    def is_constant(self) -> bool:
        return all(not any(exps) for exps in self.terms)

    def constant_term(self) -> Any:
        return self.terms.get(self.parent._zero_exps, self.parent.base.zero())

    def coefficient(self, exps: Sequence[int]) -> Any:
        return self.terms.get(tuple(exps), self.parent.base.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(exps) for exps in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.parent, {exps: c for exps, c in self.terms.items() if sum(exps) == d})

    def truncate(self, k: int) -> "Polynomial":
        return Polynomial(self.parent, {exps: c for exps, c in self.terms.items() if sum(exps) <= k})

    def leading_term(self) -> Tuple[Exponents, Any]:
        exps = max(self.terms)
        return exps, self.terms[exps]

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single divisor with unit leading coefficient."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        base = self.parent.base
        lead_exps, lead_coef = divisor.leading_term()
        if not base.is_unit(lead_coef):
            raise NotAUnit("leading coefficient {} of the divisor is not a unit".format(lead_coef))
        lead_inv = base.inv(lead_coef)
        remaining = Polynomial(self.parent, self.terms)
        quotient: Dict[Exponents, Any] = {}
        remainder: Dict[Exponents, Any] = {}
        while remaining:
            exps, coef = remaining.leading_term()
            if divides(lead_exps, exps):
                q_exps = tuple(e - l for e, l in zip(exps, lead_exps))
                q_coef = coef * lead_inv
                quotient[q_exps] = q_coef
                remaining = remaining - divisor * Polynomial(self.parent, {q_exps: q_coef})
            else:
                remainder[exps] = coef
                remaining = Polynomial(self.parent,
                                       {e: c for e, c in remaining.terms.items() if e != exps})
        return Polynomial(self.parent, quotient), Polynomial(self.parent, remainder)

    def evaluate(self, values: Sequence[Any], target: Optional[CommutativeRing] = None) -> Any:
        """Substitute values for the variables; coefficients are coerced into target."""
        if len(values) != self.nvars:
            raise ValueError("expected {} values, got {}".format(self.nvars, len(values)))
        target = self.parent.base if target is None else target
        powers: List[Dict[int, Any]] = [{0: target.one(), 1: target.coerce(v)} for v in values]

        def power(i: int, e: int) -> Any:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * cache[1]
            return cache[e]

        result = target.zero()
        for exps, c in self.terms.items():
            term = target.coerce(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def sorted_terms(self) -> Iterable[Tuple[Exponents, Any]]:
        """Terms by increasing total degree, graded-lexicographic within a degree."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), tuple(-e for e in item[0])))
