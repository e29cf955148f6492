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

"""Monomial-quotient presentations K[X_1..X_n] / (deg > r, extra generators)."""

from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from weilcalc.errors import InvalidPreset, RingMismatch
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polynomial import Exponents, Polynomial, PolynomialRing, add_exponents, divides
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.weil.algebra import ProductRow, WeilAlgebra, WeilElement

logger = init_logger(__name__)


def _variable_bounds(nvars: int, cap: int, extras: FrozenSet[Exponents]) -> List[int]:
    bounds = [cap] * nvars
    for gen in extras:
        support = [i for i, e in enumerate(gen) if e > 0]
        if len(support) == 1:
            i = support[0]
            bounds[i] = min(bounds[i], gen[i] - 1)
    return bounds


def _monomials(bounds: Sequence[int], lo: int, hi: int) -> Iterator[Exponents]:
    """Exponent vectors with lo <= total degree <= hi and e_i <= bounds[i]."""
    nvars = len(bounds)

    def rec(i: int, remaining: int, prefix: Tuple[int, ...]) -> Iterator[Exponents]:
        if i == nvars:
            if sum(prefix) >= lo:
                yield prefix
            return
        for e in range(min(bounds[i], remaining) + 1):
            yield from rec(i + 1, remaining - e, prefix + (e,))

    yield from rec(0, hi, ())


def _killed(exps: Exponents, extras: FrozenSet[Exponents]) -> bool:
    return any(divides(gen, exps) for gen in extras)


def graded_lex_key(exps: Exponents) -> Tuple[int, Tuple[int, ...]]:
    return sum(exps), tuple(-e for e in exps)


def monomial_label(exps: Exponents) -> str:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append("X{}".format(i + 1))
        elif e > 1:
            parts.append("X{}^{}".format(i + 1, e))
    return "*".join(parts) if parts else "1"


class WeilPresentation(WeilAlgebra):
    """W^r_n(K) modulo extra monomial generators.

    The basis is the set of surviving monomials in graded-lexicographic order, constant
    first; the grading is total degree.
    """

    def __init__(self, nvars: int, degree_cap: int, extra_generators: Sequence[Sequence[int]] = (),
                 base: Optional[CommutativeRing] = None, label: Optional[str] = None,
                 factors: Optional[Tuple["WeilPresentation", ...]] = None,
                 construction: Optional[str] = None):
        if nvars < 0 or degree_cap < 0:
            raise InvalidPreset("nvars and degree cap must be non-negative, got n={}, r={}".format(
                nvars, degree_cap))
        extras = set()
        for gen in extra_generators:
            gen = tuple(int(e) for e in gen)
            if len(gen) != nvars or any(e < 0 for e in gen):
                raise InvalidPreset("extra generator {} is not an exponent vector of length {}".format(gen, nvars))
            if not any(gen):
                raise InvalidPreset("the constant monomial cannot be an extra generator")
            extras.add(gen)
        self.nvars = nvars
        self.degree_cap = degree_cap
        self.extra_generators: FrozenSet[Exponents] = frozenset(extras)
        self._label = label if label is not None else "custom({},{})".format(nvars, degree_cap)
        self.factors = factors
        self.construction = construction

        bounds = _variable_bounds(nvars, degree_cap, self.extra_generators)
        basis = [exps for exps in _monomials(bounds, 0, degree_cap) if not _killed(exps, self.extra_generators)]
        basis.sort(key=graded_lex_key)
        self.basis: Tuple[Exponents, ...] = tuple(basis)
        self.index: Dict[Exponents, int] = {exps: i for i, exps in enumerate(basis)}

        rows: List[ProductRow] = []
        for ea in basis:
            row: ProductRow = []
            for j, eb in enumerate(basis):
                k = self.index.get(add_exponents(ea, eb))
                if k is not None:
                    row.append((j, k, None))
            rows.append(row)

        base = RingDescriptor.rationals() if base is None else base
        augmentation = [base.one()] + [base.zero()] * (len(basis) - 1)
        super().__init__(base, len(basis), 0, augmentation, [sum(e) for e in basis], rows)
        self._nilpotency_order = max(sum(e) for e in basis) + 1
        logger.debug("built presentation {} of dim {}".format(self._label, self.dim))

    def _key(self):
        return self.base, self.nvars, self.degree_cap, tuple(sorted(self.extra_generators))

    @property
    def nilpotency_order(self) -> int:
        return self._nilpotency_order

    @property
    def label(self) -> str:
        return self._label

    def over(self, ring: CommutativeRing) -> "WeilPresentation":
        factors = None if self.factors is None else tuple(f.over(ring) for f in self.factors)
        return WeilPresentation(self.nvars, self.degree_cap, sorted(self.extra_generators), base=ring,
                                label=self._label, factors=factors, construction=self.construction)

    def basis_labels(self) -> List[str]:
        return [monomial_label(e) for e in self.basis]

    def monomial(self, exps: Sequence[int], coef: Any = 1) -> WeilElement:
        """X^exps, or zero when the monomial is killed."""
        k = self.index.get(tuple(exps))
        if k is None:
            return self.zero()
        return self.basis_element(k, coef)

    def gen(self, i: int) -> WeilElement:
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(exps)

    def gens(self) -> List[WeilElement]:
        return [self.gen(i) for i in range(self.nvars)]

    def product_index(self, i: int, j: int) -> Optional[int]:
        return self.index.get(add_exponents(self.basis[i], self.basis[j]))

    def from_polynomial(self, poly: Polynomial) -> WeilElement:
        """Quotient map K[X] -> A."""
        if poly.nvars != self.nvars:
            raise RingMismatch("polynomial in {} variables for {}".format(poly.nvars, self.label))
        coeffs = [self.base.zero()] * self.dim
        for exps, c in poly.terms.items():
            k = self.index.get(exps)
            if k is not None:
                coeffs[k] = coeffs[k] + self.base.coerce(c)
        return WeilElement(self, tuple(coeffs))

    def to_polynomial(self, a: WeilElement, parent: Optional[PolynomialRing] = None) -> Polynomial:
        parent = PolynomialRing(self.base, self.nvars) if parent is None else parent
        return Polynomial(parent, {exps: c for exps, c in zip(self.basis, self.coerce(a).coeffs)})

    def variable_block(self, factor: int) -> range:
        """Variable indices contributed by the given factor of a tensor-like construction."""
        if self.factors is None:
            raise InvalidPreset("{} is not built from factors".format(self.label))
        start = sum(f.nvars for f in self.factors[:factor])
        return range(start, start + self.factors[factor].nvars)

    def to_json(self) -> Dict[str, Any]:
        return {
            "preset": self.label,
            "nvars": self.nvars,
            "cap": self.degree_cap,
            "extra_gens": [list(g) for g in sorted(self.extra_generators)],
            "basis": [list(e) for e in self.basis],
            "dim": self.dim,
            "nilpotency": self.nilpotency_order,
        }

    def table_json(self) -> List[List[str]]:
        labels = self.basis_labels()
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                k = self.product_index(i, j)
                row.append("0" if k is None else labels[k])
            table.append(row)
        return table


def _base(base: Optional[CommutativeRing]) -> CommutativeRing:
    return RingDescriptor.rationals() if base is None else base


def jet(k: int, base: Optional[CommutativeRing] = None) -> WeilPresentation:
    """J^k K = K[X]/(X^{k+1})."""
    if k < 0:
        raise InvalidPreset("jet order must be non-negative, got {}".format(k))
    return WeilPresentation(1, k, (), base=_base(base), label="jet:{}".format(k))


def tangent(k: int, base: Optional[CommutativeRing] = None) -> WeilPresentation:
    """T^k K = K[X_1..X_k]/(X_1^2, ..., X_k^2)."""
    if k < 0:
        raise InvalidPreset("tangent order must be non-negative, got {}".format(k))
    squares = [tuple(2 if i == j else 0 for j in range(k)) for i in range(k)]
    return WeilPresentation(k, k, squares, base=_base(base), label="tan:{}".format(k))


def truncated(n: int, r: int, base: Optional[CommutativeRing] = None) -> WeilPresentation:
    """W^r_n(K): polynomials in n variables modulo total degree > r."""
    if n < 0 or r < 0:
        raise InvalidPreset("truncated(n, r) needs n, r >= 0, got ({}, {})".format(n, r))
    return WeilPresentation(n, r, (), base=_base(base), label="trunc:{},{}".format(n, r))


def custom(n: int, r: int, extra_generators: Sequence[Sequence[int]],
           base: Optional[CommutativeRing] = None) -> WeilPresentation:
    return WeilPresentation(n, r, extra_generators, base=_base(base))


def make_algebra(preset: str, *params, base: Optional[CommutativeRing] = None) -> WeilPresentation:
    builders = {"jet": jet, "tangent": tangent, "truncated": truncated, "custom": custom}
    if preset not in builders:
        raise InvalidPreset("unknown preset '{}'".format(preset))
    return builders[preset](*params, base=base)


def _block_killers(factor: WeilPresentation) -> List[Exponents]:
    """Monomials of degree r+1 surviving the factor's own extra generators."""
    bounds = _variable_bounds(factor.nvars, factor.degree_cap + 1, factor.extra_generators)
    return [exps for exps in _monomials(bounds, factor.degree_cap + 1, factor.degree_cap + 1)
            if not _killed(exps, factor.extra_generators)]


def _glued_generators(factors: Sequence[WeilPresentation]) -> List[Exponents]:
    total = sum(f.nvars for f in factors)
    generators = []
    offset = 0
    for f in factors:
        for gen in list(f.extra_generators) + _block_killers(f):
            padded = [0] * total
            padded[offset:offset + f.nvars] = gen
            generators.append(tuple(padded))
        offset += f.nvars
    return generators


def _cross_generators(total: int, left: range, right: range) -> List[Exponents]:
    generators = []
    for i in left:
        for j in right:
            gen = [0] * total
            gen[i] = 1
            gen[j] = 1
            generators.append(tuple(gen))
    return generators


def _check_factors(*factors) -> CommutativeRing:
    for f in factors:
        if not isinstance(f, WeilPresentation):
            raise InvalidPreset("{} is not a monomial presentation".format(f))
    base = factors[0].base
    for f in factors[1:]:
        if f.base != base:
            raise RingMismatch("factors over {} and {}".format(base, f.base))
    return base


def tensor(A: WeilPresentation, B: WeilPresentation) -> WeilPresentation:
    """A (x) B on disjoint variables; dim A * dim B."""
    base = _check_factors(A, B)
    return WeilPresentation(A.nvars + B.nvars, A.degree_cap + B.degree_cap, _glued_generators([A, B]),
                            base=base, label="tensor({},{})".format(A.label, B.label),
                            factors=(A, B), construction="tensor")


def whitney_sum(A: WeilPresentation, B: WeilPresentation) -> WeilPresentation:
    """A (+)_K B = (A (x) B) / (N_A (x) N_B); dim A + dim B - 1."""
    base = _check_factors(A, B)
    total = A.nvars + B.nvars
    generators = _glued_generators([A, B]) + _cross_generators(
        total, range(A.nvars), range(A.nvars, total))
    return WeilPresentation(total, A.degree_cap + B.degree_cap, generators, base=base,
                            label="whitney({},{})".format(A.label, B.label),
                            factors=(A, B), construction="whitney")


def whitney_sum_over(A: WeilPresentation, B: WeilPresentation, B2: WeilPresentation) -> WeilPresentation:
    """(A (x) B) (+)_A (A (x) B2): glue the two tensors along A and kill N_B * N_B2."""
    base = _check_factors(A, B, B2)
    total = A.nvars + B.nvars + B2.nvars
    b_vars = range(A.nvars, A.nvars + B.nvars)
    b2_vars = range(A.nvars + B.nvars, total)
    generators = _glued_generators([A, B, B2]) + _cross_generators(total, b_vars, b2_vars)
    return WeilPresentation(total, A.degree_cap + B.degree_cap + B2.degree_cap, generators, base=base,
                            label="whitney_over({},{},{})".format(A.label, B.label, B2.label),
                            factors=(A, B, B2), construction="whitney_over")


def basis_bijection(P: WeilPresentation, Q: WeilPresentation,
                    var_map: Optional[Sequence[Optional[int]]] = None) -> Optional[Tuple[int, ...]]:
    """Basis bijection P -> Q induced by renaming variables, if it is an isomorphism.

    var_map[i] is the Q-variable receiving P-variable i; None means the variable must
    never occur in P's basis. Returns the index map, or None when the renaming does not
    carry basis onto basis while preserving every product.
    """
    if var_map is None:
        if P.nvars != Q.nvars:
            return None
        var_map = list(range(P.nvars))
    if P.dim != Q.dim or len(var_map) != P.nvars:
        return None
    mapping = []
    for exps in P.basis:
        image = [0] * Q.nvars
        for i, e in enumerate(exps):
            if e == 0:
                continue
            if var_map[i] is None:
                return None
            image[var_map[i]] += e
        k = Q.index.get(tuple(image))
        if k is None:
            return None
        mapping.append(k)
    if len(set(mapping)) != Q.dim:
        return None
    for i in range(P.dim):
        for j in range(P.dim):
            k = P.product_index(i, j)
            image = Q.product_index(mapping[i], mapping[j])
            if (k is None) != (image is None) or (k is not None and mapping[k] != image):
                return None
    return tuple(mapping)


class _PresetParser:
    """atom := jet:k | tan:k | trunc:n,r ; preset := atom | tensor(preset,preset) | whitney(preset,preset)."""

    def __init__(self, text: str, base: CommutativeRing):
        self.text = text.replace(" ", "")
        self.pos = 0
        self.base = base

    def parse(self) -> WeilPresentation:
        algebra = self.preset()
        if self.pos != len(self.text):
            raise InvalidPreset("trailing input '{}' in preset '{}'".format(self.text[self.pos:], self.text))
        return algebra

    def expect(self, token: str):
        if not self.text.startswith(token, self.pos):
            raise InvalidPreset("expected '{}' at position {} of '{}'".format(token, self.pos, self.text))
        self.pos += len(token)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise InvalidPreset("expected an integer at position {} of '{}'".format(start, self.text))
        return int(self.text[start:self.pos])

    def preset(self) -> WeilPresentation:
        for keyword, combine in (("tensor(", tensor), ("whitney(", whitney_sum)):
            if self.text.startswith(keyword, self.pos):
                self.pos += len(keyword)
                left = self.preset()
                self.expect(",")
                right = self.preset()
                self.expect(")")
                return combine(left, right)
        if self.text.startswith("jet:", self.pos):
            self.pos += len("jet:")
            return jet(self.integer(), base=self.base)
        if self.text.startswith("tan:", self.pos):
            self.pos += len("tan:")
            return tangent(self.integer(), base=self.base)
        if self.text.startswith("trunc:", self.pos):
            self.pos += len("trunc:")
            n = self.integer()
            self.expect(",")
            return truncated(n, self.integer(), base=self.base)
        raise InvalidPreset("unknown preset at position {} of '{}'".format(self.pos, self.text))


def parse_preset(text: str, base: Optional[CommutativeRing] = None) -> WeilPresentation:
    return _PresetParser(text, _base(base)).parse()
