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

"""Morphisms of Weil algebras as matrices over the source and target bases."""

from functools import cached_property
from typing import Any, Optional, Sequence

from weilcalc.errors import AlgebraMismatch, InvalidPreset, NotAMorphism
from weilcalc.logging.logger import init_logger
from weilcalc.weil.algebra import WeilAlgebra, WeilElement
from weilcalc.weil.presentation import WeilPresentation, jet
from weilcalc.weil.table import augmentation_ideal_basis

logger = init_logger(__name__)


class MorphismMatrix:
    """Linear map A -> B; column i is the image of the i-th source basis element."""

    def __init__(self, source: WeilAlgebra, target: WeilAlgebra, matrix: Sequence[Sequence[Any]]):
        if len(matrix) != target.dim or any(len(row) != source.dim for row in matrix):
            raise AlgebraMismatch("matrix must be {} x {}".format(target.dim, source.dim))
        if source.base != target.base:
            raise AlgebraMismatch("morphisms must be K-linear over a common base ring")
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(target.base.coerce(c) for c in row) for row in matrix)

    @classmethod
    def from_images(cls, source: WeilAlgebra, target: WeilAlgebra,
                    images: Sequence[WeilElement]) -> "MorphismMatrix":
        if len(images) != source.dim:
            raise AlgebraMismatch("need {} images, got {}".format(source.dim, len(images)))
        images = [target.coerce(image) for image in images]
        return cls(source, target, [[images[i].coeffs[k] for i in range(source.dim)]
                                    for k in range(target.dim)])

    def image(self, i: int) -> WeilElement:
        return WeilElement(self.target, tuple(row[i] for row in self.matrix))

    def linear(self, a: WeilElement) -> WeilElement:
        a = self.source.coerce(a)
        zero = self.target.base.zero()
        out = []
        for row in self.matrix:
            total = zero
            for m, c in zip(row, a.coeffs):
                if m and c:
                    total = total + m * c
            out.append(total)
        return WeilElement(self.target, tuple(out))

    @cached_property
    def violation(self) -> Optional[str]:
        """First failed morphism condition, or None."""
        if self.linear(self.source.one()) != self.target.one():
            return "unit is not mapped to unit"
        images = [self.image(i) for i in range(self.source.dim)]
        for i in range(self.source.dim):
            for j in range(i, self.source.dim):
                product = self.source.basis_element(i) * self.source.basis_element(j)
                if self.linear(product) != images[i] * images[j]:
                    return "not multiplicative on basis pair ({}, {})".format(i, j)
        for n in augmentation_ideal_basis(self.source):
            if self.target.project(self.linear(n)) != 0:
                return "nilpotent ideal is not mapped into the nilpotent ideal"
        return None

    def __repr__(self):
        return "MorphismMatrix({} -> {})".format(self.source.label, self.target.label)


def check_morphism(M: MorphismMatrix) -> bool:
    return M.violation is None


def apply_morphism(M: MorphismMatrix, a: WeilElement) -> WeilElement:
    if M.violation is not None:
        raise NotAMorphism("{}: {}".format(M, M.violation))
    return M.linear(a)


def augmentation(A: WeilAlgebra) -> MorphismMatrix:
    """pi^A: A -> jet(0) = K."""
    K = jet(0, base=A.base)
    return MorphismMatrix.from_images(A, K, [K.embed(A.project(A.basis_element(i))) for i in range(A.dim)])


def unit_section(A: WeilAlgebra) -> MorphismMatrix:
    """sigma^A: K = jet(0) -> A."""
    return MorphismMatrix.from_images(jet(0, base=A.base), A, [A.one()])


def monomial_morphism(source: WeilPresentation, target: WeilPresentation,
                      var_map: Sequence[Optional[int]]) -> MorphismMatrix:
    """Substitution X_i -> Y_{var_map[i]}, with None sending X_i to 0."""
    if len(var_map) != source.nvars:
        raise AlgebraMismatch("variable map of length {} for {} variables".format(len(var_map), source.nvars))
    images = []
    for exps in source.basis:
        mapped = [0] * target.nvars
        killed = False
        for i, e in enumerate(exps):
            if e == 0:
                continue
            if var_map[i] is None:
                killed = True
                break
            mapped[var_map[i]] += e
        images.append(target.zero() if killed else target.monomial(mapped))
    return MorphismMatrix.from_images(source, target, images)


def truncation(k: int, j: int, base=None) -> MorphismMatrix:
    """jet(k) -> jet(j), delta -> delta, for j <= k."""
    if not 0 <= j <= k:
        raise InvalidPreset("truncation jet({}) -> jet({}) needs 0 <= j <= k".format(k, j))
    return monomial_morphism(jet(k, base=base), jet(j, base=base), [0])


def _factor_of(algebra: WeilPresentation, factor: int, constructions) -> WeilPresentation:
    if algebra.construction not in constructions or algebra.factors is None:
        raise InvalidPreset("{} is not a {} construction".format(algebra.label, "/".join(constructions)))
    return algebra.factors[factor]


def factor_injection(algebra: WeilPresentation, factor: int) -> MorphismMatrix:
    """A -> A (x) B (or the Whitney sum), onto the factor's own variable block."""
    part = _factor_of(algebra, factor, ("tensor", "whitney", "whitney_over"))
    block = algebra.variable_block(factor)
    return monomial_morphism(part, algebra, list(block))


def factor_projection(algebra: WeilPresentation, factor: int) -> MorphismMatrix:
    """A (+)_K B -> A (or B): the other block's variables go to 0."""
    part = _factor_of(algebra, factor, ("whitney",))
    block = algebra.variable_block(factor)
    var_map = [i - block.start if i in block else None for i in range(algebra.nvars)]
    return monomial_morphism(algebra, part, var_map)
