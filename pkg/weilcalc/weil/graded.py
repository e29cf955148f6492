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

"""Canonical automorphisms and the graded near-ring structure of Weil algebras.

Two products are provided on a graded algebra A = A_0 + ... + A_k with A_0 = K:

* ``star(b, a)`` is the literal near-ring product u_i = sum_j b_j * [a^(j+1)]_(i-j),
  which equals sum_j b_j * a^(j+1). It is associative and right-distributive, with 1 as
  two-sided identity, but it is not left-distributive and b -> b * a is not multiplicative.
* ``graded_endo(a)`` is b -> sum_j b_j * a^j. It is an algebra endomorphism, composes as
  endo(a') o endo(a) = endo(a star a'), and for a = r*1 gives the canonical K^x-action.
"""

from functools import partial
from typing import Any, Callable, List, Sequence, Tuple

from weilcalc.errors import AlgebraMismatch, NotATensor, NotAUnit, Ungraded
from weilcalc.weil.algebra import WeilAlgebra, WeilElement
from weilcalc.weil.presentation import WeilPresentation, jet, tensor


def _graded(algebra: WeilAlgebra) -> WeilAlgebra:
    if algebra.grading is None:
        raise Ungraded("{} carries no grading".format(algebra.label))
    for i, d in enumerate(algebra.grading):
        if d == 0 and i != algebra.unit_index:
            raise Ungraded("degree-0 part of {} is larger than K".format(algebra.label))
    return algebra


def _presentation(a: WeilElement) -> WeilPresentation:
    if not isinstance(a.algebra, WeilPresentation):
        raise AlgebraMismatch("{} is not a monomial presentation".format(a.algebra.label))
    return a.algebra


def scale_action(r: Any, a: WeilElement) -> WeilElement:
    """Multiply the degree-d part of a by r^d."""
    algebra = _graded(a.algebra)
    r = algebra.base.coerce(r)
    if not algebra.base.is_unit(r):
        raise NotAUnit("scale factor {} is not a unit".format(r))
    powers = [algebra.base.one()]
    for _ in range(algebra.top_degree):
        powers.append(powers[-1] * r)
    return WeilElement(algebra, tuple(powers[d] * c for d, c in zip(algebra.grading, a.coeffs)))


def variable_scale_action(rs: Sequence[Any], a: WeilElement) -> WeilElement:
    """X_i -> r_i X_i; the (K^x)^n action on a monomial presentation."""
    algebra = _presentation(a)
    if len(rs) != algebra.nvars:
        raise AlgebraMismatch("{} scale factors for {} variables".format(len(rs), algebra.nvars))
    rs = [algebra.base.coerce(r) for r in rs]
    for r in rs:
        if not algebra.base.is_unit(r):
            raise NotAUnit("scale factor {} is not a unit".format(r))
    coeffs = []
    for exps, c in zip(algebra.basis, a.coeffs):
        for r, e in zip(rs, exps):
            if e:
                c = c * r ** e
        coeffs.append(c)
    return WeilElement(algebra, tuple(coeffs))


def permute_variables(a: WeilElement, perm: Sequence[int]) -> WeilElement:
    """X_i -> X_perm[i]; the presentation must be stable under the permutation."""
    algebra = _presentation(a)
    if sorted(perm) != list(range(algebra.nvars)):
        raise AlgebraMismatch("{} is not a permutation of {} variables".format(list(perm), algebra.nvars))
    coeffs = [algebra.base.zero()] * algebra.dim
    for exps, c in zip(algebra.basis, a.coeffs):
        image = [0] * algebra.nvars
        for i, e in enumerate(exps):
            image[perm[i]] = e
        k = algebra.index.get(tuple(image))
        if k is None:
            raise AlgebraMismatch("{} is not stable under {}".format(algebra.label, list(perm)))
        coeffs[k] = c
    return WeilElement(algebra, tuple(coeffs))


def flip(a: WeilElement) -> WeilElement:
    """A (x) B -> B (x) A, swapping the two variable blocks."""
    algebra = a.algebra
    if not isinstance(algebra, WeilPresentation) or algebra.construction != "tensor":
        raise NotATensor("{} was not built by tensor()".format(algebra.label))
    left, right = algebra.factors
    target = tensor(right, left)
    coeffs = [target.base.zero()] * target.dim
    for exps, c in zip(algebra.basis, a.coeffs):
        swapped = exps[left.nvars:] + exps[:left.nvars]
        coeffs[target.index[swapped]] = c
    return WeilElement(target, tuple(coeffs))


def grading_derivation(a: WeilElement) -> WeilElement:
    """(a_i) -> (i * a_i), the infinitesimal generator of the scale action."""
    algebra = _graded(a.algebra)
    return WeilElement(algebra, tuple(algebra.base.coerce(d) * c for d, c in zip(algebra.grading, a.coeffs)))


def _degree_zero(a: WeilElement) -> Any:
    return a.coeffs[a.algebra.unit_index]


def star(b: WeilElement, a: WeilElement) -> WeilElement:
    """b star a = sum_j b_j * a^(j+1) over the graded components b_j of b."""
    algebra = _graded(b.algebra)
    a = algebra.coerce(a)
    result = algebra.zero()
    power = a
    for component in algebra.components(b):
        if component:
            result = result + component * power
        power = power * a
    return result


def _apply_graded_endo(a: WeilElement, b: WeilElement) -> WeilElement:
    algebra = a.algebra
    b = algebra.coerce(b)
    result = algebra.zero()
    power = algebra.one()
    for component in algebra.components(b):
        if component:
            result = result + component * power
        power = power * a
    return result


def graded_endo(a: WeilElement) -> Callable[[WeilElement], WeilElement]:
    """b -> sum_j b_j * a^j."""
    _graded(a.algebra)
    return partial(_apply_graded_endo, a)


def star_inverse(a: WeilElement) -> WeilElement:
    """x with a star x = x star a = 1, solved one degree at a time."""
    algebra = _graded(a.algebra)
    a0 = _degree_zero(a)
    if not algebra.base.is_unit(a0):
        raise NotAUnit("degree-0 component {} is not a unit".format(a0))
    a0_inv = algebra.base.inv(a0)
    x = algebra.zero()
    for i, target in enumerate(algebra.components(algebra.one())):
        residual = target - algebra.components(star(a, x))[i]
        x = x + residual * a0_inv
    return x


def star_identity(algebra: WeilAlgebra) -> WeilElement:
    return _graded(algebra).one()


def left_distributivity_counterexample(base=None) -> Tuple[WeilElement, WeilElement, WeilElement]:
    """(b, a, a') in jet(3) with b star (a + a') != b star a + b star a' over every ring.

    b = d + d^2, a = 1, a' = d: the two sides differ by 2 d^2 + 3 d^3, and 2 and 3
    never vanish together.
    """
    algebra = jet(3, base=base)
    d = algebra.gen(0)
    return d + d * d, algebra.one(), d


def graded_components(a: WeilElement) -> List[WeilElement]:
    return _graded(a.algebra).components(a)
