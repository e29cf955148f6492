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

"""T^A f and its compatibility with tensor products, Whitney sums and morphisms."""

from typing import Any, List, Sequence, Tuple

from weilcalc.errors import AlgebraMismatch, ConsistencyError, InvalidPreset
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polymap import eval_over
from weilcalc.reports import EqualityReport, compare
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap
from weilcalc.weil.algebra import WeilAlgebra, WeilElement
from weilcalc.weil.morphism import MorphismMatrix, apply_morphism, factor_injection, factor_projection
from weilcalc.weil.presentation import WeilPresentation, jet, tensor, whitney_sum

logger = init_logger(__name__)


def pushforward(f: ExprMap, A: WeilAlgebra, x: Sequence[Any],
                nu: Sequence[WeilElement]) -> Tuple[Tuple[Any, ...], Tuple[WeilElement, ...]]:
    """(f(x), T^A_x f(nu)).

    Computed twice: by evaluating f over A at x + nu, and by extending the Taylor
    polynomial of order nilpotency_order(A) - 1 to the nilpotent argument nu. The two
    must agree exactly.
    """
    # jetcalc builds on this package
    from weilcalc.jetcalc.taylor import taylor

    if len(x) != f.arity or len(nu) != f.arity:
        raise AlgebraMismatch("point and nilpotent part need {} coordinates".format(f.arity))
    nu = [A.coerce(n) for n in nu]
    for n in nu:
        if A.project(n) != 0:
            raise AlgebraMismatch("{} is not in the nilpotent ideal".format(n))
    x = [A.base.coerce(c) for c in x]
    base_value = eval_expr(f, A.base, x)

    direct = eval_expr(f, A, [A.embed(c) + n for c, n in zip(x, nu)])
    fiber = tuple(A.nilpotent_part(a) for a in direct)
    if tuple(A.project(a) for a in direct) != base_value:
        raise ConsistencyError("pi o T^A f differs from f o pi at {}".format(x))

    tay = taylor(f, x, A.nilpotency_order - 1, A.base)
    extended = eval_over(tay.poly, A, nu)
    if extended != fiber:
        raise ConsistencyError("direct evaluation {} disagrees with the Taylor extension {}".format(
            fiber, extended))
    return base_value, fiber


def tensor_to_nested(AB: WeilPresentation, nested: WeilPresentation, a: WeilElement) -> WeilElement:
    """basis(A (x) B) = basis(A) x basis(B): collect the A-part of each monomial as a scalar of B over A."""
    A, B = AB.factors
    inner = nested.base
    coeffs: List[Any] = [inner.zero() for _ in range(nested.dim)]
    for exps, c in zip(AB.basis, a.coeffs):
        if not c:
            continue
        a_part, b_part = exps[:A.nvars], exps[A.nvars:]
        k = B.index[b_part]
        coeffs[k] = coeffs[k] + inner.monomial(a_part, c)
    return WeilElement(nested, tuple(coeffs))


def nested_to_tensor(AB: WeilPresentation, b: WeilElement) -> WeilElement:
    A, B = AB.factors
    coeffs = [AB.base.zero()] * AB.dim
    for b_exps, inner in zip(B.basis, b.coeffs):
        for a_exps, c in zip(A.basis, inner.coeffs):
            if c:
                coeffs[AB.index[a_exps + b_exps]] = c
    return WeilElement(AB, tuple(coeffs))


def nested_vs_direct(f: ExprMap, A: WeilPresentation, B: WeilPresentation,
                     z: Sequence[WeilElement]) -> EqualityReport:
    """f over A (x) B against f over B with A-valued scalars, i.e. T^B(T^A f)."""
    AB = tensor(A, B)
    nested = B.over(A)
    z = [AB.coerce(a) for a in z]
    direct = eval_expr(f, AB, z)
    iterated = eval_expr(f, nested, [tensor_to_nested(AB, nested, a) for a in z])
    return compare("nested-vs-direct", direct, tuple(nested_to_tensor(AB, b) for b in iterated),
                   algebra=AB.label)


def jet_tower(k: int, base: CommutativeRing) -> WeilPresentation:
    """jet(1) over jet(1) over ... over base, k levels; level i carries the generator of X_i in tangent(k)."""
    if k < 1:
        raise InvalidPreset("a jet tower needs at least one level, got {}".format(k))
    tower = jet(1, base)
    for _ in range(k - 1):
        tower = jet(1, tower)
    return tower


def tangent_to_tower(T: WeilPresentation, tower: WeilPresentation, a: WeilElement) -> WeilElement:
    levels = [tower]
    while isinstance(levels[-1].base, WeilAlgebra):
        levels.append(levels[-1].base)
    # innermost level first
    gens = [tower.coerce(level.gen(0)) for level in reversed(levels)]
    if len(gens) != T.nvars:
        raise AlgebraMismatch("{} has {} levels, {} has {} generators".format(
            tower.label, len(gens), T.label, T.nvars))
    result = tower.zero()
    for exps, c in zip(T.basis, a.coeffs):
        if not c:
            continue
        term = tower.coerce(c)
        for g, e in zip(gens, exps):
            if e:
                term = term * g
        result = result + term
    return result


def _tower_terms(b: WeilElement):
    for exps, c in zip(b.algebra.basis, b.coeffs):
        if isinstance(c, WeilElement):
            for inner_exps, inner in _tower_terms(c):
                yield inner_exps + exps, inner
        elif c:
            yield exps, c


def tower_to_tangent(T: WeilPresentation, b: WeilElement) -> WeilElement:
    coeffs = [T.base.zero()] * T.dim
    for exps, c in _tower_terms(b):
        coeffs[T.index[exps]] = c
    return WeilElement(T, tuple(coeffs))


def tower_vs_tangent(f: ExprMap, T: WeilPresentation, z: Sequence[WeilElement]) -> EqualityReport:
    """f over T = tangent(k) against f over the k-level jet(1) tower, i.e. T^jet(1) applied k times."""
    tower = jet_tower(T.nvars, T.base)
    z = [T.coerce(a) for a in z]
    direct = eval_expr(f, T, z)
    iterated = eval_expr(f, tower, [tangent_to_tower(T, tower, a) for a in z])
    return compare("tower-vs-tangent", direct, tuple(tower_to_tangent(T, b) for b in iterated),
                   algebra=T.label)


def whitney_pushforward_check(f: ExprMap, A: WeilPresentation, B: WeilPresentation, x: Sequence[Any],
                              nu_A: Sequence[WeilElement], nu_B: Sequence[WeilElement]) -> EqualityReport:
    """T^{A (+) B} f against the fiberwise pair (T^A f, T^B f)."""
    W = whitney_sum(A, B)
    inject_A, inject_B = factor_injection(W, 0), factor_injection(W, 1)
    nu = [apply_morphism(inject_A, a) + apply_morphism(inject_B, b) for a, b in zip(nu_A, nu_B)]
    base_value, fiber = pushforward(f, W, x, nu)
    project_A, project_B = factor_projection(W, 0), factor_projection(W, 1)
    lhs = (base_value,
           tuple(apply_morphism(project_A, w) for w in fiber),
           tuple(apply_morphism(project_B, w) for w in fiber))
    value_A, fiber_A = pushforward(f, A, x, nu_A)
    value_B, fiber_B = pushforward(f, B, x, nu_B)
    if value_A != value_B:
        raise ConsistencyError("base values over {} and {} differ".format(A.label, B.label))
    return compare("whitney", lhs, (value_A, fiber_A, fiber_B), algebra=W.label)


def naturality_check(f: ExprMap, phi: MorphismMatrix, x: Sequence[Any],
                     nu: Sequence[WeilElement]) -> EqualityReport:
    """phi o T^A f = T^B f o phi for a validated morphism phi: A -> B."""
    A, B = phi.source, phi.target
    z = [A.embed(A.base.coerce(c)) + A.coerce(n) for c, n in zip(x, nu)]
    lhs = tuple(apply_morphism(phi, a) for a in eval_expr(f, A, z))
    rhs = eval_expr(f, B, [apply_morphism(phi, a) for a in z])
    return compare("naturality", lhs, rhs, morphism=repr(phi))
