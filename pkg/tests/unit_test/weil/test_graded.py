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

import pytest

from weilcalc.errors import NotATensor, NotAUnit, Ungraded
from weilcalc.scalars import RingDescriptor
from weilcalc.weil import (TableAlgebra, flip, graded_endo, grading_derivation, jet, permute_variables,
                           scale_action, star, star_inverse, tangent, tensor, truncated, variable_scale_action)
from weilcalc.weil.graded import graded_components, left_distributivity_counterexample, star_identity

MOD = RingDescriptor.modular(101)


def graded_algebras(ring):
    return [jet(3, ring), tangent(2, ring), truncated(2, 2, ring), tensor(jet(2, ring), tangent(1, ring))]


def test_scale_action_on_jet():
    A = jet(2)
    a = A.element([3, 5, 7])
    assert scale_action(2, a) == A.element([3, 10, 28])
    assert scale_action(1, a) == a
    with pytest.raises(NotAUnit):
        scale_action(0, a)


def test_scale_action_laws():
    rng = random.Random(0)
    num_tests = 50
    for A in graded_algebras(MOD):
        for _ in range(num_tests):
            a, b = A.random_element(rng), A.random_element(rng)
            r, s = MOD.random_unit(rng), MOD.random_unit(rng)
            assert scale_action(r, a * b) == scale_action(r, a) * scale_action(r, b)
            assert scale_action(r, scale_action(s, a)) == scale_action(r * s, a)
            t = MOD.random_element(rng)
            assert scale_action(r, A.embed(t)) == A.embed(t)


def test_variable_scale_and_permutation():
    A = tangent(2)
    e1, e2 = A.gens()
    a = 1 + 2 * e1 + 3 * e2 + 4 * e1 * e2
    assert variable_scale_action([2, 3], a) == 1 + 4 * e1 + 9 * e2 + 24 * e1 * e2
    assert permute_variables(a, [1, 0]) == 1 + 3 * e1 + 2 * e2 + 4 * e1 * e2
    assert variable_scale_action([5, 5], a) == scale_action(5, a)


def test_grading_derivation_is_a_derivation():
    rng = random.Random(1)
    for A in graded_algebras(MOD):
        for _ in range(20):
            a, b = A.random_element(rng), A.random_element(rng)
            assert grading_derivation(a * b) == grading_derivation(a) * b + a * grading_derivation(b)


def test_flip():
    A = tensor(tangent(1), tangent(1))
    a = A.element([1, 2, 3, 4])
    assert flip(a) == A.element([1, 3, 2, 4])
    assert flip(flip(a)) == a
    rng = random.Random(2)
    B = tensor(jet(2, MOD), tangent(1, MOD))
    for _ in range(20):
        a, b = B.random_element(rng), B.random_element(rng)
        assert flip(a * b) == flip(a) * flip(b)
    with pytest.raises(NotATensor):
        flip(jet(2).gen(0))


def test_star_length_one_grading():
    A = tangent(1)
    b, a = A.element([2, 3]), A.element([5, 7])
    # (b0 a0, b0 a1 + b1 a0^2)
    assert star(b, a) == A.element([10, 2 * 7 + 3 * 25])
    assert star_inverse(a) == A.element([1 / A.base.coerce(5), -A.base.coerce(7) / 125])
    assert graded_endo(a)(b) == A.element([2, 15])


def test_star_identity_and_scalars():
    A = jet(3)
    b = A.element([1, 2, 3, 4])
    one = star_identity(A)
    assert star(b, one) == b
    assert star(one, b) == b
    r = A.base.coerce(3)
    assert star(b, A.embed(r)) == A.element([r * 1, r ** 2 * 2, r ** 3 * 3, r ** 4 * 4])
    assert star_inverse(one) == one
    with pytest.raises(NotAUnit):
        star_inverse(A.gen(0))


def test_star_near_ring_laws():
    rng = random.Random(3)
    num_tests = 30
    for A in graded_algebras(MOD):
        for _ in range(num_tests):
            a, b, c = A.random_element(rng), A.random_element(rng), A.random_element(rng)
            assert star(star(c, b), a) == star(c, star(b, a))
            assert star(b + c, a) == star(b, a) + star(c, a)
            u = A.random_unit(rng)
            x = star_inverse(u)
            assert star(u, x) == A.one()
            assert star(x, u) == A.one()


@pytest.mark.parametrize("ring_text", ["rat", "mod:2", "mod:3", "mod:101"])
def test_left_distributivity_fails(ring_text):
    b, a, a2 = left_distributivity_counterexample(RingDescriptor.parse(ring_text))
    A = b.algebra
    gap = star(b, a + a2) - (star(b, a) + star(b, a2))
    assert gap == A.element([0, 0, 2, 3])
    assert gap != A.zero()


def test_graded_endo_laws():
    rng = random.Random(4)
    num_tests = 30
    for A in graded_algebras(MOD):
        for _ in range(num_tests):
            a, a2 = A.random_element(rng), A.random_element(rng)
            b, c = A.random_element(rng), A.random_element(rng)
            endo = graded_endo(a)
            assert endo(b + c) == endo(b) + endo(c)
            assert endo(b * c) == endo(b) * endo(c)
            assert graded_endo(a2)(endo(b)) == graded_endo(star(a, a2))(b)
            r = MOD.random_unit(rng)
            assert graded_endo(A.embed(r))(b) == scale_action(r, b)


def test_graded_endo_invertible_exactly_for_unit_degree_zero():
    rng = random.Random(5)
    A = jet(3, MOD)
    for _ in range(20):
        u = A.random_unit(rng)
        back = graded_endo(star_inverse(u))
        b = A.random_element(rng)
        assert back(graded_endo(u)(b)) == b
    # a0 = 0: delta^2 -> delta^4 = 0, so the endomorphism has a kernel
    square = A.monomial([2])
    assert graded_endo(square)(square) == A.zero()


def test_ungraded_table_rejected():
    K = RingDescriptor.rationals()
    A = TableAlgebra(K, 2, {(1, 1): [0, 0]})
    with pytest.raises(Ungraded):
        star(A.one(), A.one())
    with pytest.raises(Ungraded):
        scale_action(2, A.one())


def test_graded_components_and_structure_constants():
    A = tangent(2)
    assert A.is_graded
    assert A.is_nilpotent
    e1, e2 = A.gens()
    a = 1 + 2 * e1 + 3 * e2 + 4 * e1 * e2
    parts = graded_components(a)
    assert parts == [A.one(), 2 * e1 + 3 * e2, 4 * e1 * e2]
    assert parts[0] + parts[1] + parts[2] == a
    assert A.structure_constants(1, 2) == [0, 0, 0, 1]
    assert A.structure_constants(1, 1) == [0, 0, 0, 0]

    B = TableAlgebra(RingDescriptor.rationals(), 2, {(1, 1): [0, 1]})
    assert not B.is_graded
    assert not B.is_nilpotent
    with pytest.raises(Ungraded):
        graded_components(B.one())
