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

from weilcalc.errors import NotAMorphism
from weilcalc.scalars import RingDescriptor
from weilcalc.weil import (MorphismMatrix, TableAlgebra, apply_morphism, augmentation, check_morphism,
                           factor_injection, factor_projection, jet, tangent, tensor, truncation, unit_section,
                           validate, whitney_sum)


@pytest.mark.parametrize("A", [jet(3), tangent(2), whitney_sum(jet(2), tangent(1))])
def test_augmentation_and_section(A):
    pi, sigma = augmentation(A), unit_section(A)
    assert check_morphism(pi)
    assert check_morphism(sigma)
    rng = random.Random(0)
    for _ in range(10):
        t = A.base.random_element(rng)
        assert apply_morphism(pi, apply_morphism(sigma, jet(0).embed(t))) == jet(0).embed(t)


def test_truncation_morphism():
    M = truncation(2, 1)
    assert check_morphism(M)
    A, B = jet(2), jet(1)
    assert apply_morphism(M, A.element([1, 2, 3])) == B.element([1, 2])


def test_non_morphism_rejected():
    A = jet(1)
    M = MorphismMatrix.from_images(A, A, [A.one(), A.one()])
    assert not check_morphism(M)
    assert M.violation is not None
    with pytest.raises(NotAMorphism):
        apply_morphism(M, A.gen(0))


def test_factor_maps():
    ring = RingDescriptor.modular(101)
    A, B = jet(2, ring), tangent(1, ring)
    T, W = tensor(A, B), whitney_sum(A, B)
    for M in [factor_injection(T, 0), factor_injection(T, 1), factor_injection(W, 0),
              factor_projection(W, 0), factor_projection(W, 1)]:
        assert check_morphism(M)
    a = A.element([1, 2, 3])
    assert apply_morphism(factor_projection(W, 0), apply_morphism(factor_injection(W, 0), a)) == a


def test_validate_idempotent_table():
    K = RingDescriptor.rationals()
    A = TableAlgebra(K, 2, {(1, 1): [0, 1]})
    report = validate(A)
    assert not report.ok
    assert any(v.startswith("nilpotency") for v in report.violations)


def test_validate_non_associative_table():
    K = RingDescriptor.rationals()
    # jet(2) with e1*e2 perturbed from 0 to e2
    structure = {(1, 1): [0, 0, 1], (1, 2): [0, 0, 1], (2, 1): [0, 0, 1]}
    report = validate(TableAlgebra(K, 3, structure))
    assert any(v.startswith("associativity") for v in report.violations)


def test_validate_table_jet():
    K = RingDescriptor.rationals()
    report = validate(TableAlgebra(K, 3, {(1, 1): [0, 0, 1]}, grading=[0, 1, 2]))
    assert report.ok
    assert report.nilpotency == 3
    assert "grading" in report.checks
