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
import random

import pytest

from weilcalc.errors import ArityMismatch, NotAUnit, NotPolynomial
from weilcalc.jetcalc import (classical_differential, factorial_check, jet_direction, jet_from_taylor,
                              normalized_diff, radial_expansion, simplicial_jet, taylor, taylor_chain,
                              taylor_eqn_rhs, weighted_multi_indices)
from weilcalc.polymap import PolyMap
from weilcalc.scalars import ModInt, RingDescriptor
from weilcalc.smoothexpr import eval_expr, parse
from weilcalc.verify.generators import random_point, random_vectors

RAT = RingDescriptor.rationals()


def test_taylor_reciprocal():
    tay = taylor(parse("1/(1 + x0)"), [0], 3, RAT)
    assert tay.value == (Fraction(1),)
    assert [tay.coefficients(i) for i in range(1, 4)] == [[-1], [1], [-1]]
    assert tay.order == 3


def test_taylor_square_mod5():
    mod5 = RingDescriptor.modular(5)
    tay = taylor(parse("x0^2"), [2], 1, mod5)
    assert tay.value == (ModInt(4, 5),)
    assert tay.coefficients(1) == [ModInt(4, 5)]
    data = tay.to_json()
    assert data["value"] == [4]
    assert data["order"] == 1


def test_taylor_square_mod2():
    # the h^2 coefficient survives although 2 is not invertible
    mod2 = RingDescriptor.modular(2)
    tay = taylor(parse("x0^2"), [1], 2, mod2)
    assert tay.coefficients(1) == [ModInt(0, 2)]
    assert tay.coefficients(2) == [ModInt(1, 2)]
    with pytest.raises(NotAUnit):
        factorial_check(parse("x0^2"), [1], [1], 2, mod2)


def test_taylor_two_variables():
    tay = taylor(parse("x0*x1"), [1, 2], 2, RAT)
    assert tay.value == (Fraction(2),)
    assert tay.poly == PolyMap.from_terms(RAT, 2, 1, [(0, [1, 0], 2), (0, [0, 1], 1), (0, [1, 1], 1)])
    assert tay.homogeneous_part(2) == PolyMap.from_terms(RAT, 2, 1, [(0, [1, 1], 1)])
    assert tay.evaluate([1, 1]) == (Fraction(4),)


def test_taylor_polynomial_is_exact():
    f = parse("x0^3 - 2*x0*x1 + 5")
    rng = random.Random(0)
    for _ in range(10):
        x, h = random_point(RAT, rng, 2), random_point(RAT, rng, 2)
        tay = taylor(f, x, 3, RAT)
        moved = [a + b for a, b in zip(x, h)]
        lhs = eval_expr(f, RAT, moved)[0]
        assert lhs == tay.value[0] + tay.evaluate(h)[0]


def test_normalized_diff_examples():
    f = parse("x0^3")
    assert normalized_diff(f, [1], [[1]], [2], RAT) == (Fraction(3),)
    assert classical_differential(f, [1], [[1], [1]], RAT) == (Fraction(6),)
    assert factorial_check(f, [1], [1], 2, RAT)
    with pytest.raises(ArityMismatch):
        normalized_diff(f, [1], [[1]], [1, 1], RAT)


def test_normalized_diff_order_independent():
    f = parse("x0^2*x1 + 1/(1 + x1^2)")
    rng = random.Random(1)
    for _ in range(10):
        x = random_point(RAT, rng, 2)
        vs = random_vectors(RAT, rng, 3, 2)
        alpha = [1, 2, 1]
        reference = normalized_diff(f, x, vs, alpha, RAT)
        assert normalized_diff(f, x, vs, alpha, RAT, order=[2, 0, 1]) == reference
        assert normalized_diff(f, x, vs, alpha, RAT, order=[1, 2, 0]) == reference


@pytest.mark.parametrize("ring_text,j", [("rat", 1), ("rat", 3), ("mod:101", 2), ("mod:101", 4)])
def test_factorial_check(ring_text, j):
    ring = RingDescriptor.parse(ring_text)
    rng = random.Random(2)
    f = parse("x0^4 + 3*x0*x1^2 - x1")
    for _ in range(10):
        assert factorial_check(f, random_point(ring, rng, 2), random_point(ring, rng, 2), j, ring)


def test_simplicial_jet_square():
    jv = simplicial_jet(parse("x0^2"), [[3], [1], [0]], RAT)
    assert jv.components == ((9,), (6,), (1,))
    assert jv.fiber() == ((6,), (1,))
    assert jet_direction(parse("x0^2"), [3], [1], 2, RAT) == jv
    assert jv.to_json(RAT) == {"order": 2, "components": [["9"], ["6"], ["1"]]}


def test_jet_direction_order_zero():
    jv = jet_direction(parse("x0^2 + 1"), [2], [1], 0, RAT)
    assert jv.components == ((5,),)


@pytest.mark.parametrize("ring_text", ["rat", "mod:101"])
def test_jet_from_taylor(ring_text):
    ring = RingDescriptor.parse(ring_text)
    rng = random.Random(3)
    f = parse("x0^3*x1 - 7*x1^2 + x0")
    for k in range(1, 4):
        x = random_point(ring, rng, 2)
        vs = random_vectors(ring, rng, k, 2)
        fiber = jet_from_taylor(f, x, k, vs, ring)
        assert fiber == simplicial_jet(f, [x] + vs, ring).fiber()


def test_weighted_multi_indices():
    assert sorted(weighted_multi_indices(2, 2)) == [(0, 1), (2, 0)]
    assert sorted(weighted_multi_indices(3, 3)) == [(0, 0, 1), (1, 1, 0), (3, 0, 0)]
    assert list(weighted_multi_indices(2, 0)) == [(0, 0)]


def test_taylor_eqn_rhs():
    rng = random.Random(4)
    f = parse("x0^2*x1 + 1/(1 + x0^2)")
    for _ in range(5):
        x = random_point(RAT, rng, 2)
        vs = random_vectors(RAT, rng, 3, 2)
        jv = simplicial_jet(f, [x] + vs, RAT)
        for j in range(4):
            assert taylor_eqn_rhs(f, x, vs, j, RAT) == jv.components[j]
    with pytest.raises(ArityMismatch):
        taylor_eqn_rhs(f, [0, 0], [[1, 1]], 2, RAT)


def test_taylor_chain():
    rng = random.Random(5)
    g = parse("1/(1 + x0^2) + x1^3")
    h = parse("x0^2 + x1, x0*x1 - 1")
    for k in range(4):
        x = random_point(RAT, rng, 2)
        assert taylor_chain(g, h, x, k, RAT)


def test_radial_expansion():
    expansion = radial_expansion(parse("x0^3"), [1], [1], 2, RAT)
    assert expansion.value == (1,)
    assert expansion.coefficients == ((3,), (3,))
    assert expansion.remainder_at_zero() == (0,)
    with pytest.raises(NotPolynomial):
        radial_expansion(parse("1/x0"), [1], [1], 2, RAT)
