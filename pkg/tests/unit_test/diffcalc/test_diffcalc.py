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

from weilcalc.diffcalc import (CubicPoint, check_embedding, cubic_difference, cubic_dq, cubic_injection,
                               cubic_is_nonsingular, cubic_point, cubic_projection, evaluate_symbolic,
                               extended_jet, extended_tangent, g_embed, g_unembed, rho_cubic, rho_simplicial,
                               second_differential, simplicial_dq, simplicial_injection,
                               simplicial_is_nonsingular, simplicial_point, simplicial_projection,
                               symbolic_simplicial)
from weilcalc.errors import ArityMismatch, NotAUnit, NotInImage, NotPolynomial, SingularTime
from weilcalc.scalars import RingDescriptor
from weilcalc.smoothexpr import from_polymap, parse
from weilcalc.verify.generators import random_cubic_point, random_polymap, random_simplicial_point

RAT = RingDescriptor.rationals()
MOD = RingDescriptor.modular(101)


def test_cubic_dq_square():
    f = parse("x0^2")
    # 2 x v + t v^2
    assert cubic_dq(f, [3], [1], 2, RAT) == (Fraction(8),)
    assert cubic_dq(f, [3], [2], Fraction(1, 2), RAT) == (Fraction(14),)
    with pytest.raises(SingularTime):
        cubic_dq(f, [3], [1], 0, RAT)


def test_cubic_order_one_matches_dq():
    f = parse("x0^3 - x0*x1")
    p = cubic_point([[1, 2], [3, -1]], [0, 5], RAT)
    assert cubic_difference(f, p, RAT) == cubic_dq(f, [1, 2], [3, -1], 5, RAT)
    assert extended_tangent(f, p, RAT).time == p.time


def test_cubic_point_shape():
    with pytest.raises(ArityMismatch):
        CubicPoint(2, ((0,),) * 3, (0,) * 4)
    p = cubic_point([[1], [2], [3], [4]], [0, 1, 1, 1], RAT)
    X, U, t = p.split()
    assert CubicPoint.join(X, U, t) == p
    assert cubic_is_nonsingular(p, RAT)
    assert not cubic_is_nonsingular(cubic_point([[1], [2], [3], [4]], [0, 1, 0, 1], RAT), RAT)


def test_second_simplicial_quotient_of_square():
    f = parse("x0^2")
    for s1, s2 in [(1, 2), (3, -5), (Fraction(1, 2), 7)]:
        p = simplicial_point([[0], [1], [0]], [s1, s2], RAT)
        assert simplicial_dq(f, p, RAT) == (Fraction(1),)


def test_simplicial_singular_times():
    p = simplicial_point([[0], [1], [0]], [2, 2], RAT)
    assert not simplicial_is_nonsingular(p, RAT)
    with pytest.raises(SingularTime):
        simplicial_dq(parse("x0^2"), p, RAT)


def test_second_differential():
    assert second_differential(parse("x0^2"), [3], [2], [5], RAT) == (Fraction(20),)
    # mixed partial of x0^2 * x1 is 2 x0
    assert second_differential(parse("x0^2*x1"), [1, 2], [1, 0], [0, 1], RAT) == (Fraction(2),)


def test_embedding_round_trip():
    rng = random.Random(0)
    for k in range(4):
        p = random_simplicial_point(RAT, rng, k, 2)
        q = g_embed(p, RAT)
        assert g_unembed(q, RAT) == p
    bad = cubic_point([[0], [1], [1], [0]], [0, 1, 1, 1], RAT)
    with pytest.raises(NotInImage):
        g_unembed(bad, RAT)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_embedding_square_rational(k):
    rng = random.Random(k)
    f = parse("x0^2*x1 + 1/(1 + x0^2), x1^3 - x0")
    for _ in range(5):
        p = random_simplicial_point(RAT, rng, k, 2)
        assert check_embedding(f, p, RAT)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_embedding_square_polynomial_mod(k):
    rng = random.Random(10 + k)
    for _ in range(5):
        f = from_polymap(random_polymap(MOD, rng, 2, 2, 3))
        p = random_simplicial_point(MOD, rng, k, 2)
        assert check_embedding(f, p, MOD)


def test_simplicial_equivariance():
    rng = random.Random(1)
    f = parse("x0^3 + x0*x1 - 1/(1 + x1^2)")
    for _ in range(5):
        p = random_simplicial_point(RAT, rng, 3, 2)
        r = RAT.random_unit(rng)
        assert extended_jet(f, rho_simplicial(r, p, RAT), RAT) == rho_simplicial(r, extended_jet(f, p, RAT), RAT)
    with pytest.raises(NotAUnit):
        rho_simplicial(0, p, RAT)


def test_cubic_equivariance():
    rng = random.Random(2)
    for _ in range(5):
        f = from_polymap(random_polymap(MOD, rng, 2, 1, 3))
        p = random_cubic_point(MOD, rng, 2, 2)
        r = MOD.random_unit(rng)
        assert extended_tangent(f, rho_cubic(r, p, MOD), MOD) == rho_cubic(r, extended_tangent(f, p, MOD), MOD)


def test_projections_commute():
    rng = random.Random(3)
    f = parse("x0^2*x1 - x1^3")
    p = random_cubic_point(RAT, rng, 3, 2)
    for j in range(4):
        assert extended_tangent(f, cubic_projection(p, j), RAT) == cubic_projection(extended_tangent(f, p, RAT), j)
    assert cubic_projection(cubic_injection(p, 4, RAT), 3) == p
    s = random_simplicial_point(RAT, rng, 3, 2)
    for j in range(4):
        assert extended_jet(f, simplicial_projection(s, j), RAT) == \
            simplicial_projection(extended_jet(f, s, RAT), j)
    assert simplicial_projection(simplicial_injection(s, 5, RAT), 3) == s
    with pytest.raises(ArityMismatch):
        cubic_injection(p, 2, RAT)


@pytest.mark.parametrize("ring", [RAT, MOD])
def test_symbolic_matches_quotients(ring):
    rng = random.Random(4)
    for k in range(1, 4):
        f = from_polymap(random_polymap(ring, rng, 2, 2, 3))
        p = random_simplicial_point(ring, rng, k, 2)
        components = symbolic_simplicial(f, p.vectors, ring)
        assert len(components) == k
        assert evaluate_symbolic(components, p.times, ring) == list(extended_jet(f, p, ring).vectors[1:])


def test_symbolic_at_zero_times_is_the_jet():
    f = parse("x0^2")
    components = symbolic_simplicial(f, [[3], [1], [0]], RAT)
    assert evaluate_symbolic(components, [0, 0], RAT) == [(Fraction(6),), (Fraction(1),)]
    with pytest.raises(NotPolynomial):
        symbolic_simplicial(parse("1/x0"), [[1], [1]], RAT)
