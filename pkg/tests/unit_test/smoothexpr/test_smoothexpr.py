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

from weilcalc.errors import AlgebraMismatch, ArityMismatch, DomainError, ExprSyntaxError, NotPolynomial
from weilcalc.polymap import PolyMap
from weilcalc.scalars import ModInt, RingDescriptor
from weilcalc.smoothexpr import (Const, Inv, IntPow, Mul, Neg, ScalarMul, Var, compose, eval_expr, from_polymap,
                                 naturality_check, nested_vs_direct, parse, product, pushforward, to_polymap,
                                 to_text, whitney_pushforward_check)
from weilcalc.verify.generators import random_polymap
from weilcalc.weil import jet, tangent, tensor, truncated, truncation

RAT = RingDescriptor.rationals()


def test_parse_shapes():
    f = parse("x0^2 + 1/2*x1, 1/(1+x0)")
    assert f.arity == 2
    assert f.coarity == 2
    assert parse("1/2").outputs[0] == Const(Fraction(1, 2))
    assert parse("-3*x0").outputs[0] == ScalarMul(Fraction(-3), Var(0))
    assert parse("x0/x1").outputs[0] == Mul(Var(0), Inv(Var(1)))
    assert parse("1/x0").outputs[0] == Inv(Var(0))
    assert parse("-2^2").outputs[0] == Neg(IntPow(Const(Fraction(2)), 2))
    assert parse("x0", arity=3).arity == 3
    with pytest.raises(ArityMismatch):
        parse("x2", arity=2)


@pytest.mark.parametrize("text,position", [
    ("x0 +", 4),
    ("(x0", 3),
    ("x0^-1", 3),
    ("x0 $ x1", 3),
    ("1/0 + x0", 0),
    ("x0 x1", 3),
])
def test_parse_errors(text, position):
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse(text)
    assert excinfo.value.position == position


@pytest.mark.parametrize("text", [
    "x0^2 + 1/2*x1",
    "1/(1 + x0), x1 - x0",
    "-3*x0 + -(x1)^3",
    "(2)*x0 - 5/7",
    "x0 * 1/x1 + (x0 + 1)^0",
    "-2^2 - -1/2",
])
def test_print_parse_round_trip(text):
    f = parse(text)
    assert parse(to_text(f), arity=f.arity) == f


def test_to_text():
    assert to_text(parse("x0^2 + 1/2*x1")) == "((x0)^2 + (1/2 * x1))"
    assert str(parse("1/x0")) == "1/(x0)"


def test_eval_over_rings():
    f = parse("x0^2 + 1/2*x1")
    assert eval_expr(f, RAT, [3, 4]) == (Fraction(11),)
    mod5 = RingDescriptor.modular(5)
    assert eval_expr(parse("1/2*x0"), mod5, [1]) == (ModInt(3, 5),)
    with pytest.raises(ArityMismatch):
        eval_expr(f, RAT, [1])


@pytest.mark.parametrize("text,ring_text,point", [
    ("1/x0", "rat", [0]),
    ("1/x0", "mod:4", [2]),
    ("1/2*x0", "mod:2", [1]),
    ("1/(x0^2 - x1)", "rat", [2, 4]),
])
def test_domain_errors(text, ring_text, point):
    with pytest.raises(DomainError):
        eval_expr(parse(text), RingDescriptor.parse(ring_text), point)


def test_eval_over_jet():
    A = jet(2)
    value = eval_expr(parse("1/(1 + x0)"), A, [A.gen(0)])[0]
    assert value == A.element([1, -1, 1])
    with pytest.raises(DomainError):
        eval_expr(parse("1/x0"), A, [A.gen(0)])


def test_to_polymap():
    P = to_polymap(parse("(x0 + x1)^2"), RAT)
    assert P == PolyMap.from_terms(RAT, 2, 1, [(0, [2, 0], 1), (0, [1, 1], 2), (0, [0, 2], 1)])
    with pytest.raises(NotPolynomial):
        to_polymap(parse("1/x0"), RAT)


@pytest.mark.parametrize("ring_text", ["rat", "mod:101", "mod:12"])
def test_from_polymap_round_trip(ring_text):
    ring = RingDescriptor.parse(ring_text)
    rng = random.Random(0)
    for _ in range(20):
        P = random_polymap(ring, rng, 2, 2, 3)
        assert to_polymap(from_polymap(P), ring) == P


def test_compose_and_product():
    g, f = parse("x0^2"), parse("x0 + 1")
    assert eval_expr(compose(g, f), RAT, [2]) == (Fraction(9),)
    both = product(f, g)
    assert eval_expr(both, RAT, [2]) == (Fraction(3), Fraction(4))
    with pytest.raises(ArityMismatch):
        compose(parse("x0 * x1"), f)


def test_pushforward_square():
    A = jet(2)
    base_value, fiber = pushforward(parse("x0^2"), A, [3], [A.gen(0)])
    assert base_value == (Fraction(9),)
    assert fiber == (A.element([0, 6, 1]),)


def test_pushforward_rejects_bad_arguments():
    A = jet(2)
    with pytest.raises(AlgebraMismatch):
        pushforward(parse("x0^2"), A, [3], [A.one()])
    with pytest.raises(AlgebraMismatch):
        pushforward(parse("x0^2"), A, [3, 1], [A.gen(0)])
    with pytest.raises(DomainError):
        pushforward(parse("1/x0"), A, [0], [A.gen(0)])


@pytest.mark.parametrize("A,B", [
    (tangent(1), jet(1)),
    (jet(2), tangent(1)),
    (truncated(2, 1), jet(2)),
])
def test_nested_vs_direct(A, B):
    f = parse("x0^2*x1 + 1/(1 + x0^2), x1^3 - 1/2*x0")
    rng = random.Random(1)
    AB = tensor(A, B)
    num_tests = 10
    for _ in range(num_tests):
        z = [AB.random_element(rng), AB.random_element(rng)]
        assert nested_vs_direct(f, A, B, z)


def test_whitney_pushforward():
    rng = random.Random(2)
    f = parse("x0^2*x1 + 1/(1 + x0^2), x1^3")
    A, B = jet(2), tangent(1)
    for _ in range(10):
        x = [RAT.random_element(rng), RAT.random_element(rng)]
        nu_A = [A.nilpotent_part(A.random_element(rng)) for _ in range(2)]
        nu_B = [B.nilpotent_part(B.random_element(rng)) for _ in range(2)]
        assert whitney_pushforward_check(f, A, B, x, nu_A, nu_B)


def test_naturality_under_truncation():
    rng = random.Random(3)
    phi = truncation(2, 1)
    A = phi.source
    f = parse("1/(1 + x0^2) + x0^3")
    for _ in range(10):
        x = [RAT.random_element(rng)]
        nu = [A.nilpotent_part(A.random_element(rng))]
        assert naturality_check(f, phi, x, nu)
