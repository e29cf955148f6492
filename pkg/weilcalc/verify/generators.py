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

"""Seeded random inputs for the verification suites."""

import random
from typing import Any, List

from weilcalc.constants import RANDOM_EXPR_ATTEMPTS, RANDOM_POLYMAP_MAX_TERMS, TRIAL_SEED_STRIDE
from weilcalc.diffcalc.points import CubicPoint, SimplicialPoint, cubic_is_nonsingular, cubic_point
from weilcalc.errors import Exhausted
from weilcalc.polymap.polymap import PolyMap
from weilcalc.scalars.descriptor import RingDescriptor, sample_units
from weilcalc.smoothexpr.nodes import Add, Const, ExprMap, Inv, Mul, from_polymap

MAX_TRIALS = TRIAL_SEED_STRIDE - 1


def trial_seed(seed: int, trial: int) -> int:
    return seed * TRIAL_SEED_STRIDE + trial


def calibration_seed(seed: int) -> int:
    """Seed of the calibration stream. Its residue TRIAL_SEED_STRIDE - 1 is never a trial index."""
    return seed * TRIAL_SEED_STRIDE + MAX_TRIALS


def check_seeds(seed: int, trials: int, calibration: int):
    if seed < 0 or calibration < 0:
        raise ValueError("seeds must be non-negative, got {} and {}".format(seed, calibration))
    if not 0 <= trials <= MAX_TRIALS:
        raise ValueError("trials must lie in [0, {}], got {}".format(MAX_TRIALS, trials))


def random_exponents(rng: random.Random, arity: int, max_degree: int) -> List[int]:
    degree = rng.randint(0, max_degree)
    exps = [0] * arity
    for _ in range(degree):
        exps[rng.randrange(arity)] += 1
    return exps


def random_polymap(ring: RingDescriptor, rng: random.Random, arity: int, coarity: int, max_degree: int,
                   max_terms: int = RANDOM_POLYMAP_MAX_TERMS) -> PolyMap:
    """Up to max_terms random monomials of degree <= max_degree in every output."""
    terms = []
    for out in range(coarity):
        for _ in range(rng.randint(1, max_terms)):
            terms.append((out, random_exponents(rng, arity, max_degree), ring.random_element(rng)))
    return PolyMap.from_terms(ring, arity, coarity, terms)


def random_denominator(ring: RingDescriptor, rng: random.Random, arity: int, max_degree: int) -> PolyMap:
    """A single polynomial Q without constant term; rational maps divide by 1 + Q."""
    Q = random_polymap(ring, rng, arity, 1, max_degree)
    return Q - Q.homogeneous_part(0)


def rational_map(P: PolyMap, Q: PolyMap) -> ExprMap:
    """x -> P(x) / (1 + Q(x)); a polynomial map when Q is zero."""
    numerator = from_polymap(P)
    if Q.is_zero():
        return numerator
    denominator = Inv(Add(Const(P.ring.one()), from_polymap(Q).outputs[0]))
    return ExprMap(P.arity, tuple(Mul(out, denominator) for out in numerator.outputs))


def random_point(ring: RingDescriptor, rng: random.Random, n: int) -> List[Any]:
    return [ring.random_element(rng) for _ in range(n)]


def random_vectors(ring: RingDescriptor, rng: random.Random, count: int, n: int) -> List[List[Any]]:
    return [random_point(ring, rng, n) for _ in range(count)]


def random_cubic_point(ring: RingDescriptor, rng: random.Random, k: int, n: int) -> CubicPoint:
    """A nonsingular cubic point of order k in dimension n."""
    for _ in range(RANDOM_EXPR_ATTEMPTS):
        space = random_vectors(ring, rng, 1 << k, n)
        time = [ring.zero()] + [ring.random_unit(rng) for _ in range((1 << k) - 1)]
        p = cubic_point(space, time, ring)
        if cubic_is_nonsingular(p, ring):
            return p
    raise Exhausted("no nonsingular cubic point of order {} found in {}".format(k, ring))


def random_simplicial_point(ring: RingDescriptor, rng: random.Random, k: int, n: int) -> SimplicialPoint:
    """A nonsingular simplicial point: s_1..s_k units with unit pairwise differences."""
    times = sample_units(ring, k, rng.randrange(1 << 30))
    vectors = random_vectors(ring, rng, k + 1, n)
    return SimplicialPoint(tuple(tuple(v) for v in vectors), tuple(times))
