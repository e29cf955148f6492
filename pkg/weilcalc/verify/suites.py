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
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Any, ClassVar, Dict, List, Tuple

from weilcalc.constants import EMBEDDING_SIGN_TABLE
from weilcalc.diffcalc.imbedding import calibrate_embedding_signs, check_embedding, g_embed, g_unembed
from weilcalc.diffcalc.points import SimplicialPoint, rho_cubic, rho_simplicial
from weilcalc.diffcalc.quotients import (cubic_dq, extended_jet, extended_tangent, second_differential,
                                         simplicial_dq)
from weilcalc.diffcalc.symbolic import evaluate_symbolic, symbolic_simplicial
from weilcalc.errors import NoSeparatingScalars, NotAUnit
from weilcalc.jetcalc.jets import factorial_check, jet_from_taylor, simplicial_jet, taylor_chain, taylor_eqn_rhs
from weilcalc.jetcalc.taylor import radial_expansion, taylor
from weilcalc.logging.logger import init_logger
from weilcalc.polymap.polymap import PolyMap
from weilcalc.polymap.separation import separate_homogeneous_blackbox
from weilcalc.reports import EqualityReport, compare
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.smoothexpr.nodes import compose, from_polymap
from weilcalc.smoothexpr.parser import parse
from weilcalc.smoothexpr.pushforward import naturality_check, nested_vs_direct, whitney_pushforward_check
from weilcalc.verify.generators import (calibration_seed, random_cubic_point, random_denominator, random_point,
                                        random_polymap, random_simplicial_point, random_vectors, rational_map)
from weilcalc.weil.algebra import WeilAlgebra, inv_element
from weilcalc.weil.graded import (graded_endo, left_distributivity_counterexample, scale_action, star,
                                  star_inverse)
from weilcalc.weil.morphism import (augmentation, check_morphism, factor_injection, factor_projection,
                                    truncation)
from weilcalc.weil.presentation import (basis_bijection, jet, tangent, tensor, truncated, whitney_sum,
                                        whitney_sum_over)
from weilcalc.weil.validate import validate

logger = init_logger(__name__)


@dataclass(frozen=True)
class VerifySettings:
    max_degree: int = 4
    nvars: int = 2
    max_order: int = 3
    calibration_seed: int = 1


@dataclass(frozen=True)
class Case:
    """Inputs of one trial. ``maps`` are polynomial maps the runner may shrink term by term."""

    maps: Tuple[PolyMap, ...] = ()
    params: Dict[str, Any] = field(default_factory=dict)

    def with_map(self, i: int, P: PolyMap) -> "Case":
        maps = list(self.maps)
        maps[i] = P
        return replace(self, maps=tuple(maps))

    def to_json(self) -> Dict[str, Any]:
        return {"maps": [P.to_json() for P in self.maps],
                "params": {key: repr(value) for key, value in self.params.items()}}


def raises(func, error) -> bool:
    try:
        func()
    except error:
        return True
    return False


class VerifySuite(ABC):
    name: ClassVar[str]

    def __init__(self, ring: RingDescriptor, settings: VerifySettings):
        self.ring = ring
        self.settings = settings

    def required_units(self) -> int:
        """Units with pairwise-unit differences the suite needs; the runner skips it otherwise."""
        return 0

    def prepare(self) -> List[EqualityReport]:
        """One-off checks run before the trials."""
        return []

    @abstractmethod
    def generate(self, rng: random.Random, trial: int) -> Case:
        pass

    @abstractmethod
    def check(self, case: Case) -> List[EqualityReport]:
        pass

    def _order(self, rng: random.Random) -> int:
        return rng.randint(1, self.settings.max_order)

    def _polymap(self, rng: random.Random, coarity: int, arity=None) -> PolyMap:
        arity = self.settings.nvars if arity is None else arity
        return random_polymap(self.ring, rng, arity, coarity, self.settings.max_degree)

    def _denominator(self, rng: random.Random) -> PolyMap:
        # keep the denominators small so compositions stay cheap
        return random_denominator(self.ring, rng, self.settings.nvars, min(self.settings.max_degree, 2))


class WeilLawsSuite(VerifySuite):
    name = "weil-laws"

    def __init__(self, ring: RingDescriptor, settings: VerifySettings):
        super().__init__(ring, settings)
        self.catalog: List[WeilAlgebra] = [
            jet(1, ring), jet(2, ring), jet(3, ring),
            tangent(1, ring), tangent(2, ring), tangent(3, ring),
            truncated(2, 2, ring), truncated(3, 2, ring),
            tensor(jet(2, ring), jet(1, ring)),
            tensor(tangent(2, ring), jet(3, ring)),
            whitney_sum(jet(2, ring), jet(3, ring)),
            whitney_sum(tangent(1, ring), tangent(1, ring)),
            tensor(tangent(2, ring), whitney_sum(jet(2, ring), jet(3, ring))),
        ]

    def prepare(self) -> List[EqualityReport]:
        reports = [compare("validate", validate(A).first_violation, None, algebra=A.label) for A in self.catalog]
        square = parse("x0^2")
        linear = taylor(square, [self.ring.one()], 2, self.ring).poly.outputs[0].coefficient((1,))
        reports.append(compare("taylor-linear-term", linear, self.ring.coerce(2)))
        cube = parse("x0^3")
        two_invertible = self.ring.is_unit(self.ring.coerce(2))
        reports.append(compare(
            "factorial-not-a-unit",
            raises(lambda: factorial_check(cube, [self.ring.one()], [self.ring.one()], 2, self.ring), NotAUnit),
            not two_invertible))
        return reports

    def generate(self, rng: random.Random, trial: int) -> Case:
        A = self.catalog[trial % len(self.catalog)]
        return Case(params={"algebra": A, "a": A.random_element(rng), "b": A.random_element(rng),
                            "c": A.random_element(rng), "unit": A.random_unit(rng),
                            "nilpotent": A.random_nilpotent(rng)})

    def check(self, case: Case) -> List[EqualityReport]:
        p = case.params
        a, b, c, u = p["a"], p["b"], p["c"], p["unit"]
        return [
            compare("commutativity", a * b, b * a),
            compare("associativity", (a * b) * c, a * (b * c)),
            compare("distributivity", a * (b + c), a * b + a * c),
            compare("inverse", u * inv_element(u), p["algebra"].one()),
            compare("nilpotent-not-a-unit", raises(lambda: inv_element(p["nilpotent"]), NotAUnit), True),
        ]


class KTheorySuite(VerifySuite):
    name = "ktheory"

    def generate(self, rng: random.Random, trial: int) -> Case:
        n = self.settings.nvars
        A = rng.choice([jet(1, self.ring), jet(2, self.ring)])
        B = rng.choice([jet(1, self.ring), tangent(1, self.ring)])
        B2 = rng.choice([jet(1, self.ring), tangent(1, self.ring)])
        AB = tensor(A, B)
        x = random_point(self.ring, rng, n)
        return Case(maps=(self._polymap(rng, rng.randint(1, 2)), self._denominator(rng)),
                    params={"A": A, "B": B, "B2": B2, "x": x,
                            "z": [AB.embed(c) + AB.random_nilpotent(rng) for c in x],
                            "nu_A": [A.random_nilpotent(rng) for _ in range(n)],
                            "nu_B": [B.random_nilpotent(rng) for _ in range(n)]})

    def check(self, case: Case) -> List[EqualityReport]:
        p = case.params
        f = rational_map(*case.maps)
        A, B, B2 = p["A"], p["B"], p["B2"]
        distributive = tensor(A, whitney_sum(B, B2))
        return [
            nested_vs_direct(f, A, B, p["z"]),
            whitney_pushforward_check(f, A, B, p["x"], p["nu_A"], p["nu_B"]),
            compare("distributive-law", basis_bijection(distributive, whitney_sum_over(A, B, B2)) is not None, True),
        ]


class TaylorChainSuite(VerifySuite):
    name = "taylor-chain"

    def generate(self, rng: random.Random, trial: int) -> Case:
        n = self.settings.nvars
        k = self._order(rng)
        g = self._polymap(rng, rng.randint(1, 2))
        h = self._polymap(rng, n)
        return Case(maps=(g, h), params={"k": k, "x": random_point(self.ring, rng, n),
                                         "vs": random_vectors(self.ring, rng, k + 1, n)})

    def check(self, case: Case) -> List[EqualityReport]:
        g, h = (from_polymap(P) for P in case.maps)
        k, x, vs = case.params["k"], case.params["x"], case.params["vs"]
        inner = simplicial_jet(h, vs, self.ring)
        return [
            taylor_chain(g, h, x, k, self.ring),
            compare("jet-functoriality", simplicial_jet(compose(g, h), vs, self.ring),
                    simplicial_jet(g, inner.components, self.ring), k=k),
        ]


class JetsVsOracleSuite(VerifySuite):
    name = "jets-vs-oracle"

    def required_units(self) -> int:
        return self.settings.max_order

    def generate(self, rng: random.Random, trial: int) -> Case:
        n = self.settings.nvars
        k = self._order(rng)
        p = random_simplicial_point(self.ring, rng, k, n)
        return Case(maps=(self._polymap(rng, rng.randint(1, 2)),), params={"k": k, "point": p})

    def check(self, case: Case) -> List[EqualityReport]:
        f = from_polymap(case.maps[0])
        k, p = case.params["k"], case.params["point"]
        vs = [list(v) for v in p.vectors]
        symbolic = symbolic_simplicial(f, vs, self.ring)
        quotients = [simplicial_dq(f, SimplicialPoint(p.vectors[:j + 1], p.times[:j]), self.ring)
                     for j in range(1, k + 1)]
        at_zero = evaluate_symbolic(symbolic, [self.ring.zero()] * k, self.ring)
        fiber = list(simplicial_jet(f, vs, self.ring).fiber())
        expansion = radial_expansion(f, vs[0], vs[1], k, self.ring)
        return [
            compare("symbolic-vs-quotient", evaluate_symbolic(symbolic, p.times, self.ring), quotients, k=k),
            compare("symbolic-vs-jet", at_zero, fiber, k=k),
            compare("taylor-vs-jet", list(jet_from_taylor(f, vs[0], k, vs[1:], self.ring)), fiber, k=k),
            compare("taylor-eqn", [taylor_eqn_rhs(f, vs[0], vs[1:], j, self.ring) for j in range(1, k + 1)],
                    fiber, k=k),
            compare("remainder-at-zero", all(c == 0 for c in expansion.remainder_at_zero()), True),
        ]


class DifferenceFunctorialitySuite(VerifySuite):
    name = "difference-functoriality"

    def required_units(self) -> int:
        return self.settings.max_order

    def generate(self, rng: random.Random, trial: int) -> Case:
        n = self.settings.nvars
        k = self._order(rng)
        return Case(maps=(self._polymap(rng, n), self._denominator(rng), self._polymap(rng, rng.randint(1, 2))),
                    params={"k": k, "cubic": random_cubic_point(self.ring, rng, k, n),
                            "simplicial": random_simplicial_point(self.ring, rng, k, n),
                            "r": self.ring.random_unit(rng), "u": random_point(self.ring, rng, n),
                            "v": random_point(self.ring, rng, n)})

    def check(self, case: Case) -> List[EqualityReport]:
        f = rational_map(case.maps[0], case.maps[1])
        g = from_polymap(case.maps[2])
        p, q, r = case.params["cubic"], case.params["simplicial"], case.params["r"]
        gf = compose(g, f)
        x = list(q.vectors[0])
        reports = [
            compare("cubic-functoriality", extended_tangent(gf, p, self.ring),
                    extended_tangent(g, extended_tangent(f, p, self.ring), self.ring)),
            compare("cubic-homogeneity", extended_tangent(f, rho_cubic(r, p, self.ring), self.ring),
                    rho_cubic(r, extended_tangent(f, p, self.ring), self.ring)),
            compare("simplicial-functoriality", extended_jet(gf, q, self.ring),
                    extended_jet(g, extended_jet(f, q, self.ring), self.ring)),
            compare("simplicial-homogeneity", extended_jet(f, rho_simplicial(r, q, self.ring), self.ring),
                    rho_simplicial(r, extended_jet(f, q, self.ring), self.ring)),
            compare("first-order-agreement", simplicial_dq(f, SimplicialPoint(q.vectors[:2], q.times[:1]), self.ring),
                    cubic_dq(f, x, q.vectors[1], q.times[0], self.ring)),
        ]
        u, v = case.params["u"], case.params["v"]
        reports.append(compare("second-differential-symmetry", second_differential(g, x, u, v, self.ring),
                               second_differential(g, x, v, u, self.ring)))
        return reports


class EmbeddingSignSuite(VerifySuite):
    name = "embedding-sign"

    def required_units(self) -> int:
        return self.settings.max_order

    def prepare(self) -> List[EqualityReport]:
        rng = random.Random(calibration_seed(self.settings.calibration_seed))
        n = self.settings.nvars
        reports = []
        for k in range(1, self.settings.max_order + 1):
            maps = [from_polymap(self._polymap(rng, rng.randint(1, 2))) for _ in range(3)]
            points = [random_simplicial_point(self.ring, rng, k, n) for _ in range(3)]
            signs = calibrate_embedding_signs(k, maps, points, self.ring)
            reports.append(compare("calibrated-signs", signs, EMBEDDING_SIGN_TABLE[k], k=k))
        return reports

    def generate(self, rng: random.Random, trial: int) -> Case:
        k = self._order(rng)
        return Case(maps=(self._polymap(rng, rng.randint(1, 2)), self._denominator(rng)),
                    params={"point": random_simplicial_point(self.ring, rng, k, self.settings.nvars),
                            "r": self.ring.random_unit(rng)})

    def check(self, case: Case) -> List[EqualityReport]:
        f = rational_map(*case.maps)
        p, r = case.params["point"], case.params["r"]
        return [
            check_embedding(f, p, self.ring),
            compare("section", g_unembed(g_embed(p, self.ring), self.ring), p),
            compare("equivariance", g_embed(rho_simplicial(r, p, self.ring), self.ring),
                    rho_cubic(r, g_embed(p, self.ring), self.ring)),
        ]


class GradedStarSuite(VerifySuite):
    name = "graded-star"

    def required_units(self) -> int:
        return 1

    def prepare(self) -> List[EqualityReport]:
        b, a, a2 = left_distributivity_counterexample(self.ring)
        return [compare("left-distributivity-fails", star(b, a + a2) != star(b, a) + star(b, a2), True)]

    def generate(self, rng: random.Random, trial: int) -> Case:
        A = jet(3, self.ring) if trial % 2 == 0 else truncated(2, 2, self.ring)
        return Case(params={"a": A.random_element(rng), "a2": A.random_element(rng), "b": A.random_element(rng),
                            "c": A.random_element(rng), "unit": A.random_unit(rng),
                            "r": self.ring.random_unit(rng)})

    def check(self, case: Case) -> List[EqualityReport]:
        p = case.params
        a, a2, b, c, u, r = p["a"], p["a2"], p["b"], p["c"], p["unit"], p["r"]
        A = a.algebra
        endo = graded_endo(a)
        x = star_inverse(u)
        return [
            compare("star-associativity", star(star(c, b), a), star(c, star(b, a))),
            compare("star-right-distributivity", star(b + c, a), star(b, a) + star(c, a)),
            compare("endo-multiplicative", endo(b * c), endo(b) * endo(c)),
            compare("endo-composition", graded_endo(a2)(endo(b)), graded_endo(star(a, a2))(b)),
            compare("star-inverse", (star(u, x), star(x, u)), (A.one(), A.one())),
            compare("scale-action", graded_endo(A.embed(r))(b), scale_action(r, b)),
        ]


def _separation_possible(ring: RingDescriptor, k: int) -> bool:
    """Every gap 1..k-1 admits a unit r with 1 - r^gap a unit."""
    if ring.is_rational:
        return True
    units = list(ring.units())
    return all(any(ring.is_unit(ring.one() - r ** gap) for r in units) for gap in range(1, k))


class SeparationSuite(VerifySuite):
    name = "separation"

    def generate(self, rng: random.Random, trial: int) -> Case:
        return Case(maps=(self._polymap(rng, rng.randint(1, 2)),),
                    params={"x": random_point(self.ring, rng, self.settings.nvars), "seed": rng.randrange(1 << 16)})

    def check(self, case: Case) -> List[EqualityReport]:
        P = case.maps[0]
        x, seed = case.params["x"], case.params["seed"]
        k = max(P.degree, 0)
        if not _separation_possible(self.ring, k):
            failed = raises(lambda: separate_homogeneous_blackbox(P, k, x, self.ring, seed), NoSeparatingScalars)
            return [compare("no-separating-scalars", failed, True, degree=k)]
        truth = [P.homogeneous_part(d)(x) for d in range(k + 1)]
        return [compare("separation", separate_homogeneous_blackbox(P, k, x, self.ring, seed), truth, degree=k)]


class NaturalitySuite(VerifySuite):
    name = "naturality"

    def __init__(self, ring: RingDescriptor, settings: VerifySettings):
        super().__init__(ring, settings)
        self.morphisms = [
            truncation(3, 2, ring),
            truncation(2, 1, ring),
            augmentation(jet(2, ring)),
            factor_injection(tensor(jet(2, ring), tangent(1, ring)), 0),
            factor_injection(whitney_sum(jet(1, ring), jet(2, ring)), 1),
            factor_projection(whitney_sum(jet(2, ring), jet(1, ring)), 1),
        ]

    def prepare(self) -> List[EqualityReport]:
        return [compare("morphism", check_morphism(phi), True, morphism=repr(phi)) for phi in self.morphisms]

    def generate(self, rng: random.Random, trial: int) -> Case:
        phi = self.morphisms[trial % len(self.morphisms)]
        n = self.settings.nvars
        return Case(maps=(self._polymap(rng, rng.randint(1, 2)), self._denominator(rng)),
                    params={"phi": phi, "x": random_point(self.ring, rng, n),
                            "nu": [phi.source.random_nilpotent(rng) for _ in range(n)]})

    def check(self, case: Case) -> List[EqualityReport]:
        p = case.params
        return [naturality_check(rational_map(*case.maps), p["phi"], p["x"], p["nu"])]


class VerifySuiteFactory:
    _SUITE_REGISTRY = {
        'weil-laws': WeilLawsSuite,
        'ktheory': KTheorySuite,
        'taylor-chain': TaylorChainSuite,
        'jets-vs-oracle': JetsVsOracleSuite,
        'difference-functoriality': DifferenceFunctorialitySuite,
        'embedding-sign': EmbeddingSignSuite,
        'graded-star': GradedStarSuite,
        'separation': SeparationSuite,
        'naturality': NaturalitySuite,
    }

    @classmethod
    def names(cls) -> List[str]:
        return list(cls._SUITE_REGISTRY)

    @classmethod
    def get_suite(cls, suite_name: str, **kwargs) -> VerifySuite:
        return cls._SUITE_REGISTRY[suite_name](**kwargs)
