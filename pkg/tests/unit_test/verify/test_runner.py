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

import pytest

from weilcalc.polymap import PolyMap
from weilcalc.reports import compare
from weilcalc.scalars import RingDescriptor
from weilcalc.verify.generators import MAX_TRIALS, calibration_seed, check_seeds, trial_seed
from weilcalc.verify import (Case, SuiteStatus, VerifySettings, VerifySuite, VerifySuiteFactory, resolve_suites,
                             run_suite, run_suites)

RAT = RingDescriptor.rationals()
MOD = RingDescriptor.modular(101)

SMALL = VerifySettings(max_degree=3, nvars=2, max_order=2)


class LowDegreeSuite(VerifySuite):
    """Claims every map is affine; fails on purpose so the shrinker has work to do."""

    name = "low-degree"

    def generate(self, rng, trial):
        P = PolyMap.from_terms(self.ring, 2, 1, [(0, [0, 0], 1), (0, [1, 0], 2), (0, [2, 0], 3),
                                                 (0, [1, 2], 4), (0, [0, 1], 5)])
        return Case(maps=(P,))

    def check(self, case):
        return [compare("affine", case.maps[0].degree <= 1, True)]


def test_resolve_suites():
    assert resolve_suites("all") == VerifySuiteFactory.names()
    assert len(resolve_suites("all")) == 9
    assert resolve_suites("separation") == ["separation"]
    with pytest.raises(KeyError):
        resolve_suites("nonexistent")


@pytest.mark.parametrize("name", ["weil-laws", "graded-star", "separation", "taylor-chain", "naturality"])
@pytest.mark.parametrize("ring", [RAT, MOD])
def test_suites_pass(name, ring):
    report = run_suite(name, ring, trials=3, seed=0, settings=SMALL)
    assert report.status == SuiteStatus.PASS, report.to_json()
    assert report.failures == []


def test_graded_star_passes_over_mod2():
    report = run_suite("graded-star", RingDescriptor.modular(2), trials=4, seed=0, settings=SMALL)
    assert report.status == SuiteStatus.PASS, report.to_json()
    assert report.failures == []


@pytest.mark.parametrize("seed", [0, 1, 2, 7, 12345])
@pytest.mark.parametrize("calibration", [0, 1, 2, 7, 12345])
def test_calibration_seed_never_a_trial_seed(seed, calibration):
    trials = 100
    check_seeds(seed, trials, calibration)
    trial_seeds = {trial_seed(seed, t) for t in range(trials)}
    assert calibration_seed(calibration) not in trial_seeds
    assert calibration_seed(calibration) != trial_seed(calibration, MAX_TRIALS - 1)


def test_default_calibration_seed_disjoint_from_default_trials():
    calibration = VerifySettings().calibration_seed
    assert calibration_seed(calibration) not in {trial_seed(0, t) for t in range(100)}
    assert calibration_seed(calibration) not in {trial_seed(calibration, t) for t in range(100)}


def test_seed_bounds_are_checked():
    with pytest.raises(ValueError):
        run_suite("weil-laws", RAT, trials=1, seed=-1, settings=SMALL)
    with pytest.raises(ValueError):
        check_seeds(0, 1, -1)
    with pytest.raises(ValueError):
        check_seeds(0, MAX_TRIALS + 1, 1)


@pytest.mark.parametrize("name", ["jets-vs-oracle", "difference-functoriality", "embedding-sign"])
def test_suites_needing_units_skip_over_mod2(name):
    report = run_suite(name, RingDescriptor.modular(2), trials=3, seed=0)
    assert report.status == SuiteStatus.SKIP
    assert "skip_reason" in report.to_json()


def test_separation_over_mod2_expects_failure_to_separate():
    report = run_suite("separation", RingDescriptor.modular(2), trials=5, seed=1, settings=SMALL)
    assert report.status == SuiteStatus.PASS


def test_run_is_deterministic():
    first = run_suites(["weil-laws", "separation"], MOD, trials=2, seed=7, settings=SMALL)
    second = run_suites(["weil-laws", "separation"], MOD, trials=2, seed=7, settings=SMALL)
    for a, b in zip(first, second):
        a_json, b_json = a.to_json(), b.to_json()
        a_json.pop("elapsed")
        b_json.pop("elapsed")
        assert a_json == b_json


def test_failing_case_is_shrunk(monkeypatch):
    monkeypatch.setitem(VerifySuiteFactory._SUITE_REGISTRY, "low-degree", LowDegreeSuite)
    report = run_suite("low-degree", RAT, trials=2, seed=0)
    assert report.status == SuiteStatus.FAIL
    assert len(report.failures) == 2
    failure = report.failures[0].to_json()
    assert failure["check"] == "affine"
    terms = failure["inputs"]["maps"][0]["terms"]
    assert len(terms) == 1
    assert sum(terms[0]["exps"]) >= 2
    assert failure["seed"] != report.failures[1].seed
