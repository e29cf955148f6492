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
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from weilcalc.constants import RANDOM_EXPR_ATTEMPTS
from weilcalc.errors import DomainError, Exhausted, WeilcalcError
from weilcalc.logging.logger import init_logger
from weilcalc.reports import EqualityReport
from weilcalc.scalars.descriptor import RingDescriptor, sample_units
from weilcalc.verify.generators import check_seeds, trial_seed
from weilcalc.verify.suites import Case, VerifySettings, VerifySuite, VerifySuiteFactory

logger = init_logger(__name__)


class SuiteStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass
class TrialFailure:
    seed: int
    check: str
    inputs: Dict[str, Any]
    expected: str
    actual: str

    def to_json(self) -> Dict[str, Any]:
        return {"seed": self.seed, "check": self.check, "inputs": self.inputs,
                "expected": self.expected, "actual": self.actual}


@dataclass
class VerifyReport:
    suite: str
    ring: str
    trials: int
    status: SuiteStatus = SuiteStatus.PASS
    failures: List[TrialFailure] = field(default_factory=list)
    elapsed: float = 0.0
    skip_reason: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        data = {"suite": self.suite, "ring": self.ring, "status": self.status.value, "trials": self.trials,
                "failures": [failure.to_json() for failure in self.failures], "elapsed": self.elapsed}
        if self.skip_reason is not None:
            data["skip_reason"] = self.skip_reason
        return data


def _failed_reports(suite: VerifySuite, case: Case) -> Optional[List[EqualityReport]]:
    """Failing reports of the case, None when its inputs leave the domain."""
    try:
        return [report for report in suite.check(case) if not report]
    except DomainError:
        return None
    except WeilcalcError as e:
        return [EqualityReport(type(e).__name__, False, None, str(e))]


def shrink(suite: VerifySuite, case: Case) -> Case:
    """Drop polynomial terms one at a time while the case keeps failing."""
    for i in range(len(case.maps)):
        t = 0
        while t < case.maps[i].num_terms():
            candidate = case.with_map(i, case.maps[i].without_term(t))
            if _failed_reports(suite, candidate):
                case = candidate
            else:
                t += 1
    return case


def _failure(seed: int, case: Case, report: EqualityReport) -> TrialFailure:
    return TrialFailure(seed, report.name, case.to_json(), repr(report.rhs), repr(report.lhs))


def run_suite(name: str, ring: RingDescriptor, trials: int, seed: int,
              settings: Optional[VerifySettings] = None) -> VerifyReport:
    settings = VerifySettings() if settings is None else settings
    check_seeds(seed, trials, settings.calibration_seed)
    suite = VerifySuiteFactory.get_suite(name, ring=ring, settings=settings)
    report = VerifyReport(name, str(ring), trials)
    start = time.perf_counter()

    needed = suite.required_units()
    if needed:
        try:
            sample_units(ring, needed, seed)
        except Exhausted as e:
            report.status = SuiteStatus.SKIP
            report.skip_reason = str(e)
            logger.info("skip suite {} over {}: {}".format(name, ring, e))
            return report

    try:
        failed = [r for r in suite.prepare() if not r]
    except WeilcalcError as e:
        failed = [EqualityReport(type(e).__name__, False, None, str(e))]
    report.failures.extend(_failure(seed, Case(), r) for r in failed)

    for trial in range(trials):
        seed_of_trial = trial_seed(seed, trial)
        rng = random.Random(seed_of_trial)
        for _ in range(RANDOM_EXPR_ATTEMPTS):
            try:
                case = suite.generate(rng, trial)
            except Exhausted as e:
                report.failures.append(TrialFailure(seed_of_trial, "generate", {}, "", str(e)))
                break
            failed = _failed_reports(suite, case)
            if failed is None:
                continue
            if failed:
                case = shrink(suite, case)
                failed = _failed_reports(suite, case) or failed
                report.failures.extend(_failure(seed_of_trial, case, r) for r in failed)
            break
        else:
            report.failures.append(TrialFailure(seed_of_trial, "domain", {}, "",
                                                "no sampled input stayed inside the domain"))

    report.elapsed = time.perf_counter() - start
    if report.failures:
        report.status = SuiteStatus.FAIL
    logger.info("suite {} over {}: {} ({} trials, {:.2f}s)".format(
        name, ring, report.status.value, trials, report.elapsed))
    return report


def run_suites(names: Sequence[str], ring: RingDescriptor, trials: int, seed: int,
               settings: Optional[VerifySettings] = None) -> List[VerifyReport]:
    return [run_suite(name, ring, trials, seed, settings) for name in names]


def resolve_suites(suite: str) -> List[str]:
    """Suite names selected by "all" or a single registered name; KeyError otherwise."""
    if suite == "all":
        return VerifySuiteFactory.names()
    if suite not in VerifySuiteFactory.names():
        raise KeyError(suite)
    return [suite]
