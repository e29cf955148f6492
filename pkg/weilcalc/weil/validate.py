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

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from weilcalc.logging.logger import init_logger
from weilcalc.weil.algebra import WeilAlgebra
from weilcalc.weil.table import nilpotency_by_powering

logger = init_logger(__name__)


@dataclass
class ValidationReport:
    algebra: str
    dim: int
    checks: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)
    nilpotency: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first_violation(self) -> Optional[str]:
        return self.violations[0] if self.violations else None

    def to_json(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra,
            "dim": self.dim,
            "valid": self.ok,
            "checks": self.checks,
            "violations": self.violations,
            "nilpotency": self.nilpotency,
        }


def validate(A: WeilAlgebra) -> ValidationReport:
    """Check the Weil algebra axioms on basis elements; the report records the first
    violation of each check."""
    report = ValidationReport(A.label, A.dim)
    basis = [A.basis_element(i) for i in range(A.dim)]
    products = [[A.mul(basis[i], basis[j]) for j in range(A.dim)] for i in range(A.dim)]

    report.checks.append("commutativity")
    pair = next(((i, j) for i in range(A.dim) for j in range(i + 1, A.dim)
                 if products[i][j] != products[j][i]), None)
    if pair is not None:
        report.violations.append("commutativity: e{0}*e{1} != e{1}*e{0}".format(*pair))

    report.checks.append("associativity")
    failure = _first_associativity_failure(A, basis, products)
    if failure is not None:
        report.violations.append("associativity: (e{0}*e{1})*e{2} != e{0}*(e{1}*e{2})".format(*failure))

    report.checks.append("unit")
    one = A.one()
    for i, e in enumerate(basis):
        if A.mul(one, e) != e or A.mul(e, one) != e:
            report.violations.append("unit: 1*e{} != e{}".format(i, i))
            break

    report.checks.append("augmentation")
    if A.project(one) != A.base.one():
        report.violations.append("augmentation: pi(1) != 1")
    else:
        pis = [A.project(e) for e in basis]
        pair = next(((i, j) for i in range(A.dim) for j in range(A.dim)
                     if A.project(products[i][j]) != pis[i] * pis[j]), None)
        if pair is not None:
            report.violations.append("augmentation: pi(e{0}*e{1}) != pi(e{0})*pi(e{1})".format(*pair))

    report.checks.append("nilpotency")
    report.nilpotency = nilpotency_by_powering(A)
    if report.nilpotency is None:
        report.violations.append("nilpotency: ker(pi) is not nilpotent")

    if A.grading is not None:
        report.checks.append("grading")
        failure = _first_grading_failure(A, products)
        if failure is not None:
            report.violations.append("grading: e{}*e{} leaves degree {}".format(*failure))

    logger.debug("validated {}: {}".format(A.label, "ok" if report.ok else report.first_violation))
    return report


def _first_associativity_failure(A: WeilAlgebra, basis, products) -> Optional[tuple]:
    for i in range(A.dim):
        for j in range(A.dim):
            left_pair = products[i][j]
            for k in range(A.dim):
                if A.mul(left_pair, basis[k]) != A.mul(basis[i], products[j][k]):
                    return i, j, k
    return None


def _first_grading_failure(A: WeilAlgebra, products) -> Optional[tuple]:
    for i in range(A.dim):
        for j in range(A.dim):
            degree = A.grading[i] + A.grading[j]
            for k, c in enumerate(products[i][j].coeffs):
                if c and A.grading[k] != degree:
                    return i, j, degree
    return None
