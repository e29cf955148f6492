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
from typing import Any, Dict


@dataclass
class EqualityReport:
    """Outcome of comparing two independent computations of the same quantity."""

    name: str
    equal: bool
    lhs: Any = None
    rhs: Any = None
    context: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self):
        return self.equal

    def to_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "equal": self.equal,
            "lhs": repr(self.lhs),
            "rhs": repr(self.rhs),
            "context": {key: repr(value) for key, value in self.context.items()},
        }


def compare(name: str, lhs: Any, rhs: Any, **context) -> EqualityReport:
    return EqualityReport(name, lhs == rhs, lhs, rhs, dict(context))
