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

from abc import ABC, abstractmethod
from typing import Any


class CommutativeRing(ABC):
    """Exact commutative unital ring with a decidable unit group.

    Base rings, Weil algebras and polynomial rings all implement this interface,
    so evaluators written against it run over any of them (and over towers of
    Weil algebras whose scalars are again Weil algebra elements).
    Elements support the Python operators +, -, *, ** (non-negative powers) and ==.
    """

    @abstractmethod
    def zero(self) -> Any:
        pass

    @abstractmethod
    def one(self) -> Any:
        pass

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Convert ints, base scalars or elements of subrings into this ring."""

    @abstractmethod
    def is_unit(self, a: Any) -> bool:
        pass

    @abstractmethod
    def inv(self, a: Any) -> Any:
        pass

    def divide(self, a: Any, b: Any) -> Any:
        """Exact quotient a / b."""
        return a * self.inv(b)

    def is_zero(self, a: Any) -> bool:
        return a == 0
