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

from typing import Any, Optional


class WeilcalcError(Exception):
    """Base class of every error raised by weilcalc."""


class NotAUnit(WeilcalcError):
    pass


class Exhausted(WeilcalcError):
    """No tuple of units with pairwise-unit differences exists in the ring."""


class RingMismatch(WeilcalcError):
    pass


class InvalidPreset(WeilcalcError):
    pass


class AlgebraMismatch(WeilcalcError):
    pass


class Ungraded(WeilcalcError):
    pass


class NotATensor(WeilcalcError):
    pass


class NotAMorphism(WeilcalcError):
    pass


class ArityMismatch(WeilcalcError):
    pass


class NoSeparatingScalars(WeilcalcError):
    pass


class ExprSyntaxError(WeilcalcError):
    def __init__(self, message: str, position: int):
        super().__init__("{} at position {}".format(message, position))
        self.position = position


class DomainError(WeilcalcError):
    """An inversion met an argument whose augmentation is not a unit."""

    def __init__(self, subexpression: Any, value: Optional[Any] = None):
        super().__init__("argument of {} is not invertible (value {})".format(subexpression, value))
        self.subexpression = subexpression
        self.value = value


class NotPolynomial(WeilcalcError):
    pass


class DivisionNotExact(WeilcalcError):
    pass


class SingularTime(WeilcalcError):
    pass


class NotInImage(WeilcalcError):
    pass


class ConsistencyError(WeilcalcError):
    """Two computation paths that must agree produced different results."""
