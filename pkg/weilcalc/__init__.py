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

from weilcalc.scalars import ModInt, RingDescriptor
from weilcalc.weil import WeilAlgebra, WeilElement, WeilPresentation, jet, parse_preset, tangent, validate
from weilcalc.polymap import PolyMap, Polynomial, PolynomialRing
from weilcalc.smoothexpr import ExprMap, eval_expr, parse, pushforward
from weilcalc.jetcalc import TaylorPoly, simplicial_jet, taylor
from weilcalc.diffcalc import cubic_dq, extended_jet, extended_tangent, simplicial_dq
from weilcalc.verify import VerifySuiteFactory, run_suite
from weilcalc.version import __version__

__all__ = [
    "__version__",
    "ModInt",
    "RingDescriptor",
    "WeilAlgebra",
    "WeilElement",
    "WeilPresentation",
    "jet",
    "tangent",
    "parse_preset",
    "validate",
    "Polynomial",
    "PolynomialRing",
    "PolyMap",
    "ExprMap",
    "parse",
    "eval_expr",
    "pushforward",
    "TaylorPoly",
    "taylor",
    "simplicial_jet",
    "cubic_dq",
    "simplicial_dq",
    "extended_tangent",
    "extended_jet",
    "VerifySuiteFactory",
    "run_suite",
]
