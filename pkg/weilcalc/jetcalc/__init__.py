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

from weilcalc.jetcalc.taylor import RadialExpansion, TaylorPoly, radial_expansion, taylor
from weilcalc.jetcalc.jets import (JetValue, classical_differential, factorial_check, jet_direction,
                                   jet_from_taylor, normalized_diff, simplicial_jet, taylor_chain,
                                   taylor_eqn_rhs, weighted_multi_indices)

__all__ = [
    "TaylorPoly",
    "RadialExpansion",
    "JetValue",
    "taylor",
    "radial_expansion",
    "normalized_diff",
    "classical_differential",
    "factorial_check",
    "simplicial_jet",
    "jet_direction",
    "jet_from_taylor",
    "taylor_eqn_rhs",
    "taylor_chain",
    "weighted_multi_indices",
]
