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


from weilcalc.diffcalc.points import (CubicPoint, SimplicialPoint, cubic_injection, cubic_is_nonsingular,
                                      cubic_point, cubic_projection, rho_cubic, rho_simplicial,
                                      simplicial_injection, simplicial_is_nonsingular, simplicial_nodes,
                                      simplicial_point, simplicial_projection)
from weilcalc.diffcalc.quotients import (cubic_difference, cubic_dq, extended_jet, extended_tangent,
                                         second_differential, simplicial_dq)
from weilcalc.diffcalc.imbedding import (apply_signs, calibrate_embedding_signs, check_embedding, g_embed,
                                         g_unembed)
from weilcalc.diffcalc.symbolic import evaluate_symbolic, symbolic_simplicial

__all__ = [
    "CubicPoint",
    "SimplicialPoint",
    "cubic_point",
    "simplicial_point",
    "cubic_is_nonsingular",
    "simplicial_is_nonsingular",
    "simplicial_nodes",
    "rho_cubic",
    "rho_simplicial",
    "cubic_projection",
    "cubic_injection",
    "simplicial_projection",
    "simplicial_injection",
    "cubic_dq",
    "extended_tangent",
    "cubic_difference",
    "simplicial_dq",
    "extended_jet",
    "second_differential",
    "g_embed",
    "g_unembed",
    "apply_signs",
    "calibrate_embedding_signs",
    "check_embedding",
    "symbolic_simplicial",
    "evaluate_symbolic",
]
