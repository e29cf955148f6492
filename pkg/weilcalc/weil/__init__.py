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

from weilcalc.weil.algebra import WeilAlgebra, WeilElement, inv_element
from weilcalc.weil.graded import (flip, graded_endo, grading_derivation, permute_variables,
                                  scale_action, star, star_inverse, variable_scale_action)
from weilcalc.weil.morphism import (MorphismMatrix, apply_morphism, augmentation, check_morphism,
                                    factor_injection, factor_projection, monomial_morphism,
                                    truncation, unit_section)
from weilcalc.weil.presentation import (WeilPresentation, basis_bijection, custom, jet, make_algebra,
                                        parse_preset, tangent, tensor, truncated, whitney_sum,
                                        whitney_sum_over)
from weilcalc.weil.table import TableAlgebra
from weilcalc.weil.validate import ValidationReport, validate

__all__ = [
    "WeilAlgebra",
    "WeilElement",
    "WeilPresentation",
    "TableAlgebra",
    "MorphismMatrix",
    "ValidationReport",
    "inv_element",
    "make_algebra",
    "parse_preset",
    "jet",
    "tangent",
    "truncated",
    "custom",
    "tensor",
    "whitney_sum",
    "whitney_sum_over",
    "basis_bijection",
    "scale_action",
    "variable_scale_action",
    "permute_variables",
    "flip",
    "grading_derivation",
    "star",
    "star_inverse",
    "graded_endo",
    "check_morphism",
    "apply_morphism",
    "augmentation",
    "unit_section",
    "monomial_morphism",
    "truncation",
    "factor_injection",
    "factor_projection",
    "validate",
]
