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

from weilcalc.smoothexpr.evaluator import eval_expr, to_polymap
from weilcalc.smoothexpr.nodes import (Add, Const, Expr, ExprMap, Inv, IntPow, Mul, Neg, ScalarMul, Var,
                                       compose, from_polymap, product)
from weilcalc.smoothexpr.parser import parse
from weilcalc.smoothexpr.printer import to_text
from weilcalc.smoothexpr.pushforward import (jet_tower, naturality_check, nested_vs_direct, pushforward,
                                             tangent_to_tower, tower_to_tangent, tower_vs_tangent,
                                             whitney_pushforward_check)

__all__ = [
    "Expr",
    "Const",
    "Var",
    "Add",
    "Neg",
    "Mul",
    "ScalarMul",
    "IntPow",
    "Inv",
    "ExprMap",
    "parse",
    "to_text",
    "eval_expr",
    "to_polymap",
    "compose",
    "product",
    "from_polymap",
    "pushforward",
    "nested_vs_direct",
    "jet_tower",
    "tangent_to_tower",
    "tower_to_tangent",
    "tower_vs_tangent",
    "whitney_pushforward_check",
    "naturality_check",
]
