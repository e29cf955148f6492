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

"""Timing of T^A f over jet(k) against tangent(k), and of nested against direct evaluation."""

import time
from typing import Any, Callable, Dict, List, Sequence

import numpy as np
import pandas as pd

from weilcalc.constants import BENCH_CSV_COLUMNS
from weilcalc.errors import ConsistencyError
from weilcalc.logging.logger import init_logger
from weilcalc.scalars.ring import CommutativeRing
from weilcalc.smoothexpr.evaluator import eval_expr
from weilcalc.smoothexpr.nodes import ExprMap
from weilcalc.smoothexpr.pushforward import jet_tower, tangent_to_tower, tower_vs_tangent
from weilcalc.weil.presentation import WeilPresentation, jet, tangent

logger = init_logger(__name__)


def bench_point(f: ExprMap, ring: CommutativeRing) -> List[Any]:
    """x = (1, 2, ..., arity)."""
    return [ring.coerce(i + 1) for i in range(f.arity)]


def median_ns(fn: Callable[[], Any], repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        start = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - start)
    return float(np.median(samples))


def _displaced(A: WeilPresentation, x: Sequence[Any]) -> List[Any]:
    """x_i + (X_1 + ... + X_n) in every coordinate."""
    direction = A.zero()
    for X in A.gens():
        direction = direction + X
    return [A.embed(c) + direction for c in x]


def bench_rows(f: ExprMap, ring: CommutativeRing, mode: str, lo: int, hi: int, repeat: int) -> pd.DataFrame:
    x = bench_point(f, ring)
    rows = []
    for k in range(lo, hi + 1):
        backends: Dict[str, WeilPresentation] = {}
        if mode in ("jet", "both"):
            backends["jet"] = jet(k, ring)
        if mode in ("tangent", "both"):
            backends["tangent"] = tangent(k, ring)
        for name, A in backends.items():
            z = _displaced(A, x)
            rows.append((k, A.dim, name, median_ns(lambda A=A, z=z: eval_expr(f, A, z), repeat)))
        if mode == "both":
            rows.extend(_nested_rows(f, ring, k, x, repeat))
        logger.info("bench order {} done".format(k))
    return pd.DataFrame(rows, columns=list(BENCH_CSV_COLUMNS))


def _nested_rows(f: ExprMap, ring: CommutativeRing, k: int, x: Sequence[Any], repeat: int) -> List[tuple]:
    """T^jet(1) applied k times, as a k-level tower, against one evaluation over tangent(k)."""
    T = tangent(k, ring)
    tower = jet_tower(k, ring)
    z = _displaced(T, x)
    gate = tower_vs_tangent(f, T, z)
    if not gate:
        raise ConsistencyError("nested and direct evaluation differ at order {}".format(k))
    tower_z = [tangent_to_tower(T, tower, a) for a in z]
    return [
        (k, T.dim, "nested", median_ns(lambda: eval_expr(f, tower, tower_z), repeat)),
        (k, T.dim, "direct", median_ns(lambda: eval_expr(f, T, z), repeat)),
    ]


def jet_tangent_ratios(table: pd.DataFrame) -> pd.DataFrame:
    """tangent / jet time per order; empty unless both backends were timed."""
    pivot = table.pivot(index="k", columns="mode", values="ns_per_eval")
    if "jet" not in pivot.columns or "tangent" not in pivot.columns:
        return pd.DataFrame(columns=["k", "tangent_over_jet"])
    ratios = (pivot["tangent"] / pivot["jet"]).rename("tangent_over_jet")
    return ratios.reset_index()


def render(table: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        return table.to_csv(index=False)
    return pd.Series({
        "rows": table.to_dict(orient="records"),
        "ratios": jet_tangent_ratios(table).to_dict(orient="records"),
    }).to_json(indent=2)
