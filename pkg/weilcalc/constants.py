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

# weilcalc/scalars/descriptor.py
RATIONAL_SAMPLE_WIDTH: int = 8
RATIONAL_RANDOM_NUMERATOR: int = 9
RATIONAL_RANDOM_DENOMINATOR: int = 5
UNIT_REJECTION_ATTEMPTS: int = 64
UNIT_BACKTRACK_MODULUS_LIMIT: int = 4096

# weilcalc/polymap/separation.py
SEPARATION_CANDIDATES: int = 16

# weilcalc/weil/table.py
NILPOTENCY_SPAN_LIMIT: int = 4096

# weilcalc/diffcalc/points.py
MAX_CUBIC_ORDER: int = 6

# weilcalc/diffcalc/imbedding.py
# Componentwise signs of the simplicial-into-cubic imbedding square, keyed by order and
# indexed by cubic subset mask. Obtained by calibrate_embedding_signs on polynomial maps.
EMBEDDING_SIGN_TABLE = {
    1: (1, 1),
    2: (1, 1, 1, 1),
    3: (1, 1, 1, 1, 1, 1, 1, 1),
}

# weilcalc/verify/generators.py
RANDOM_EXPR_ATTEMPTS: int = 32
RANDOM_POLYMAP_MAX_TERMS: int = 4
TRIAL_SEED_STRIDE: int = 1_000_003

# weilcalc/entrypoints/cli.py
EXIT_OK: int = 0
EXIT_FAILURES: int = 1
EXIT_USAGE: int = 2
EXIT_DOMAIN: int = 3

# weilcalc/entrypoints/bench.py
BENCH_CSV_COLUMNS = ("k", "dim", "mode", "ns_per_eval")
