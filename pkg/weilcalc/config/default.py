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

from .config import WeilcalcConfig as WC

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------
_C = WC()

# -----------------------------------------------------------------------------
# CLI CONFIGURATION
# -----------------------------------------------------------------------------
_C.CLI = WC()
# Path to config file of arguments
_C.CLI.CONFIG_FILE = None

# -----------------------------------------------------------------------------
# ALGEBRA CONFIGURATION
# -----------------------------------------------------------------------------
_C.ALGEBRA = WC()
# Preset expression, e.g. "jet:2" or "tensor(tan:1,tan:1)"
_C.ALGEBRA.PRESET = "jet:1"
# Base ring: "rat" or "mod:<m>"
_C.ALGEBRA.RING = "rat"
# Print the full multiplication table
_C.ALGEBRA.TABLE = False
# Print the validation report
_C.ALGEBRA.VALIDATE = False

# -----------------------------------------------------------------------------
# JET CONFIGURATION
# -----------------------------------------------------------------------------
_C.JET = WC()
# Expression of the map, comma-separated outputs
_C.JET.EXPR = None
# Base ring: "rat" or "mod:<m>"
_C.JET.RING = "rat"
# Base point, comma-separated scalars
_C.JET.AT = "0"
# Order of the Taylor polynomial and the jet
_C.JET.ORDER = 3
# Jet direction v, comma-separated scalars; defaults to the first unit vector
_C.JET.DIRECTION = None
# Preset of a Weil algebra to push forward over
_C.JET.ALGEBRA = None
# JSON array of nilpotent arguments, one coefficient vector per variable
_C.JET.NILPOTENT = None

# -----------------------------------------------------------------------------
# VERIFY CONFIGURATION
# -----------------------------------------------------------------------------
_C.VERIFY = WC()
# Suite name or "all"
_C.VERIFY.SUITE = "all"
# Base ring: "rat" or "mod:<m>"
_C.VERIFY.RING = "rat"
# Number of random trials per suite
_C.VERIFY.TRIALS = 100
# Seed of the trial generator
_C.VERIFY.SEED = 0
# Maximum total degree of random polynomial maps
_C.VERIFY.MAX_DEGREE = 4
# Number of variables of random maps
_C.VERIFY.VARS = 2
# Maximum jet and difference order
_C.VERIFY.MAX_ORDER = 3
# Seed of the embedding sign calibration; its stream never meets a trial seed
_C.VERIFY.CALIBRATION_SEED = 1

# -----------------------------------------------------------------------------
# BENCH CONFIGURATION
# -----------------------------------------------------------------------------
_C.BENCH = WC()
# Expression to push forward
_C.BENCH.EXPR = "(x0^4 + 3*x0*x1 - x1^2) / (1 + x0^2 + x1^4)"
# Base ring: "rat" or "mod:<m>"
_C.BENCH.RING = "mod:101"
# Backends: jet, tangent or both (both also times nested against direct)
_C.BENCH.MODE = "both"
# Range of orders a..b
_C.BENCH.ORDERS = "1..8"
# Timed repetitions per order, the median is reported
_C.BENCH.REPEAT = 5
# Output format: csv or json
_C.BENCH.FORMAT = "csv"
