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

import dataclasses
from dataclasses import dataclass
import argparse
from typing import Tuple

from weilcalc.config import WeilcalcConfig, get_weilcalc_config
from weilcalc.config.default import _C
from weilcalc.verify.generators import MAX_TRIALS
from weilcalc.verify.suites import VerifySuiteFactory


# All the default values of weilcalc arguments are set in default.py. So all the arguments here are set to None for default.

class WeilcalcArgumentParser(argparse.ArgumentParser):
    def add_argument(self, *args, **kwargs):
        if "--help" not in args:
            assert 'default' not in kwargs or kwargs['default'] is None, \
                f"Do not set the default value for '{args[0]}' in CLI, or set default value to None. " \
                f"The default value will be retrieved from config/default.py in get_weilcalc_config."
            if kwargs.get('action') == 'store_true':
                kwargs['default'] = None
        return super().add_argument(*args, **kwargs)


def _fill_from_defaults(args, section):
    for field_info in dataclasses.fields(args):
        if field_info.default is not None:
            raise ValueError(f"The default value of '{field_info.name}' should be None")
    for attr in dataclasses.fields(args):
        if getattr(args, attr.name) is None and hasattr(section, attr.name.upper()):
            setattr(args, attr.name, getattr(section, attr.name.upper()))


def _from_section(cls, section):
    attrs = [attr.name for attr in dataclasses.fields(cls)]
    cfg_attrs = [attr for attr in attrs if hasattr(section, attr.upper())]
    return cls(**{attr: getattr(section, attr.upper()) for attr in cfg_attrs})


def _check_choices(args, parser: argparse.ArgumentParser):
    # pylint: disable=protected-access
    for action in parser._actions:
        if hasattr(action, 'choices') and action.choices is not None and hasattr(args, action.dest):
            assert getattr(args, action.dest) in action.choices, f"{action.dest} should be one of {action.choices}."


@dataclass
class AlgebraArgs:
    preset: str = None
    ring: str = None
    table: bool = None
    validate: bool = None

    def __post_init__(self):
        _fill_from_defaults(self, _C.ALGEBRA)

    @classmethod
    def from_weilcalc_config(cls, cfg: WeilcalcConfig = get_weilcalc_config()) -> 'AlgebraArgs':
        return _from_section(cls, cfg.ALGEBRA)

    @classmethod
    def check_args(cls, args: 'AlgebraArgs', parser: argparse.ArgumentParser):
        _check_choices(args, parser)

    @staticmethod
    def add_cli_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        parser.add_argument('preset',
                            nargs='?',
                            type=str,
                            help='algebra preset: jet:k | tan:k | trunc:n,r | tensor(A,B) | whitney(A,B)')
        parser.add_argument('--ring',
                            type=str,
                            help='base ring, "rat" or "mod:<m>"')
        parser.add_argument('--table',
                            action='store_true',
                            help='print the full multiplication table')
        parser.add_argument('--validate',
                            action='store_true',
                            help='print the validation report')
        return parser


@dataclass
class JetArgs:
    expr: str = None
    ring: str = None
    at: str = None
    order: int = None
    direction: str = None
    algebra: str = None
    nilpotent: str = None

    def __post_init__(self):
        _fill_from_defaults(self, _C.JET)

    @classmethod
    def from_weilcalc_config(cls, cfg: WeilcalcConfig = get_weilcalc_config()) -> 'JetArgs':
        return _from_section(cls, cfg.JET)

    @classmethod
    def check_args(cls, args: 'JetArgs', parser: argparse.ArgumentParser):
        _check_choices(args, parser)
        assert args.expr is not None, "--expr is required."
        assert args.order >= 0, "--order should be non-negative."

    @staticmethod
    def add_cli_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        parser.add_argument('--expr',
                            type=str,
                            help='expression of the map, outputs separated by commas')
        parser.add_argument('--ring',
                            type=str,
                            help='base ring, "rat" or "mod:<m>"')
        parser.add_argument('--at',
                            type=str,
                            help='base point as comma-separated scalars, rationals as p/q')
        parser.add_argument('--order',
                            type=int,
                            help='order of the Taylor polynomial and the jet')
        parser.add_argument('--direction',
                            type=str,
                            help='jet direction as comma-separated scalars')
        parser.add_argument('--algebra',
                            type=str,
                            help='Weil algebra preset to push the map forward over')
        parser.add_argument('--nilpotent',
                            type=str,
                            help='JSON array of nilpotent arguments, "-" reads it from stdin')
        return parser


@dataclass
class VerifyArgs:
    suite: str = None
    ring: str = None
    trials: int = None
    seed: int = None
    max_degree: int = None
    vars: int = None
    max_order: int = None
    calibration_seed: int = None

    def __post_init__(self):
        _fill_from_defaults(self, _C.VERIFY)

    @classmethod
    def from_weilcalc_config(cls, cfg: WeilcalcConfig = get_weilcalc_config()) -> 'VerifyArgs':
        return _from_section(cls, cfg.VERIFY)

    @classmethod
    def check_args(cls, args: 'VerifyArgs', parser: argparse.ArgumentParser):
        _check_choices(args, parser)
        assert 0 <= args.trials <= MAX_TRIALS, f"--trials should lie in [0, {MAX_TRIALS}]."
        assert args.seed >= 0, "--seed should be non-negative."
        assert args.calibration_seed >= 0, "--calibration-seed should be non-negative."
        assert args.vars >= 1, "--vars should be positive."
        assert args.max_order >= 1, "--max-order should be positive."

    @staticmethod
    def add_cli_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        parser.add_argument('--suite',
                            type=str,
                            choices=['all'] + VerifySuiteFactory.names(),
                            help='property suite to run, or "all"')
        parser.add_argument('--ring',
                            type=str,
                            help='base ring, "rat" or "mod:<m>"')
        parser.add_argument('--trials',
                            type=int,
                            help='random trials per suite')
        parser.add_argument('--seed',
                            type=int,
                            help='seed of the trial generator')
        parser.add_argument('--max-degree',
                            type=int,
                            help='maximum total degree of random polynomial maps')
        parser.add_argument('--vars',
                            type=int,
                            help='number of variables of random maps')
        parser.add_argument('--max-order',
                            type=int,
                            help='maximum jet and difference order')
        parser.add_argument('--calibration-seed',
                            type=int,
                            help='seed of the embedding sign calibration')
        return parser


@dataclass
class BenchArgs:
    expr: str = None
    ring: str = None
    mode: str = None
    orders: str = None
    repeat: int = None
    format: str = None

    def __post_init__(self):
        _fill_from_defaults(self, _C.BENCH)

    @classmethod
    def from_weilcalc_config(cls, cfg: WeilcalcConfig = get_weilcalc_config()) -> 'BenchArgs':
        return _from_section(cls, cfg.BENCH)

    @classmethod
    def check_args(cls, args: 'BenchArgs', parser: argparse.ArgumentParser):
        _check_choices(args, parser)
        lo, hi = cls.parse_orders(args.orders)
        assert 1 <= lo <= hi, "--orders should be a range a..b with 1 <= a <= b."
        assert args.repeat >= 1, "--repeat should be positive."

    @staticmethod
    def parse_orders(orders: str) -> Tuple[int, int]:
        parts = orders.split('..')
        if len(parts) != 2:
            raise ValueError(f"Invalid format for --orders : '{orders}'. Expected format 'a..b'.")
        return int(parts[0]), int(parts[1])

    @staticmethod
    def add_cli_args(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        parser.add_argument('--expr',
                            type=str,
                            help='expression to push forward')
        parser.add_argument('--ring',
                            type=str,
                            help='base ring, "rat" or "mod:<m>"')
        parser.add_argument('--mode',
                            type=str,
                            choices=['jet', 'tangent', 'both'],
                            help='backends to time; both also times nested against direct evaluation')
        parser.add_argument('--orders',
                            type=str,
                            help='range of orders a..b')
        parser.add_argument('--repeat',
                            type=int,
                            help='timed repetitions per order')
        parser.add_argument('--format',
                            type=str,
                            choices=['csv', 'json'],
                            help='output format')
        return parser
