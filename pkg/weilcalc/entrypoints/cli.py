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

import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from weilcalc.arg_utils import AlgebraArgs, BenchArgs, JetArgs, VerifyArgs, WeilcalcArgumentParser
from weilcalc.config import get_weilcalc_config
from weilcalc.constants import EXIT_DOMAIN, EXIT_FAILURES, EXIT_OK, EXIT_USAGE
from weilcalc.entrypoints.bench import bench_rows, render
from weilcalc.errors import ConsistencyError, DomainError, WeilcalcError
from weilcalc.jetcalc.jets import jet_direction
from weilcalc.jetcalc.taylor import taylor
from weilcalc.logging.logger import init_logger
from weilcalc.scalars.descriptor import RingDescriptor
from weilcalc.smoothexpr.parser import parse
from weilcalc.smoothexpr.pushforward import pushforward
from weilcalc.verify.runner import SuiteStatus, resolve_suites, run_suites
from weilcalc.verify.suites import VerifySettings
from weilcalc.weil.algebra import WeilElement
from weilcalc.weil.presentation import WeilPresentation, parse_preset
from weilcalc.weil.validate import validate

logger = init_logger(__name__)

COMMANDS = {
    "algebra": AlgebraArgs,
    "jet": JetArgs,
    "verify": VerifyArgs,
    "bench": BenchArgs,
}


def build_parser() -> Tuple[WeilcalcArgumentParser, Dict[str, WeilcalcArgumentParser]]:
    parser = WeilcalcArgumentParser(prog="weilcalc")
    parser.add_argument("--config-file", type=str, help="yaml config file, may inherit through _BASE_")
    subparsers = parser.add_subparsers(dest="command", required=True)
    commands = {}
    for name, args_cls in COMMANDS.items():
        commands[name] = args_cls.add_cli_args(subparsers.add_parser(name))
    return parser, commands


def _read_json_or_stdin(text: str) -> Any:
    return json.loads(sys.stdin.read() if text == "-" else text)


def parse_point(text: str, ring: RingDescriptor) -> List[Any]:
    """'1,2/3' or a JSON array; '-' reads the JSON array from stdin."""
    text = text.strip()
    if text == "-" or text.startswith("["):
        values = _read_json_or_stdin(text)
        if not isinstance(values, list):
            raise ValueError("point should be a JSON array, got {!r}".format(values))
    else:
        values = [part for part in text.split(",") if part.strip()]
    return [ring.parse_scalar(v) for v in values]


def parse_nilpotent(text: Optional[str], A: WeilPresentation, arity: int) -> List[WeilElement]:
    """JSON array of basis coefficient lists; defaults to the first generator in every coordinate."""
    if text is None:
        default = A.gen(0) if A.nvars > 0 else A.zero()
        return [default] * arity
    rows = _read_json_or_stdin(text)
    if not isinstance(rows, list) or len(rows) != arity:
        raise ValueError("--nilpotent should be a JSON array of {} coefficient lists".format(arity))
    elements = []
    for row in rows:
        if not isinstance(row, list) or len(row) != A.dim:
            raise ValueError("nilpotent coordinates of {} need {} coefficients".format(A.label, A.dim))
        elements.append(A.element([A.base.parse_scalar(c) for c in row]))
    return elements


def _format_vector(ring: RingDescriptor, values: Sequence[Any]) -> List[Any]:
    return [ring.format_scalar(c) for c in values]


def _format_element(ring: RingDescriptor, a: WeilElement) -> List[Any]:
    return _format_vector(ring, a.coeffs)


def cmd_algebra(args: AlgebraArgs) -> Dict[str, Any]:
    ring = RingDescriptor.parse(args.ring)
    A = parse_preset(args.preset, ring)
    result = A.to_json()
    result["ring"] = str(ring)
    if args.table:
        result["basis_labels"] = A.basis_labels()
        result["table"] = A.table_json()
    if args.validate:
        result["validation"] = validate(A).to_json()
    return result


def cmd_jet(args: JetArgs) -> Dict[str, Any]:
    ring = RingDescriptor.parse(args.ring)
    x = parse_point(args.at, ring)
    f = parse(args.expr, arity=len(x))
    tay = taylor(f, x, args.order, ring)
    result: Dict[str, Any] = {"ring": str(ring), "at": _format_vector(ring, x),
                              "value": _format_vector(ring, tay.value)}
    if args.order > 0:
        result["taylor"] = tay.to_json()
        if f.arity == 1:
            result["coefficients"] = [
                [ring.format_scalar(tay.coefficients(i)[out]) for i in range(1, args.order + 1)]
                for out in range(f.coarity)]
        if args.direction is None:
            v = [ring.one()] + [ring.zero()] * (f.arity - 1)
        else:
            v = parse_point(args.direction, ring)
        result["direction"] = _format_vector(ring, v)
        result["jet"] = jet_direction(f, x, v, args.order, ring).to_json(ring)
    if args.algebra is not None:
        A = parse_preset(args.algebra, ring)
        nu = parse_nilpotent(args.nilpotent, A, f.arity)
        _, fiber = pushforward(f, A, x, nu)
        result["pushforward"] = {
            "algebra": A.label,
            "nilpotent": [_format_element(ring, n) for n in nu],
            "fiber": [_format_element(ring, w) for w in fiber],
        }
    return result


def cmd_verify(args: VerifyArgs) -> Tuple[Dict[str, Any], bool]:
    ring = RingDescriptor.parse(args.ring)
    settings = VerifySettings(max_degree=args.max_degree, nvars=args.vars, max_order=args.max_order,
                              calibration_seed=args.calibration_seed)
    reports = run_suites(resolve_suites(args.suite), ring, args.trials, args.seed, settings)
    ok = all(report.status != SuiteStatus.FAIL for report in reports)
    return {"ring": str(ring), "seed": args.seed, "suites": [report.to_json() for report in reports]}, ok


def cmd_bench(args: BenchArgs) -> str:
    ring = RingDescriptor.parse(args.ring)
    f = parse(args.expr)
    lo, hi = BenchArgs.parse_orders(args.orders)
    return render(bench_rows(f, ring, args.mode, lo, hi, args.repeat), args.format)


def _dump(result: Dict[str, Any]):
    print(json.dumps(result, indent=2))


def run_command(command: str, args) -> int:
    if command == "algebra":
        _dump(cmd_algebra(args))
    elif command == "jet":
        _dump(cmd_jet(args))
    elif command == "verify":
        result, ok = cmd_verify(args)
        _dump(result)
        return EXIT_OK if ok else EXIT_FAILURES
    else:
        sys.stdout.write(cmd_bench(args))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser, commands = build_parser()
    try:
        cli_args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    args_cls = COMMANDS[cli_args.command]
    try:
        cfg = get_weilcalc_config(cli_args.config_file, cli_args)
        args = args_cls.from_weilcalc_config(cfg)
        args_cls.check_args(args, commands[cli_args.command])
    except (AssertionError, ValueError, KeyError, OSError) as e:
        logger.error("invalid arguments: {}".format(e))
        return EXIT_USAGE

    try:
        return run_command(cli_args.command, args)
    except DomainError as e:
        logger.error("domain error: {}".format(e))
        return EXIT_DOMAIN
    except ConsistencyError as e:
        logger.error("consistency error: {}".format(e))
        return EXIT_FAILURES
    except (WeilcalcError, ValueError, KeyError) as e:
        logger.error("{}: {}".format(type(e).__name__, e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
