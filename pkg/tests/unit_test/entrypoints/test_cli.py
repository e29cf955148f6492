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

import io
import json

import pandas as pd
import pytest

from weilcalc.constants import BENCH_CSV_COLUMNS, EXIT_DOMAIN, EXIT_FAILURES, EXIT_OK, EXIT_USAGE
from weilcalc.entrypoints.bench import _displaced, bench_point, bench_rows, jet_tangent_ratios, render
from weilcalc.entrypoints.cli import main, parse_nilpotent, parse_point
from weilcalc.scalars import RingDescriptor
from weilcalc.smoothexpr import eval_expr, jet_tower, parse, tangent_to_tower, tower_to_tangent, tower_vs_tangent
from weilcalc.verify.runner import SuiteStatus, VerifyReport
from weilcalc.weil import WeilAlgebra, jet, tangent

RAT = RingDescriptor.rationals()


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if code == EXIT_OK else out


def test_algebra_table(capsys):
    code, result = run_json(capsys, ["algebra", "tan:2", "--table"])
    assert code == EXIT_OK
    assert result["dim"] == 4
    assert result["nilpotency"] == 3
    assert result["ring"] == "rat"
    assert result["basis_labels"] == ["1", "X1", "X2", "X1*X2"]
    assert result["table"][1][2] == "X1*X2"
    assert result["table"][1][1] == "0"


def test_algebra_validate(capsys):
    code, result = run_json(capsys, ["algebra", "trunc:2,1", "--validate", "--ring", "mod:7"])
    assert code == EXIT_OK
    assert result["ring"] == "mod:7"
    assert result["validation"]["valid"]
    assert result["validation"]["nilpotency"] == 2
    assert "table" not in result


def test_jet_reciprocal(capsys):
    code, result = run_json(capsys, ["jet", "--expr", "1/(1+x0)", "--at", "0", "--order", "3"])
    assert code == EXIT_OK
    assert result["value"] == ["1"]
    assert result["coefficients"] == [["-1", "1", "-1"]]
    assert result["direction"] == ["1"]
    assert result["jet"]["components"] == [["1"], ["-1"], ["1"], ["-1"]]


def test_jet_mod5(capsys):
    code, result = run_json(capsys, ["jet", "--expr", "x0^2", "--ring", "mod:5", "--at", "2", "--order", "1"])
    assert code == EXIT_OK
    assert result["value"] == [4]
    assert result["coefficients"] == [[4]]
    assert result["taylor"]["order"] == 1


def test_jet_pushforward(capsys):
    code, result = run_json(capsys, ["jet", "--expr", "x0^2", "--at", "3", "--order", "0", "--algebra", "jet:2"])
    assert code == EXIT_OK
    assert "taylor" not in result
    assert result["pushforward"]["fiber"] == [["0", "6", "1"]]
    code, result = run_json(capsys, ["jet", "--expr", "x0^2", "--at", "3", "--order", "0",
                                     "--algebra", "tan:1", "--nilpotent", "[[0, 2]]"])
    assert code == EXIT_OK
    assert result["pushforward"]["fiber"] == [["0", "12"]]


def test_jet_point_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[1, \"2\"]"))
    code, result = run_json(capsys, ["jet", "--expr", "x0*x1", "--at", "-", "--order", "1"])
    assert code == EXIT_OK
    assert result["at"] == ["1", "2"]
    assert result["value"] == ["2"]
    assert "coefficients" not in result


@pytest.mark.parametrize("argv,code", [
    (["jet", "--expr", "1/x0", "--at", "0", "--order", "1"], EXIT_DOMAIN),
    (["jet", "--expr", "x0 +", "--at", "0"], EXIT_USAGE),
    (["jet", "--at", "0"], EXIT_USAGE),
    (["jet", "--expr", "x0", "--at", "1,x"], EXIT_USAGE),
    (["jet", "--expr", "x0", "--algebra", "jet:1", "--nilpotent", "[[1]]"], EXIT_USAGE),
    (["algebra", "sphere:2"], EXIT_USAGE),
    (["verify", "--suite", "nope"], EXIT_USAGE),
    (["bench", "--orders", "3..1"], EXIT_USAGE),
    (["--config-file", "/no/such/weilcalc.yml", "algebra"], EXIT_USAGE),
    ([], EXIT_USAGE),
])
def test_exit_codes(capsys, argv, code):
    assert main(argv) == code


def test_verify_command(capsys):
    code, result = run_json(capsys, ["verify", "--suite", "separation", "--trials", "2", "--ring", "mod:101",
                                     "--max-degree", "3"])
    assert code == EXIT_OK
    assert result["ring"] == "mod:101"
    assert [s["status"] for s in result["suites"]] == ["PASS"]


def test_verify_failures_exit_one(capsys, monkeypatch):
    def failing(names, ring, trials, seed, settings):
        return [VerifyReport(names[0], str(ring), trials, status=SuiteStatus.FAIL)]

    monkeypatch.setattr("weilcalc.entrypoints.cli.run_suites", failing)
    assert main(["verify", "--suite", "weil-laws", "--trials", "1"]) == EXIT_FAILURES


def test_config_file(capsys, tmp_path):
    path = tmp_path / "algebra.yml"
    path.write_text("ALGEBRA:\n  PRESET: \"tan:1\"\n", encoding="utf-8")
    code, result = run_json(capsys, ["--config-file", str(path), "algebra"])
    assert code == EXIT_OK
    assert result["dim"] == 2


def test_bench_csv(capsys):
    code = main(["bench", "--expr", "x0^2 + 1/(1 + x1^2)", "--orders", "1..2", "--repeat", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.splitlines()[0] == ",".join(BENCH_CSV_COLUMNS)
    # jet, tangent, nested and direct per order
    assert len(out.splitlines()) == 1 + 2 * 4


def test_bench_rows_and_ratios():
    table = bench_rows(parse("x0^3"), RAT, "both", 1, 2, 1)
    assert list(table.columns) == list(BENCH_CSV_COLUMNS)
    assert set(table["mode"]) == {"jet", "tangent", "nested", "direct"}
    assert table[(table["mode"] == "tangent") & (table["k"] == 2)]["dim"].iloc[0] == 4
    ratios = jet_tangent_ratios(table)
    assert list(ratios["k"]) == [1, 2]
    assert (ratios["tangent_over_jet"] > 0).all()
    data = json.loads(render(table, "json"))
    assert len(data["rows"]) == 8
    assert len(data["ratios"]) == 2
    only_jet = bench_rows(parse("x0^3"), RAT, "jet", 1, 1, 1)
    assert jet_tangent_ratios(only_jet).empty
    assert isinstance(only_jet, pd.DataFrame)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_bench_nested_tower_agrees_with_tangent(k):
    f = parse("x0^2 * x1 + 1/(1 + x1^2)")
    table = bench_rows(f, RAT, "both", k, k, 1)
    assert table[table["mode"] == "nested"]["dim"].iloc[0] == 2 ** k
    tower = jet_tower(k, RAT)
    depth, level = 1, tower
    while isinstance(level.base, WeilAlgebra):
        depth, level = depth + 1, level.base
    assert depth == k
    T = tangent(k, RAT)
    z = _displaced(T, bench_point(f, RAT))
    assert tower_vs_tangent(f, T, z)
    iterated = eval_expr(f, tower, [tangent_to_tower(T, tower, a) for a in z])
    assert tuple(tower_to_tangent(T, b) for b in iterated) == eval_expr(f, T, z)


def test_parse_point_and_nilpotent():
    assert parse_point("1, 2/3", RAT) == [1, RAT.parse_scalar("2/3")]
    assert parse_point("[\"1/2\", 4]", RAT) == [RAT.parse_scalar("1/2"), 4]
    A = jet(2)
    assert parse_nilpotent(None, A, 2) == [A.gen(0), A.gen(0)]
    assert parse_nilpotent(None, tangent(0), 1) == [tangent(0).zero()]
    assert parse_nilpotent("[[0, 1, 5]]", A, 1) == [A.element([0, 1, 5])]
    with pytest.raises(ValueError):
        parse_nilpotent("[[0, 1]]", A, 1)
