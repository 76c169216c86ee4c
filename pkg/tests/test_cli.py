import json

import pytest
from click.testing import CliRunner

import app.cli.commands.coeff as coeff_module
from app.cli.main import cli


@pytest.fixture
def runner():
    return CliRunner()


def json_lines(output):
    return [json.loads(line) for line in output.splitlines() if line.startswith(("{", "["))]


def test_coeff_all_methods_agree(runner):
    result = runner.invoke(cli, ["coeff", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["crystal  2", "pictures 2", "ballot   2", "agree    true"]


def test_coeff_empty_lambda(runner):
    result = runner.invoke(cli, ["coeff", "--lambda", "", "--mu", "1", "--nu", "1", "--method", "ballot"])
    assert result.exit_code == 0
    assert result.output.strip() == "ballot   1"


def test_coeff_incompatible_triple_is_zero(runner):
    result = runner.invoke(cli, ["--json", "coeff", "--lambda", "1", "--mu", "1", "--nu", "3"])
    assert result.exit_code == 0
    assert json_lines(result.output) == [{
        "lambda": [1], "mu": [1], "nu": [3],
        "coefficients": {"crystal": 0, "pictures": 0, "ballot": 0},
        "agree": True,
    }]


def test_coeff_bad_partition_names_the_flag(runner):
    result = runner.invoke(cli, ["coeff", "--lambda", "1,2", "--mu", "1", "--nu", "2,1"])
    assert result.exit_code == 2
    assert "--lambda" in result.output


def test_coeff_disagreement_exits_nonzero(runner, monkeypatch):
    monkeypatch.setattr(coeff_module, "lr_coefficient_ballot", lambda lam, mu, nu: 99)
    result = runner.invoke(cli, ["coeff", "--lambda", "1", "--mu", "1", "--nu", "2"])
    assert result.exit_code == 1
    assert "agree    false" in result.output


def test_enumerate_crystal(runner):
    result = runner.invoke(cli, ["enumerate", "crystal", "--lambda", "1", "--mu", "1", "--nu", "2", "--order", "J"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["1", "count: 1"]


def test_enumerate_crystal_json(runner):
    result = runner.invoke(cli, ["--json", "enumerate", "crystal", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"])
    assert result.exit_code == 0
    lines = json_lines(result.output)
    assert lines[-1] == {"count": 2}
    assert lines[:-1] == [[[1, 2], [3]], [[1, 3], [2]]]


def test_enumerate_pictures_json(runner):
    result = runner.invoke(cli, ["--json", "enumerate", "pictures", "--lambda", "1", "--mu", "1", "--nu", "2"])
    assert result.exit_code == 0
    assert json_lines(result.output) == [
        {"mu": [1], "nu": [2], "lambda": [1], "map": [[[1, 1], [1, 2]]]},
        {"count": 1},
    ]


def test_enumerate_pictures_empty(runner):
    result = runner.invoke(cli, ["enumerate", "pictures", "--mu", "1,1", "--lambda", "", "--nu", "2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["count: 0"]


def test_enumerate_fast_matches_brute_force(runner):
    args = ["enumerate", "pictures", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]
    brute = runner.invoke(cli, args)
    fast = runner.invoke(cli, args + ["--fast"])
    assert brute.exit_code == fast.exit_code == 0
    assert brute.output == fast.output


def test_enumerate_order_file(runner, tmp_path):
    path = tmp_path / "order.txt"
    path.write_text("1,2\n2,2\n1,1\n2,1\n")
    result = runner.invoke(cli, [
        "enumerate", "crystal", "--lambda", "1", "--mu", "2,2", "--nu", "3,2", "--order", f"@{path}"
    ])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "count: 1"


def test_enumerate_rejects_non_admissible_order_file(runner, tmp_path):
    path = tmp_path / "order.txt"
    path.write_text("1,1\n1,2\n")
    result = runner.invoke(cli, [
        "enumerate", "crystal", "--lambda", "", "--mu", "2", "--nu", "2", "--order", f"@{path}"
    ])
    assert result.exit_code == 2
    assert "--order" in result.output
    assert "(1,2) must come before (1,1)" in result.output


def test_orders(runner):
    result = runner.invoke(cli, ["orders", "--shape", "2,2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "(1,2) (1,1) (2,2) (2,1)",
        "(1,2) (2,2) (1,1) (2,1)",
        "count: 2",
    ]


def test_orders_on_skew_shape_json(runner):
    result = runner.invoke(cli, ["--json", "orders", "--shape", "2,1/1"])
    assert result.exit_code == 0
    assert json_lines(result.output) == [[[1, 2], [2, 1]], {"count": 1}]


def test_orders_limit(runner):
    result = runner.invoke(cli, ["orders", "--shape", "3,2,1", "--limit", "1"])
    assert result.exit_code == 3
    assert "count:" not in result.output


def test_verify_passes(runner):
    result = runner.invoke(cli, ["verify", "bijection", "--max-nu", "4", "--all-pairs-size", "3"])
    assert result.exit_code == 0
    assert "failed 0" in result.output.splitlines()[-1]


def test_verify_json(runner):
    result = runner.invoke(cli, ["--json", "verify", "theorem36", "--max-entry", "2", "--max-size", "2"])
    assert result.exit_code == 0
    report = json_lines(result.output)[0]
    assert report["suite"] == "theorem36"
    assert report["scope"]["max_entry"] == 2
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] == len(report["checks"])


def test_verify_budget_above_cap(runner):
    result = runner.invoke(cli, ["verify", "agreement", "--max-nu", "20"])
    assert result.exit_code == 3
    assert "max_nu=20" in result.output
    assert "suite:" not in result.output


def test_verify_is_deterministic(runner):
    args = ["verify", "order-independence", "--max-nu", "4", "--max-mu", "3"]
    assert runner.invoke(cli, args).output == runner.invoke(cli, args).output


def test_usage_error_is_reported_once(runner):
    result = runner.invoke(cli, ["enumerate", "crystal", "--lambda", "1", "--mu", "1", "--nu", "3"])
    assert result.exit_code == 2
    assert result.output.count("|nu| = 3") == 1
    assert " - ERROR - " not in result.output


def test_verify_max_entry_above_cap(runner):
    result = runner.invoke(cli, ["verify", "theorem36", "--max-entry", "9"])
    assert result.exit_code == 3
    assert "max_entry=9" in result.output
    assert "LRP_MAX_ENTRY" in result.output
