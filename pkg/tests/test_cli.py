import json

import pytest

from superchar.cli import main
from superchar.laurent import LaurentPoly
from superchar.schur import super_schur
from superchar.verify import cauchy_alphabets


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_char_command(capsys):
    code, out = run_cli(
        capsys, "char", "--lambda", "2,1", "--x", "x1,x2", "--y", "y1"
    )
    assert code == 0
    poly = LaurentPoly.from_json_dict(json.loads(out))
    X, Y, _ = cauchy_alphabets(2, 1, 1)
    expected = super_schur((2, 1), X, Y)
    # same terms up to the table layout (the CLI table has no t variable)
    assert poly.eval_all_ones() == expected.eval_all_ones()
    assert len(poly) == len(expected)


def test_char_supports_constants_and_inverses(capsys):
    code, out = run_cli(
        capsys, "char", "--lambda", "1", "--x", "x1,1,x1^-1", "--y", "-1"
    )
    assert code == 0
    poly = LaurentPoly.from_json_dict(json.loads(out))
    assert poly.eval_all_ones() == 4


def test_lr_command(capsys):
    code, out = run_cli(capsys, "lr", "--lam", "2,1", "--mu", "1", "--nu", "1,1")
    assert code == 0
    assert out.strip() == "1"
    code, out = run_cli(
        capsys, "lr", "--lam", "2,1", "--mu", "1", "--nu", "1,1", "--json"
    )
    record = json.loads(out)
    assert record == {"lam": [2, 1], "mu": [1], "nu": [1, 1], "coefficient": 1}


def test_weights_command(capsys):
    code, out = run_cli(
        capsys, "weights", "--family", "B", "--r", "2", "--s", "1", "--lambda", "3,1"
    )
    assert code == 0
    record = json.loads(out)
    assert record["highest_weight"] == [2, 2, 0]
    assert record["kac_dynkin"] == [4, 2, 0]
    assert record["finite_dimensional"] is True


def test_fold_polynomial_and_report(capsys):
    code, out = run_cli(
        capsys, "fold", "--case", "B1", "--r", "1", "--s", "0", "--a", "1", "--m", "2", "--json"
    )
    assert code == 0
    poly = LaurentPoly.from_json_dict(json.loads(out))
    assert poly.eval_all_ones() == 5

    code, out = run_cli(
        capsys,
        "fold", "--case", "B1", "--r", "1", "--s", "0", "--a", "1", "--m", "2",
        "--branch", "B",
    )
    assert code == 0
    record = json.loads(out)
    assert record["pass"] is True


def test_verify_command(capsys):
    code, out = run_cli(
        capsys, "verify", "--check", "cauchy_plain", "--nx", "1", "--ny", "1",
        "--nt", "2", "--degmax", "3",
    )
    assert code == 0
    assert json.loads(out)["pass"] is True

    code, out = run_cli(capsys, "verify", "--check", "power_det", "--m", "3")
    assert code == 0

    code, out = run_cli(
        capsys, "verify", "--check", "ypair_to_square", "--lam", "2", "--nx", "1", "--ny", "1"
    )
    assert code == 0


def test_suite_command(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(
        json.dumps(
            {"degmax": 1, "max_lambda_size": 1, "max_rank": 1, "t_count": 1, "seed": 0}
        )
    )
    persist = tmp_path / "results"
    code, out = run_cli(
        capsys, "suite", "--config", str(config), "--persist", str(persist)
    )
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines and all(line["pass"] for line in lines)
    saved = list(persist.glob("suite-*.json"))
    assert len(saved) == 1
    assert saved[0].read_text() == out


def test_suite_byte_stable(tmp_path, capsys):
    args = ["suite", "--degmax", "1", "--max-lambda-size", "1", "--max-rank", "1", "--t-count", "1"]
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args, "--parallelism", "3")
    assert first == second


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "poly.json"
    code, out = run_cli(
        capsys, "char", "--lambda", "1", "--x", "x1", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["terms"]


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["lr", "--lam", "1,2"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["char", "--lambda", "1,2"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["char", "--bogus"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["fold", "--case", "D2", "--r", "0", "--a", "1", "--m", "1"])
    assert err.value.code == 2


def test_out_of_hook_fold_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["fold", "--case", "A2_EE", "--r", "1", "--s", "0", "--a", "3", "--m", "1"])
    assert err.value.code == 2
