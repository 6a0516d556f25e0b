import json

import pytest

from boxcount import cli
from boxcount.colouring import zn_group
from boxcount.enum3d import coloured_series
from boxcount.formulas import closed_zn


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_enum_json(capsys):
    code, out = run(capsys, "enum", "zn:2", "-N", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["vars"] == ["q0", "q1"]
    assert data["trunc"] == 5
    assert coloured_series(zn_group(2), 5).to_json() == out.strip()


def test_formula_csv(capsys):
    code, out = run(capsys, "formula", "zn:2", "-N", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "degree,exponent_q0,exponent_q1,coefficient"
    assert closed_zn(2, 4).to_csv() == out


def test_pretty_output_default(capsys):
    code, out = run(capsys, "transfer", "zn:1", "-N", "4")
    assert code == 0
    assert out.strip() == "1 + q0 + 3*q0^2 + 6*q0^3 + 13*q0^4"


def test_pyramid_and_sign_and_dt(capsys):
    assert run(capsys, "pyramid", "-N", "4")[0] == 0
    assert run(capsys, "sign", "zn:2", "-N", "4")[0] == 0
    assert run(capsys, "dt", "klein", "-N", "4", "--side", "paired")[0] == 0


@pytest.mark.parametrize(
    "target",
    ["zn:2", "pyramid", "pair", "transfer:zn:2", "transfer:pyramid",
     "transfer:pyramid-checkerboard", "transfer:z2z2", "sign:zn:2", "pairing:klein"],
)
def test_verify_targets_agree(capsys, target):
    code, out = run(capsys, "verify", target, "-N", "5")
    assert code == 0
    assert out.startswith("ok:")


def test_verify_ops(capsys):
    code, out = run(capsys, "verify-ops", "-N", "4", "--basis", "2")
    assert code == 0
    assert out.count("ok:") == 6


def test_usage_errors_exit_2(capsys):
    for argv in (["formula", "nope", "-N", "3"],
                 ["transfer", "nope", "-N", "3"],
                 ["enum", "so3", "-N", "3"],
                 ["verify", "nope", "-N", "3"]):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2
        capsys.readouterr()


def test_mismatch_reporting(capsys):
    # same machinery the verify paths use, exercised on unequal inputs
    a = closed_zn(2, 5)
    b = coloured_series(zn_group(2), 5) + coloured_series(zn_group(2), 5)
    code = cli._report("left", a, "right", b)
    out = capsys.readouterr().out
    assert code == 1
    assert out.startswith("MISMATCH at 1:") and "left has 1" in out and "right has 2" in out
