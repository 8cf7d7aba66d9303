import io
import json
import os

import pytest

from ldirc.cli import build_parser, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def report(capsys, *argv):
    capsys.readouterr()
    code, text = run(*argv)
    assert text == ""
    return code, capsys.readouterr().err


LEVELS = ("--nd", "--nc", "--nr", "--ns")


def levels(*values):
    return [str(arg) for pair in zip(LEVELS, values) for arg in pair]


@pytest.mark.parametrize(
    "values, capacity",
    [((4, 2, 3, 5), 7), ((3, 3, 5, 4), 4), ((2, 1, 0, 3), 2)],
)
def test_capacity(capsys, values, capacity):
    """ Test the capacity command. """
    code, text = report(capsys, "capacity", *levels(*values))
    assert code == 0
    assert f"capacity  {capacity}\n" in text


def test_capacity_report(capsys):
    """ Test the details of the capacity report. """
    code, text = report(capsys, "capacity", *levels(4, 2, 3, 5))
    assert code == 0
    assert "binding   genie-source-relay" in text
    _, text = report(capsys, "capacity", *levels(3, 3, 5, 4))
    assert "scheme    II" in text
    _, text = report(capsys, "capacity", *levels(4, 2, 3, 1))
    assert "relay link is too weak" in text


def test_bounds(capsys):
    """ Test the bounds command. """
    code, text = report(capsys, "bounds", *levels(4, 2, 3, 5))
    assert code == 0
    assert "minimum   7 (genie-source-relay)" in text
    assert "n/a" in text
    assert "genie-source-relay   (23)" in text
    assert "equal-gains          (16)" in text


def test_gdof(capsys):
    """ Test the gdof command. """
    argv = ["gdof", "--alpha", "3/2", "--beta", "2", "--gamma", "3"]
    code, text = report(capsys, *argv)
    assert code == 0
    assert "d_irc     7/2" in text
    assert "cut-set-mac          (30)" in text


def test_simulate(capsys):
    """ Test a simulation from the command line. """
    argv = ["simulate", "--scheme", "II", *levels(3, 3, 5, 4), "-n", "4"]
    code, text = report(capsys, *argv, "--seed", "7")
    assert code == 0
    assert "success     yes" in text
    assert "asymptotic  4" in text
    assert "delivered   12 bits" in text
    _, again = report(capsys, *argv, "--seed", "7")
    assert text == again


def test_simulate_classified(capsys):
    """ Test a simulation with the scheme of the regime. """
    code, text = report(capsys, "simulate", *levels(3, 1, 2, 5))
    assert code == 0
    assert "scheme      WI1" in text
    assert "asymptotic  6" in text
    assert "achieved    27/5" in text


def test_simulate_dump(capsys, tmp_path):
    """ Test writing the trace of a simulation. """
    path = os.path.join(str(tmp_path), "trace.txt")
    argv = ["simulate", *levels(3, 3, 5, 4), "-n", "3", "--dump-trace", path]
    code, _ = report(capsys, *argv)
    assert code == 0
    with open(path) as stream:
        lines = stream.read().splitlines()
    assert lines[0] == "k x1 x2 xr y1 y2 yr"
    assert len(lines) == 4


def test_verify_empty(capsys):
    """ Test a verification over an empty range. """
    code, text = run("verify", "--min-level", "1", "--max-level", "0")
    assert code == 0
    result = json.loads(text)
    assert result["grid_size"] == 0
    assert result["checks"] == [{"name": "sandwich", "failures": []}]
    assert "0 tuples checked" in capsys.readouterr().err


def test_verify_small():
    """ Test a verification over a small range. """
    code, text = run("verify", "--max-level", "2", "--checks", "sandwich,tables")
    assert code == 0
    assert json.loads(text)["grid_size"] == 3 * 3 * 3


def test_curve():
    """ Test the curve command. """
    argv = ["curve", "--beta", "2", "--gamma", "3", "--alpha-min", "1"]
    code, text = run(*argv, "--alpha-max", "2", "--step", "1/2")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "alpha,d_irc,d_ic,binding"
    assert [line.split(",")[:2] for line in lines[1:]] == [
        ["1", "2"],
        ["1.5", "3.5"],
        ["2", "3"],
    ]


def test_curve_golden(tmp_path):
    """ Test writing the golden curves. """
    code, _ = run("curve", "--golden", str(tmp_path), "--step", "1/2")
    assert code == 0
    names = sorted(os.listdir(str(tmp_path)))
    assert len(names) == 8
    assert "curve_b0.1_g0.7.csv" in names


def test_subchannels(capsys):
    """ Test the sub-channel plan. """
    argv = ["subchannels", "--power", "1048576", "--gd", "1", "--gc", "1"]
    code, text = report(capsys, *argv, "--gr", "1", "--gs", "1/16", "-N", "5")
    assert code == 0
    assert "log2 delta   4" in text
    assert "levels       (n_d=5, n_c=5, n_r=5, n_s=4)" in text
    assert "usable       yes" in text


def test_errors(capsys):
    """ Test that library errors exit with 2. """
    code, _ = run("simulate", "--scheme", "WI1", *levels(3, 3, 5, 4))
    assert code == 2
    assert "ldirc simulate:" in capsys.readouterr().err
    code, _ = run("curve", "--step", "1/2")
    assert code == 2
    code, _ = run("subchannels", "--power", "1", "--gd", "1", "--gc", "1",
                  "--gr", "1", "--gs", "1", "-N", "2")
    assert code == 2


def test_parser():
    """ Test rejected arguments. """
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(["verify", "--checks", "bogus"])
    with pytest.raises(SystemExit):
        parser.parse_args(["capacity", "--nd", "1"])
