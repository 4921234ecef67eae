#!/usr/bin/env python3
"""
Command-line surface: output formats and exit statuses
"""

import json
import sys
from pathlib import Path
sys.path.append(str(Path(__file__).parent.parent / 'src'))

import pytest
from click.testing import CliRunner

from cli import cli, run


@pytest.fixture
def runner():
    return CliRunner()


def lines(result):
    return result.stdout.strip().split("\n")


@pytest.mark.parametrize("args, expected", [
    (["abundancy", "672"], "3/1"),
    (["abundancy", "12"], "7/3"),
    (["sigma", "28"], "56"),
    (["rad", "720"], "30"),
    (["factor", "30240"], "2^5 * 3^3 * 5 * 7"),
    (["factor", "1"], "1"),
])
def test_single_value_commands(runner, args, expected):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.stdout == expected + "\n"


@pytest.mark.parametrize("args", [
    ["sigma", "twelve"],
    ["factor", "12.5"],
    ["no-such-command"],
    ["factorial"],
    ["abc-quality", "--poly", "1,0,1"],
    ["lemma-check", "loopy", "--e-max", "6"],
])
def test_usage_errors_exit_two(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


@pytest.mark.parametrize("args", [
    ["sigma", "0"],
    ["factor", "0"],
    ["rad", "0"],
    ["abundancy", "--", "-12"],
    ["search", "--limit", "1"],
    ["abc-quality", "--a", "0", "--b", "5"],
])
def test_out_of_range_integers_are_domain_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    assert "Error:" in result.stderr


def test_domain_errors_exit_one(runner, tmp_path):
    bad = tmp_path / "bad.mpdb"
    bad.write_text("k=2; m=2 * 3\nk=3; m=2^2 * 3\n")
    result = runner.invoke(cli, ["verify-bound", "--db", str(bad)])
    assert result.exit_code == 1
    assert "sigma(m) = 28 but k*m = 36" in result.stderr

    result = runner.invoke(cli, ["abc-quality", "--a", "2", "--b", "4"])
    assert result.exit_code == 1


def test_verify_bound_on_seed(runner):
    result = runner.invoke(cli, ["verify-bound"])
    assert result.exit_code == 0
    out = lines(result)
    assert out[0] == "k\tm\tbeta\trad\tverdict"
    assert out[1] == "2\t6\t5/6\t6\tboundary"
    assert out[2] == "2\t28\t7/8\t14\tholds"
    assert len(out) == 20
    assert sum(line.endswith("\tholds") for line in out) == 18


def test_verify_bound_classical(runner):
    result = runner.invoke(cli, ["verify-bound", "--classical"])
    out = lines(result)
    assert out[0] == "m\t17/26\t2/3\t9/14\tsqrt_ratio"
    assert len(out) == 7
    assert out[1].startswith("6\tTrue\tTrue\tTrue\t2.449")


def test_loopy_reports_counterexample_total(runner):
    result = runner.invoke(cli, ["--workers", "1", "lemma-check", "loopy",
                                 "--e-max", "3", "--k-max", "4", "--margin", "50", "--variant", "both"])
    assert result.exit_code == 0
    assert lines(result)[-1] == "0 counterexamples"


def test_loopy_gap_rows(runner):
    result = runner.invoke(cli, ["--workers", "1", "lemma-check", "loopy", "--gap"])
    out = lines(result)
    assert out[0] == "variant\te\tks\tp_y"
    assert out[1:4] == ["proof\t1\t2\t4", "proof\t2\t2,2\t10", "proof\t3\t2,2,2\t22"]
    assert out[-1] == "0 counterexamples"


def test_lemma_checks_run_clean(runner):
    for args in (["valuation", "--p-limit", "200"], ["product", "--trials", "200"],
                 ["odd-chain", "--trials", "200"]):
        result = runner.invoke(cli, ["lemma-check"] + args)
        assert result.exit_code == 0
        assert len(lines(result)) == 1  # header only


def test_json_output(runner):
    result = runner.invoke(cli, ["--json", "abundancy", "12"])
    assert json.loads(result.stdout) == {"abundancy": "7/3"}

    result = runner.invoke(cli, ["--json", "--workers", "1", "search", "--limit", "500"])
    rows = [json.loads(line) for line in lines(result)]
    assert rows == [
        {"m": 6, "k": 2, "label": "perfect"},
        {"m": 28, "k": 2, "label": "perfect"},
        {"m": 120, "k": 3, "label": "3-perfect"},
        {"m": 496, "k": 2, "label": "perfect"},
    ]


def test_search_output_is_deterministic(runner):
    single = runner.invoke(cli, ["--workers", "1", "search", "--limit", "40000", "--segment-size", "3000"])
    pooled = runner.invoke(cli, ["--workers", "2", "search", "--limit", "40000", "--segment-size", "3000"])
    assert single.exit_code == pooled.exit_code == 0
    assert single.stdout == pooled.stdout
    assert lines(single)[-2:] == ["30240\t4\t4-perfect", "32760\t4\t4-perfect"]


def test_search_persist_then_ingest(runner, tmp_path):
    path = tmp_path / "found.mpdb"
    result = runner.invoke(cli, ["--workers", "1", "search", "--limit", "1000", "--persist", str(path)])
    assert "5 records appended" in result.stderr
    result = runner.invoke(cli, ["ingest", str(path)])
    assert lines(result)[1] == "2\t6\t2 * 3\tsearch"


def test_repdigit_scan(runner):
    result = runner.invoke(cli, ["repdigit", "--base", "2", "--d-max", "10", "--s-max", "3"])
    assert lines(result) == [
        "D\ts\tk\tpower_of_two\tstatus",
        "2\t1\t2\tTrue\tmultiperfect",
        "8\t2\t3\tFalse\tmultiperfect",
    ]


def test_factorial_commands(runner):
    result = runner.invoke(cli, ["factorial", "--scan", "20"])
    assert lines(result) == ["k\tn", "2\t3", "3\t5"]

    result = runner.invoke(cli, ["--workers", "1", "factorial", "--shifted", "6"])
    out = lines(result)
    assert out[0] == "n\tstatus\tk\tfactorization\tcofactor"
    assert out[4].startswith("3\tprime\t")
    assert out[5].startswith("4\tnot-multiperfect\t\t5^2")


def test_abc_quality_pair(runner):
    result = runner.invoke(cli, ["abc-quality", "--a", "1", "--b", "8"])
    header, row = lines(result)
    assert header == "a\tb\tc\trad\tquality"
    assert row.startswith("1\t8\t9\t6\t1.226")


def test_run_returns_exit_status(tmp_path, capsys):
    assert run(["sigma", "6"]) == 0
    assert capsys.readouterr().out == "12\n"
    assert run(["sigma", "12x"]) == 2
    assert run(["sigma", "0"]) == 1
    assert run(["sigma", "--", "-6"]) == 1
    bad = tmp_path / "bad.mpdb"
    bad.write_text("k=oops\n")
    assert run(["ingest", str(bad)]) == 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
