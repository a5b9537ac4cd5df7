"""Exit codes, golden outputs, and the determinism contract of the CLI."""

import json
import subprocess
import sys

from wittmod import Poly, VarContext, parse_poly
from wittmod.cli import run

GAMMA_D2_GOLDEN = (
    "x1^3*l1^2 - 3*x1*l1^2*a^2 - 2*l1^2*a^3 - 3*x1^2*l1^2 - 3*x1*l1^2*a"
    " + 2*x1*l1^2 + 2*l1^2*a"
)


def test_act_gamma_golden(capsys):
    code = run(
        [
            "act",
            "--family",
            "gamma",
            "--lambda",
            "sym",
            "--a",
            "sym",
            "--term",
            "d2",
            "--f",
            "1",
        ]
    )
    out = capsys.readouterr().out.strip()
    assert code == 0
    assert out == GAMMA_D2_GOLDEN
    # and the string is the expanded product the formula prescribes
    ctx = VarContext(1)
    x, a, lam = Poly.var(ctx, "x1"), Poly.var(ctx, "a"), Poly.var(ctx, "l1")
    assert parse_poly(out, ctx) == lam**2 * (x - 2 * a - 2) * (x + a) * (x + a - 1)


def test_verify_axioms_exit_zero(capsys):
    code = run(
        ["verify", "axioms", "--family", "omega", "--n", "2", "--kmax", "2", "--degmax", "2"]
    )
    assert code == 0
    assert "PASS" in capsys.readouterr().out


def test_bracket_virasoro(capsys):
    code = run(["bracket", "--algebra", "virasoro", "--x", "d-2", "--y", "d2"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "4*d0 - 1/2*C"


def test_bracket_errors(capsys):
    assert run(["bracket", "--algebra", "w", "--x", "C", "--y", "d1"]) == 2
    assert (
        run(
            [
                "bracket",
                "--algebra",
                "w+",
                "--n",
                "2",
                "--x",
                "t[-1,-1]d1",
                "--y",
                "d1",
            ]
        )
        == 2
    )
    assert "error:" in capsys.readouterr().err


def test_act_parse_error(capsys):
    code = run(["act", "--family", "omega", "--term", "d1", "--f", "x1^-1"])
    assert code == 2
    assert "position" in capsys.readouterr().err


def test_simplicity_expectations(capsys):
    base = [
        "simplicity",
        "--family",
        "omega",
        "--n",
        "1",
        "--lambda",
        "2",
        "--a",
        "-1",
        "--seed",
        "x1",
        "--depth",
        "3",
        "--kmax",
        "3",
    ]
    assert run(base + ["--expect", "not-simple"]) == 0
    out = capsys.readouterr().out
    assert "EVIDENCE_NOT_SIMPLE" in out
    # evidence contradicting the requested expectation
    assert run(base + ["--expect", "simple"]) == 1
    # no expectation: evidence alone is not a failure
    assert run(base) == 0


def test_simplicity_default_seeds(capsys):
    code = run(
        [
            "simplicity",
            "--family",
            "omega",
            "--lambda",
            "2",
            "--a",
            "0",
            "--depth",
            "3",
            "--kmax",
            "3",
            "--expect",
            "simple",
        ]
    )
    assert code == 0
    assert "EVIDENCE_REACHED_ONE" in capsys.readouterr().out


def test_json_report_shape(capsys):
    code = run(
        [
            "verify",
            "axioms",
            "--family",
            "gamma",
            "--kmax",
            "2",
            "--degmax",
            "2",
            "--json",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == ["check_name", "status", "counterexample", "witness", "stats"]
    assert doc["status"] == "PASS"


def test_json_determinism(capsys):
    argv = [
        "verify",
        "axioms",
        "--family",
        "omega",
        "--n",
        "2",
        "--kmax",
        "2",
        "--degmax",
        "2",
        "--json",
    ]
    assert run(argv + ["--jobs", "1"]) == 0
    doc1 = json.loads(capsys.readouterr().out)
    assert run(argv + ["--jobs", "2"]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    doc1["stats"].pop("elapsed_ms")
    doc2["stats"].pop("elapsed_ms")
    assert doc1 == doc2


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["verify", "axioms", "--family", "nosuch"]) == 2
    assert run(["act", "--family", "omega"]) == 2  # --term required
    assert run(["verify", "axioms", "--family", "omega", "--n", "2", "--lambda", "2"]) == 2
    assert run(["simplicity", "--family", "omega", "--seed", "x1"]) == 2
    capsys.readouterr()


def test_config_bound_errors(capsys):
    code = run(
        ["verify", "axioms", "--family", "omega", "--kmax", "0"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_wittmod_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("WITTMOD_JOBS", "2")
    assert run(["verify", "axioms", "--family", "omega", "--kmax", "1"]) == 0
    monkeypatch.setenv("WITTMOD_JOBS", "banana")
    assert run(["verify", "axioms", "--family", "omega", "--kmax", "1"]) == 2
    capsys.readouterr()


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "wittmod.cli", "bracket", "--x", "d1", "--y", "d-1"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert out.stdout.strip() == "-2*d0"


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()
