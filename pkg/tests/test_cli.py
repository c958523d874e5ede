"""Command line front end: subcommands, output formats, exit codes."""

import io
import json

import pytest

from extnum.cli import run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- eval -----------------------------------------------------------------


def test_eval_unity(capsys):
    code, out, _ = run(capsys, "eval", "u(x+O(1))")
    assert code == 0 and out == "1 + O(x^-1)\n"


def test_eval_counterexample_expressions(capsys):
    code, out, _ = run(capsys, "eval", "O(x^-1)*(1-1)")
    assert code == 0 and out == "0\n"
    code, out, _ = run(capsys, "eval", "O(x^-1)*1 - O(x^-1)*1")
    assert code == 0 and out == "O(x^-1)\n"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "3 + 1/x", "--json")
    assert code == 0
    assert json.loads(out) == {"rep": "3 + x^-1", "mag": {"kind": "zero"}}


def test_eval_division_by_magnitude(capsys):
    code, out, err = run(capsys, "eval", "1/O(1)")
    assert code == 1 and out == ""
    assert "DivisionByMagnitude" in err


def test_eval_parse_error(capsys):
    code, _, err = run(capsys, "eval", "x^")
    assert code == 1 and "ParseError" in err and "2..2" in err


# -- cmp ----------------------------------------------------------------------


def test_cmp_separated(capsys):
    code, out, _ = run(capsys, "cmp", "1+O(x^-1)", "2+O(x^-1)")
    assert code == 0
    assert out.splitlines() == ["<", "left <= right: true", "right <= left: false"]


def test_cmp_nested(capsys):
    code, out, _ = run(capsys, "cmp", "1+O(x^-1)", "O(1)")
    assert code == 0
    assert out.splitlines()[0] == "⊂"
    assert "left <= right: true" in out


def test_cmp_non_archimedean(capsys):
    code, out, _ = run(capsys, "cmp", "x", "1000000")
    assert code == 0 and out.splitlines()[0] == ">"


def test_cmp_json(capsys):
    code, out, _ = run(capsys, "cmp", "x", "x", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["symbol"] == "=" and payload["relation"] == "equal"
    assert payload["leq_left_right"] and payload["leq_right_left"]


def test_cmp_propagates_errors(capsys):
    code, _, err = run(capsys, "cmp", "x", "1/O(1)")
    assert code == 1 and "DivisionByMagnitude" in err


# -- audit ------------------------------------------------------------------------


def test_audit_json_output(capsys):
    code, out, _ = run(capsys, "audit", "--seed", "7", "--trials", "3")
    assert code == 0
    report = json.loads(out)
    assert report["seed"] == 7 and report["trials"] == 3
    assert len(report["axioms"]) == 29
    assert all(a["fail"] == 0 for a in report["axioms"])


def test_audit_axiom_filter(capsys):
    code, out, _ = run(capsys, "audit", "--trials", "2", "--axiom", "A22,T7")
    assert code == 0
    assert [a["id"] for a in json.loads(out)["axioms"]] == ["A22", "T7"]


def test_audit_deterministic_output(capsys):
    _, one, _ = run(capsys, "audit", "--seed", "5", "--trials", "4")
    _, two, _ = run(capsys, "audit", "--seed", "5", "--trials", "4")
    assert one == two


def test_audit_counterexample_exit_code(capsys, monkeypatch):
    class FailingReport:
        all_passed = False

        @staticmethod
        def to_json_text():
            return "{}"

    monkeypatch.setattr("extnum.cli.audit", lambda **kw: FailingReport)
    code, out, _ = run(capsys, "audit")
    assert code == 2


def test_audit_usage_errors(capsys):
    code, _, err = run(capsys, "audit", "--trials", "0")
    assert code == 64 and "trials" in err
    code, _, err = run(capsys, "audit", "--axiom", "A99")
    assert code == 64


# -- usage -------------------------------------------------------------------------


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 64 and "usage error" in err


def test_unknown_flag(capsys):
    code, _, err = run(capsys, "eval", "x", "--wat")
    assert code == 64


def test_missing_argument(capsys):
    code, _, _ = run(capsys, "eval")
    assert code == 64


# -- repl ----------------------------------------------------------------------------


def test_repl_session(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x+1\n_*2\nbad(\nquit\n"))
    code = run_command(["repl"])
    out = capsys.readouterr().out
    assert code == 0
    assert "x + 1" in out
    assert "2*x + 2" in out
    assert "ParseError" in out


def test_repl_eof_exits(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("1+1\n"))
    code = run_command(["repl"])
    assert code == 0
    assert "2" in capsys.readouterr().out
