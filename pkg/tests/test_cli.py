import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from corpus import SIGMA0_OPS, sequents_strategy
from nonsense.cli import run


def call(*argv, stdin: str | None = None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_prove_json_is_checkable(monkeypatch, tmp_path):
    code, out, _ = call("prove", "--calculus", "h", "p => p | q", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["sequent"] == {"ant": ["p"], "suc": ["p | q"]}
    path = tmp_path / "proof.json"
    path.write_text(out)
    assert call("check", str(path), "--calculus", "h", "--cut-free-check")[0] == 0
    code, report, _ = call("check", "-", "--calculus", "h", "--format", "json", stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(report) == {"status": "ok", "errors": []}


def test_valid_reports_countermodel():
    code, out, err = call("valid", "--logic", "b3", "=> p | ~p", "--format", "json")
    assert code == 1
    assert json.loads(out) == {"logic": "b3", "valuation": {"p": "1/2"}, "sequent": {"ant": [], "suc": ["p | ~p"]}}
    assert "not valid" in err
    assert call("valid", "--logic", "h3", "=> p | ~p")[0] == 0


def test_table_negation():
    code, out, _ = call("table", "--logic", "h3", "~p")
    assert code == 0
    assert out.splitlines() == ["p=0 | 1", "p=1/2 | 1/2", "p=1 | 0"]
    code, out, _ = call("table", "--logic", "b3", "#b p", "--format", "json")
    assert [row["value"] for row in json.loads(out)["rows"]] == ["0", "0", "1"]


def test_prove_expands_derived_connectives():
    code, out, err = call("prove", "--calculus", "b", "p & q => p")
    assert code == 0
    assert "expanded" not in err
    code, out, err = call("prove", "--calculus", "h", "p & q => p", "--format", "json")
    assert code == 1
    assert "expanded to Sigma1" in err
    assert json.loads(out)["valuation"] == {"p": "0", "q": "1/2"}


def test_prove_with_derived_rules_and_elaboration():
    code, out, _ = call("prove", "--calculus", "h", "p & q => q & p", "--derived", "--format", "json")
    assert code == 0
    assert "AndL_H" in out
    code, out, _ = call("prove", "--calculus", "h", "p & q => q & p", "--derived", "--elaborate", "--format", "json")
    assert code == 0
    assert "AndL_H" not in out and "NegL_H" in out


def test_prove_latex_and_text():
    code, out, _ = call("prove", "--calculus", "b", "~p, p =>", "--format", "latex")
    assert code == 0
    assert out.count(r"\dfrac") == 2
    assert r"\neg p" in out and r"\mathrm{NegL}" in out
    code, out, _ = call("prove", "--calculus", "c", "p & q => p")
    assert code == 0
    assert out.splitlines()[0] == "p & q => p    [AndL: p & q]"


def test_classical_prove_failure():
    code, out, _ = call("prove", "--calculus", "c2", "p => q", "--format", "json")
    assert code == 1
    assert json.loads(out)["logic"] == "cpl"


def test_classify():
    code, out, _ = call("classify", "p => p | q", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["cpl_valid"] and data["h3_valid"] and not data["b3_valid"]
    assert data["countermodels"]["b3"]["valuation"] == {"p": "1", "q": "1/2"}
    assert call("classify", "p => q, r")[0] == 2


def test_expand():
    code, out, _ = call("expand", "p -> q", "--to", "sigma1")
    assert (code, out.strip()) == (0, "~p | q")
    code, out, _ = call("expand", "p | q", "--to", "sigma2")
    assert out.strip() == "~(~p & ~q)"


def test_check_rejects_bad_proof(tmp_path):
    bad = {
        "sequent": {"ant": ["~p", "p"], "suc": ["q"]},
        "rule": "NegL_H",
        "principal": {"side": "ant", "formula": "~p"},
        "premises": [
            {
                "sequent": {"ant": ["p"], "suc": ["p", "q"]},
                "rule": "WR",
                "principal": {"side": "suc", "formula": "q"},
                "premises": [{"sequent": {"ant": ["p"], "suc": ["p"]}, "rule": "Ax", "principal": None, "premises": []}],
            }
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = call("check", str(path), "--calculus", "h", "--format", "json")
    assert code == 1
    assert json.loads(out)["errors"][0]["kind"] == "proviso-violated"
    assert call("check", str(path), "--calculus", "b")[0] == 1
    path.write_text("{not json")
    assert call("check", str(path))[0] == 2
    assert call("check", str(tmp_path / "missing.json"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["prove", "p =>> q"],
        ["prove", "p & => q"],
        ["prove", "--calculus", "x", "p => p"],
        ["valid", "--logic", "k3", "p => p"],
        ["table", "#b p", "--logic", "h3"],
        ["expand", "#h p", "--to", "sigma1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_cap_error_exits_2(monkeypatch):
    monkeypatch.setenv("NONSENSE_MAX_ATOMS", "1")
    code, _, err = call("valid", "p => q")
    assert code == 2
    assert "cap" in err


@settings(max_examples=40)
@given(sequents_strategy(SIGMA0_OPS, max_side=2, max_leaves=4))
def test_prove_and_valid_agree(s):
    text = str(s)
    for calculus, logic in (("h", "h3"), ("b", "b3")):
        assert call("prove", "--calculus", calculus, text)[0] == call("valid", "--logic", logic, text)[0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nonsense", "valid", "--logic", "h3", "p => p"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "valid"
