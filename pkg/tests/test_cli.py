import json
import subprocess
import sys

import pytest

from tqa.cli import main


def run(*argv, env=None):
    import os
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "tqa.cli", *argv], capture_output=True, text=True,
                          env=full_env)


def report(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_casimir_det_example(capsys):
    code, rep = report(capsys, "verify", "casimir", "--family", "o", "--n", "3", "--set", "det")
    assert code == 0
    assert rep["summary"]["fail"] == 0
    assert any("markov" in c["id"].lower() for c in rep["checks"])


def test_ybe_example(capsys):
    code, rep = report(capsys, "verify", "tensor", "--suite", "ybe", "--n", "2")
    assert code == 0 and rep["summary"]["pass"] > 0


def test_braid_o_n2(capsys):
    code, rep = report(capsys, "verify", "braid-o", "--n", "2")
    assert code == 0
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids) and "image-s(i)/N=2/i=1" in ids


def test_report_schema(capsys):
    _, rep = report(capsys, "verify", "sp-probes", "--n", "1")
    assert {"suite", "family", "params", "checks", "summary", "version", "seed"} <= set(rep)
    for c in rep["checks"]:
        assert set(c) == {"id", "description", "source", "status", "witness", "elapsed_ms"}
        assert (c["witness"] is None) == (c["status"] == "pass")
    assert rep["summary"]["finding"] >= 1


def test_failures_exit_one(capsys):
    code, rep = report(capsys, "verify", "braid-o", "--set", "control")
    assert code == 1 and rep["summary"]["fail"] >= 1


def test_findings_do_not_fail(capsys):
    code, rep = report(capsys, "verify", "gamma2")
    assert code == 0 and rep["summary"]["finding"] == 1


def test_reports_are_byte_identical(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert main(["verify", "poisson", "--n", "3", "--seed", "5", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_timing_flag(capsys):
    _, rep = report(capsys, "verify", "limit", "--n", "3", "--timing")
    assert all(isinstance(c["elapsed_ms"], (int, float)) for c in rep["checks"])


def test_smoke_all(capsys):
    code, rep = report(capsys, "verify", "all", "--smoke")
    assert code == 0 and rep["summary"]["fail"] == 0 and rep["summary"]["pass"] > 200


@pytest.mark.parametrize("argv", [
    ["verify", "all"],
    ["verify", "defrel", "--family", "gl", "--n", "9"],
    ["verify", "nosuch"],
    ["nf", "s[1]", "--family", "o", "--n", "3"],
    ["verify", "tensor", "--suite", "bogus"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_nf_and_dump(capsys, tmp_path):
    assert main(["nf", "s[3,2]*s[2,1]", "--family", "o", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "-1 q^-2 s[3,1] + 1 s[3,1] + 1 q^-1 s[2,1]*s[3,2]"
    path = tmp_path / "o3.txt"
    assert main(["algebra", "dump", "--family", "o", "--n", "3", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "# U'_q(o_3)" and len(lines) == 2 + 3


def test_console_entry_and_nontermination():
    res = run("nf", "s[3,2]*s[2,1]*s[3,1]", "--family", "o", "--n", "3", env={"TQA_REWRITE_CAP": "1"})
    assert res.returncode == 3
    err = json.loads(res.stderr)
    assert err["error"] == "non-termination" and err["word"]
    ok = run("verify", "defrel", "--smoke")
    assert ok.returncode == 0 and json.loads(ok.stdout)["summary"]["fail"] == 0
