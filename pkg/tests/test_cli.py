import json
import subprocess
import sys
import time

import pytest

from modeq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_phi(capsys):
    code, out, _ = run(capsys, "eval", "phi", "--q", "1/10", "--digits", "12")
    assert code == 0
    # phi(1/10) = 1.2002000020000000002...
    assert out.strip() == "1.20020000200"


def test_eval_alpha_and_phi_at_zero(capsys):
    assert run(capsys, "eval", "alpha", "--q", "1/10")[1].startswith("0.8024")
    code, out, _ = run(capsys, "eval", "phi", "--q", "0")
    assert code == 0 and float(out) == 1


@pytest.mark.parametrize("argv", [
    ["eval", "psi", "--q", "1/10"],
    ["eval", "f", "--a", "1/5", "--b", "1/5"],
    ["eval", "2f1", "--x", "1/2"],
    ["eval", "beta", "--q", "1/10", "--n", "15"],
    ["eval", "m", "--q", "1/10", "--n1", "3", "--n2", "5"],
])
def test_eval_functions(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and float(out) > 0


@pytest.mark.parametrize("argv", [
    ["eval", "phi", "--q", "1"],
    ["eval", "phi", "--q", "abc"],
    ["eval", "alpha"],
    ["eval", "nosuch", "--q", "1/2"],
])
def test_eval_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_single_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "EQ19", "--q", "1/10", "--json")
    assert code == 0
    records = json.loads(out)
    assert len(records) == 1
    rec = records[0]
    assert set(rec) == {"id", "q", "residual", "tolerance", "passed", "precision_bits", "elapsed_ms"}
    assert rec["passed"] is True and rec["id"] == "EQ19"


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--json")
    records = json.loads(out)
    assert code == 0 and len(records) == 23 * 7
    keys = [(r["id"], r["q"]) for r in records]
    from fractions import Fraction
    assert keys == sorted(keys, key=lambda k: (k[0], Fraction(k[1])))


def test_verify_unreachable_tolerance_exits_one(capsys):
    assert run(capsys, "verify", "--id", "EQ10", "--tolerance-exponent", "200")[0] == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--digits", "20"],
    ["verify", "--q", "3/5"],
    ["verify", "--q", "0"],
    ["verify", "--id", "EQ99"],
    ["verify", "--config", "/nonexistent/file"],
])
def test_verify_config_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_json_report_stable(capsys):
    def records():
        _, out, _ = run(capsys, "verify", "--id", "EQ40", "--id", "EQ12", "--json")
        return [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in json.loads(out)]
    assert records() == records()


def test_limit_tier_is_fast(capsys):
    start = time.perf_counter()
    code, out, _ = run(capsys, "verify", "--tier", "limits")
    assert code == 0 and time.perf_counter() - start < 1.0
    assert out.strip().endswith("12/12 passed")


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# smoke run\ndigits = 50\ngrid = 1/20, 1/10\nids = EQ10, EQ41\nformat = json\n")
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    records = json.loads(out)
    assert code == 0 and len(records) == 4
    assert {r["precision_bits"] for r in records} == {167}
    cfg.write_text("colour = blue\n")
    assert run(capsys, "verify", "--config", str(cfg))[0] == 2


def test_full_residual_flag(capsys):
    _, out, _ = run(capsys, "verify", "--id", "EQ19", "--q", "1/10", "--json", "--full-residual")
    assert len(json.loads(out)[0]["residual"]) > 50


def test_prove(capsys):
    code, out, _ = run(capsys, "prove", "eq34")
    assert code == 0 and "EXACT ZERO" in out
    code, out, _ = run(capsys, "prove", "all", "--json")
    certs = json.loads(out)
    assert code == 0 and len(certs) == 8
    assert all(c["status"] == "EXACT ZERO" for c in certs)
    assert run(capsys, "prove", "nosuchstep")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "modeq", "prove", "eq30"], capture_output=True, text=True)
    assert proc.returncode == 0 and "EXACT ZERO" in proc.stdout
