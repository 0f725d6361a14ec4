import csv
import io
import json
import shutil
import subprocess

import pytest

from ninthschur import __version__
from ninthschur.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# verify -----------------------------------------------------------------------

def test_verify_dj_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dj", "--max-cells", "6")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1].startswith("suite=dj mode=exact total=")
    assert "failed=0" in out


def test_verify_rectangle_reports_degenerate_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rectangle")
    assert code == EXIT_FAIL
    assert "failed=9" in out
    bad = [l for l in out.splitlines() if l.startswith("unequal")]
    assert len(bad) == 9 and all("a=0;b=0" in l for l in bad)
    code, out, _ = run(capsys, "verify", "--suite", "rectangle", "--exclude-degenerate")
    assert code == EXIT_OK and "total=69" in out


def test_json_report_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["verify", "--suite", "dj", "--max-cells", "5", "--json", str(p)]) == EXIT_OK
    capsys.readouterr()
    a, b = (p.read_text() for p in paths)
    assert a == b
    doc = json.loads(a)
    assert doc["schema"] == 1 and doc["tool"]["version"] == __version__
    assert doc["summary"]["failed"] == 0 and doc["summary"]["total"] == len(doc["instances"])
    assert doc["config"]["max_cells"] == 5
    ids = [i["id"] for i in doc["instances"]]
    assert ids == sorted(ids)
    assert all("seconds" not in i for i in doc["instances"])


def test_json_timing_and_modular(capsys, tmp_path):
    p = tmp_path / "m.json"
    code = main(["verify", "--suite", "dj", "--max-cells", "4", "--mode", "modular", "--seed", "7",
                 "--trials", "3", "--timing", "--json", str(p)])
    capsys.readouterr()
    assert code == EXIT_OK
    inst = json.loads(p.read_text())["instances"]
    assert all(i["result"] == "equal-with-confidence" and i["seed"] == 7 and i["trials"] == 3 for i in inst)
    assert all("seconds" in i for i in inst)


def test_json_to_stdout(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "dj", "--max-cells", "3", "--json", "-")
    assert code == EXIT_OK
    doc = json.loads(out[out.index("{"):])
    assert doc["suite"] == "dj"


def test_unwritable_json_path(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--suite", "dj", "--json", str(tmp_path / "no" / "x.json"))
    assert code == EXIT_USAGE and "cannot write" in err


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nosuch"])
    assert exc.value.code == EXIT_USAGE


def test_bad_config_is_usage_error(capsys, tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("digits = zero\n")
    code, _, err = run(capsys, "verify", "--suite", "dj", "--config", str(p))
    assert code == EXIT_USAGE and "digits" in err


# eval -------------------------------------------------------------------------

def test_eval_ninth(capsys):
    for route in ("jt", "minor"):
        code, out, _ = run(capsys, "eval", "ninth", "--shape", "2/0", "--r", "2", "--route", route)
        assert code == EXIT_OK and out.strip() == "h^(2)_2"


def test_eval_rect_value(capsys):
    code, out, _ = run(capsys, "eval", "rect", "--p", "3", "--q", "3")
    assert code == EXIT_OK
    assert out.startswith("3.45550409077993778219")


def test_eval_mzv(capsys):
    code, out, _ = run(capsys, "eval", "mzv", "--index", "2,1", "--show-poly")
    assert out.strip() == "(1*ζ(2))*T^1 + (-1*ζ(1,2) + -1*ζ(3))"
    code, out, _ = run(capsys, "eval", "mzv", "--index", "1,2", "--star", "--prec", "20")
    assert code == EXIT_OK and out.startswith("2.404113806319188570")


def test_eval_zeta(capsys):
    code, out, _ = run(capsys, "eval", "zeta", "--shape", "1", "--entries", "2", "--M", "3")
    assert code == EXIT_OK and out.strip() == "49/36"
    code, out, _ = run(capsys, "eval", "zeta", "--shape", "2,2", "--diag", "1,2,1", "--M", "1000", "--method",
                       "float")
    assert code == EXIT_OK and "float64" in out
    code, _, err = run(capsys, "eval", "zeta", "--shape", "2", "--entries", "2")
    assert code == EXIT_USAGE and "needs 2 values" in err
    code, _, err = run(capsys, "eval", "zeta", "--shape", "2")
    assert code == EXIT_USAGE


def test_eval_genfun(capsys):
    code, out, _ = run(capsys, "eval", "genfun", "--i", "1", "--j", "0", "--prec", "15")
    assert code == EXIT_OK and out.startswith("1.6449340668")


@pytest.mark.parametrize("argv", [["eval", "ninth"], ["eval", "rect", "--p", "2"], ["eval", "mzv"],
                                  ["eval", "ninth", "--shape", "1,2"], ["eval", "rect", "--p", "1", "--q", "1",
                                                                         "--abc", "1,2"]])
def test_eval_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE and err.startswith("error:")


# table ------------------------------------------------------------------------

def test_table_zstar_csv(capsys):
    code, out, _ = run(capsys, "table", "zstar", "--max-a", "1", "--max-c", "1", "--prec", "20")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["a"], r["c"]) for r in rows] == [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")]
    assert rows[0]["value"].startswith("1.644934066848")


def test_table_rect_json(capsys, tmp_path):
    p = tmp_path / "r.json"
    code, _, _ = run(capsys, "table", "rect", "--max-p", "2", "--max-q", "2", "--format", "json", "--out", str(p))
    assert code == EXIT_OK
    doc = json.loads(p.read_text())
    assert doc["columns"] == ["m", "p", "q", "value"] and len(doc["rows"]) == 4


def test_table_empty_and_cap(capsys):
    code, out, _ = run(capsys, "table", "zstar", "--max-a", "-1")
    assert code == EXIT_OK and out.strip() == "a,c,value"
    code, _, err = run(capsys, "table", "rect", "--max-p", "7")
    assert code == EXIT_USAGE and "cap" in err


# console script ----------------------------------------------------------------

@pytest.mark.skipif(shutil.which("ninthschur") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["ninthschur", "--version"], capture_output=True, text=True, check=True)
    assert __version__ in out.stdout
