import csv
import io
import json
import subprocess
import sys

import pytest

from fillcurve import suite
from fillcurve.cli import main
from fillcurve.ffield import GF
from fillcurve.forms import canonical_form, format_form


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestVerify:
    def test_q2_passes(self, capsys):
        code, data = run_json(capsys, "verify", "--q", "2")
        assert code == 0 and data["exit_status"] == 0
        assert data["schema"] == "fillcurve/1"
        assert data["command"] == ["verify", "--q", "2"]
        assert data["counts"]["failed"] == 0
        assert all(c["status"] == "pass" for c in data["checks"])
        assert list(data) == ["schema", "command", "checks", "counts", "status", "exit_status"]

    def test_deep_adds_m6(self, capsys):
        code, data = run_json(capsys, "verify", "--q", "2,3", "--deep")
        assert code == 0
        smooth = [c for c in data["checks"] if c["name"] == "smoothness"]
        assert [c["details"]["degrees"] for c in smooth] == [[1, 2, 3, 6]] * 2

    @pytest.mark.parametrize("q", ["6", "8", "x", "", "7 --deep"])
    def test_usage_errors(self, capsys, q):
        argv = ["verify", "--q", *q.split()] if q else ["verify", "--q", ""]
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == "" and "error" in err

    def test_bad_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--bogus"])
        assert exc.value.code == 2

    def test_failure_exit_1_with_witness(self, capsys, monkeypatch):
        monkeypatch.setitem(suite.EXPECTED_AUT, 2, 8)
        code, data = run_json(capsys, "verify", "--q", "2")
        assert code == 1 and data["status"] == "fail"
        (bad,) = [c for c in data["checks"] if c["status"] == "fail"]
        assert bad["name"] == "aut_orders"
        assert bad["witness"] == {"cubic": "t^3-(0*t^2+1*t+1)", "order": 7, "expected": 8}

    def test_threads_env(self, capsys, monkeypatch):
        _, one, _ = run(capsys, "verify", "--q", "2,3")
        monkeypatch.setenv("FILLCURVE_THREADS", "3")
        _, three, _ = run(capsys, "verify", "--q", "2,3")
        assert one == three
        monkeypatch.setenv("FILLCURVE_THREADS", "0")
        assert run(capsys, "verify", "--q", "2")[0] == 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "--q", "2", "--out", str(target))
        assert code == 0 and out == ""
        _, direct, _ = run(capsys, "verify", "--q", "2")
        assert target.read_text(encoding="utf-8") == direct


class TestClassify:
    def test_q2(self, capsys):
        code, data = run_json(capsys, "classify", "--q", "2")
        assert code == 0
        assert len(data["report"]["classes"]) == 1

    def test_q4_pure_classes(self, capsys):
        _, data = run_json(capsys, "classify", "--q", "4")
        reps = [c["representative"] for c in data["report"]["classes"]]
        assert "t^3-([0,0]*t^2+[0,0]*t+[0,1])" in reps
        assert "t^3-([0,0]*t^2+[0,0]*t+[1,1])" in reps

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "classify", "--q", "3", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows == [["q", "representative", "size", "labels"],
                        ["3", "t^3-(0*t^2+1*t+1)", "2", "form_i"],
                        ["3", "t^3-(1*t^2+0*t+2)", "6", "form_iii"]]

    def test_text(self, capsys):
        code, out, err = run(capsys, "classify", "--q", "5", "--format", "text")
        assert code == 0 and "2 classes" in out and "elapsed" in err


class TestCurve:
    def test_smooth_q2(self, capsys):
        code, data = run_json(capsys, "curve", "--q", "2", "--cubic", "0,1,1")
        rep = data["report"]
        assert code == 0 and rep["smooth"] and rep["automorphisms"]["order"] == 7
        assert rep["F"] == format_form(canonical_form((0, 1, 1), GF(2)))

    def test_smooth_q3(self, capsys):
        _, data = run_json(capsys, "curve", "--q", "3", "--cubic", "0,1,1")
        aut = data["report"]["automorphisms"]
        assert aut["order"] == 39 and aut["tallini_corrected"]

    def test_singular_q2(self, capsys):
        code, data = run_json(capsys, "curve", "--q", "2", "--cubic", "0,0,1")
        rep = data["report"]
        assert code == 0 and not rep["smooth"]
        assert rep["scan"]["singular_points"]["1"] == ["(1:1:1)"]
        assert "automorphisms" not in rep

    def test_extension_element(self, capsys):
        code, data = run_json(capsys, "curve", "--q", "4", "--cubic", "0,0,ω", "--elements")
        assert code == 0
        assert len(data["report"]["automorphisms"]["elements"]) == 63

    @pytest.mark.parametrize("cubic", ["0,1", "0,1,z", "0,1,1,1"])
    def test_malformed(self, capsys, cubic):
        assert run(capsys, "curve", "--q", "3", "--cubic", cubic)[0] == 2


class TestCentralizer:
    @pytest.mark.parametrize("q,n,poly,orders", [
        ("2", "3", "1,1,0", (7, 7, 1)),
        ("3", "2", "1,0", (8, 4, 2)),
        ("4", "3", "ω,0,0", (63, 21, 3)),
    ])
    def test_examples(self, capsys, q, n, poly, orders):
        code, data = run_json(capsys, "centralizer", "--q", q, "--n", n, "--poly", poly)
        rep = data["report"]
        assert code == 0
        assert (rep["z_gl_order"], rep["pgl_image_order"], rep["pi_image_order"]) == orders

    def test_reducible(self, capsys):
        code, out, err = run(capsys, "centralizer", "--q", "3", "--n", "2", "--poly", "2,0")
        assert code == 2 and "reducible" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fillcurve", "centralizer", "--q", "2",
                           "--n", "2", "--poly", "1,1", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "q,check,status,witness"
