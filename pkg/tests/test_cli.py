import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from simplicial_rv import IntervalSet, PmfPath, StepFn, geodesic
from simplicial_rv.cli import main


def test_verify_clean_suite(capsys):
    assert main(["verify", "--suite", "geodesic", "--seed", "1", "--trials", "30"]) == 0
    out = capsys.readouterr().out
    assert "total violations: 0" in out


def test_verify_catches_corrupted_shrink(monkeypatch, capsys):
    real = geodesic.shrink

    def broken(E, u):
        out = real(E, u)
        # drops a little extra mass whenever the result has a left part
        return out - IntervalSet([(out.inf, out.inf + (out.sup - out.inf) / 7)]) if out else out

    monkeypatch.setattr(geodesic, "shrink", broken)
    assert main(["verify", "--suite", "geodesic", "--seed", "1", "--trials", "50"]) == 1
    out = capsys.readouterr().out
    assert "FAIL geodesic/shrink_measure_law" in out and "first counterexample" in out


def test_reports_are_reproducible(capsys):
    args = ["verify", "--suite", "interval", "--seed", "7", "--trials", "20"]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first
    main(["verify", "--suite", "interval", "--seed", "8", "--trials", "20"])
    assert capsys.readouterr().out != first


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_counterexample_json(capsys):
    assert main(["counterexample", "--n", "10", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"n": 10, "distance_to_f0": "1/5", "support_size": 102,
                    "mass_at_top": "1/10", "violates_U": True}
    assert main(["counterexample", "--n", "1"]) == 2


def _write_lift_inputs(tmp_path, end):
    h0 = StepFn.from_pieces([(0, F(1, 4), "a"), (F(1, 4), F(1, 2), "b"), (F(1, 2), 1, "a")])
    H = PmfPath(["a", "b"], [0, 1], {"a": [F(3, 4), end], "b": [F(1, 4), 1 - end]})
    (tmp_path / "path.json").write_text(json.dumps(H.to_json()))
    (tmp_path / "start.json").write_text(json.dumps(h0.to_json()))


def test_demo_lift(tmp_path, capsys):
    _write_lift_inputs(tmp_path, F(1, 3))
    out = tmp_path / "lift.json"
    code = main(["demo", "lift", "--path", str(tmp_path / "path.json"), "--start", str(tmp_path / "start.json"),
                 "--grid", "20", "--out", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["ok"] and report["start_matches"] and len(report["samples"]) == 21
    assert all(s["law_matches"] for s in report["samples"])


def test_demo_lift_rejects_mismatched_start(tmp_path, capsys):
    _write_lift_inputs(tmp_path, F(1, 3))
    (tmp_path / "start.json").write_text(json.dumps(StepFn.constant("a").to_json()))
    code = main(["demo", "lift", "--path", str(tmp_path / "path.json"), "--start", str(tmp_path / "start.json"),
                 "--out", str(tmp_path / "x.json")])
    assert code == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("kind", ["geodesic", "phi"])
def test_demo_svg(tmp_path, kind, capsys):
    out = tmp_path / f"{kind}.svg"
    assert main(["demo", kind, "--out", str(out), "--samples", "4"]) == 0
    assert out.read_text().startswith("<svg")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "simplicial_rv", "counterexample", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "11" in proc.stdout
