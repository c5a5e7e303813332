import json
import os

import pytest

from qdef.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == 0
    names = [e["name"] for e in json.loads(out)]
    assert names == ["suq2", "witten21", "a3pq1", "aq1"]
    code, text, _ = run(capsys, "catalog")
    assert code == 0 and "Witten" in text


def test_spectrum_aq1(capsys):
    code, out, _ = run(capsys, "spectrum", "--algebra", "aq1", "--N", "2", "--delta", "+1", "--q", "0.5", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["j0"] == pytest.approx([2.0, 0.0, -1.0])
    assert all(m > d["boundary"] for m in d["j0"])
    assert d["casimir"] == pytest.approx(2.5)


def test_spectrum_suq2_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--algebra", "suq2", "--N", "2", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert [float(r[-1]) for r in rows] == [1.0, 0.0, -1.0]


def test_spectrum_ladder_fixed_point(capsys):
    code, out, _ = run(capsys, "spectrum", "--algebra", "aq1", "--m0", "-2", "--q", "0.5", "--json")
    assert code == 0
    assert json.loads(out)["classification"] == "fixed-point"


def test_verify_ybe(capsys):
    code, out, err = run(capsys, "verify", "--suite", "ybe", "--N1", "1", "--N2", "1", "--N3", "1")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 8
    assert all(r["pass"] and r["residual"] <= 1e-10 for r in recs)
    assert "8/8" in err


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-N", "1", "--q", "0.7")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert {r["suite"] for r in recs} == {"algebra", "commutation", "casimir", "hopf", "rmatrix", "ybe", "coupling"}
    assert all(r["pass"] for r in recs)


@pytest.mark.parametrize("argv", [
    ["spectrum", "--algebra", "aq1", "--N", "1", "--delta", "1", "--q", "1.5"],
    ["spectrum", "--algebra", "aq1", "--N", "1", "--delta", "2"],
    ["spectrum", "--algebra", "nope", "--N", "1"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_export_rep(capsys):
    code, out, _ = run(capsys, "export", "rep", "--N", "1", "--delta", "+1", "--q", "0.25")
    d = json.loads(out)
    assert code == 0
    assert d["j0"] == pytest.approx([4 / 3, -2 / 3], abs=1e-15)
    assert d["Jplus"] == [[0.0, 1.0], [0.0, 0.0]]
    assert d["casimir"] == pytest.approx(0.84)


def test_export_rmatrix_and_wigner(capsys):
    code, out, _ = run(capsys, "export", "rmatrix", "--N1", "0", "--N2", "0")
    assert code == 0 and json.loads(out)["R"] == [[1.0]]
    code, out, _ = run(capsys, "export", "wigner", "--N1", "1", "--N2", "1")
    assert code == 0 and [b["N"] for b in json.loads(out)["blocks"]] == [2, 0]


def test_export_to_file_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run(capsys, "export", "rmatrix", "--N1", "2", "--N2", "1", "--zeta", "-1", "--q", "0.3",
                   "--out", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_unwritable_output(tmp_path, capsys):
    target = tmp_path / "missing" / "x.json"
    assert run(capsys, "export", "rep", "--N", "1", "--delta", "1", "--out", str(target))[0] == 3


def test_module_entry_point():
    assert os.system("python3 -m qdef catalog > /dev/null") == 0
