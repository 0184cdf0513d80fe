import io
import json
import shutil

import pytest

from qatlas import cli
from qatlas import cohomology as coh


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out)
    return code, out.getvalue()


def test_enumerate_gopel_json():
    code, text = run("enumerate", "gopel", "--format", "json")
    assert code == 0
    recs = json.loads(text)
    pts = [tuple(r["points"]) for r in recs]
    assert len(pts) == 135
    assert all(len(p) == 7 and list(p) == sorted(p) for p in pts)
    assert pts == sorted(pts)


@pytest.mark.parametrize("kind,n", [("odd", 28), ("even", 36), ("steiner", 63), ("tetrad", 315),
                                    ("azygetic", 336), ("heptad", 288), ("quadric", 135), ("ennead", 960)])
def test_enumerate_sizes(kind, n):
    code, text = run("enumerate", kind, "--format", "json")
    assert code == 0 and len(json.loads(text)) == n


def test_csv_and_table_formats():
    _, csv_text = run("enumerate", "odd", "--format", "csv")
    assert csv_text.splitlines()[0] == "theta" and len(csv_text.splitlines()) == 29
    _, table = run("enumerate", "lines")
    assert table.splitlines()[0].split() == ["point", "n0", "n1", "n2"]


@pytest.mark.slow
def test_verify_stabilizers():
    code, text = run("verify", "--suite", "stabilizers", "--format", "json")
    assert code == 0
    recs = {r["kind"]: r for r in json.loads(text)}
    assert recs["bitangent"]["stabilizer_order"] == 51840
    assert all(r["pass"] for r in recs.values())


def test_audit_exit_codes():
    code, text = run("audit")
    assert code == 1
    assert "poincare:ennead" in text
    assert run("audit", "--allow-known")[0] == 0
    doc = json.loads(run("audit", "--format", "json")[1])
    assert {f["id"] for f in doc["findings"]} == set(coh.KNOWN_FINDINGS)


def test_poincare_and_points():
    code, text = run("poincare", "bitangent", "--format", "json")
    rec = json.loads(text)[0]
    assert code == 0 and rec["poincare"] == "1 + t^5 + 2t^6" and rec["agrees"]
    rec = json.loads(run("points", "bitangent", "--q", "2", "--format", "json")[1])[0]
    assert rec["points"] == "q^6 - q + 2" and rec["value"] == 64
    rec = json.loads(run("poincare", "ennead", "--format", "json")[1])[0]
    assert rec["agrees"] is False


def test_octonion_table_command():
    doc = json.loads(run("octonion-table", "--format", "json")[1])
    assert doc["table"][1][2] == "+e3" and doc["table"][7][1] == "-e6"


def test_usage_errors_exit_2(capsys):
    assert run("frobnicate")[0] == 2
    assert run("enumerate", "gopel", "--nope")[0] == 2
    assert run("poincare", "quintic")[0] == 2
    assert "usage" in capsys.readouterr().err


def test_bad_data_dir_exit_2(tmp_path, capsys):
    shutil.copytree(coh.default_data_dir(), tmp_path / "d")
    p = tmp_path / "d" / "Sp6_level2.json"
    doc = json.loads(p.read_text())
    doc["mult"][0][0] = -2
    p.write_text(json.dumps(doc))
    assert run("poincare", "bitangent", "--data-dir", str(tmp_path / "d"))[0] == 2
    err = capsys.readouterr().err
    assert "Sp6_level2.json" in err and "(H0, phi_1a)" in err


def test_env_var_fallback(tmp_path, monkeypatch):
    monkeypatch.setenv(coh.ENV_DATA_DIR, str(tmp_path / "missing"))
    assert run("poincare", "bitangent")[0] == 2
    monkeypatch.delenv(coh.ENV_DATA_DIR)
    assert run("poincare", "bitangent")[0] == 0


def test_byte_deterministic():
    for argv in (("enumerate", "heptad", "--format", "json"), ("audit", "--format", "csv"),
                 ("verify", "--suite", "cohomology")):
        assert run(*argv) == run(*argv)


def test_every_failing_audit_row_is_marked_known():
    rows = json.loads(run("verify", "--suite", "octonions", "--format", "json")[1])
    assert [r["known"] for r in rows if not r["pass"]] == [True]
    _, text = run("audit", "--format", "csv")
    failing = [line for line in text.splitlines()[1:] if ",false," in line]
    assert failing and all(line.endswith(",true") for line in failing)
