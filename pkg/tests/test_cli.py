import json

import pytest

from hopfkit.catalog import presentation_text
from hopfkit.cleft import datum_transform, random_transform, twist_datum
from hopfkit.cli import HBXDocument, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def hpf(tmp_path):
    def write(name):
        p = tmp_path / f"{name}.hpf"
        p.write_text(presentation_text(name))
        return str(p)

    return write


@pytest.fixture
def built(tmp_path, hpf, capsys):
    def build(name):
        out = tmp_path / f"{name}.hbx"
        assert main(["build", hpf(name), "-o", str(out)]) == 0
        capsys.readouterr()
        return str(out)

    return build


def test_build_then_verify(built, capsys):
    for name in ("T", "A4pp", "kC4"):
        code, out, _ = run(capsys, "verify", built(name))
        assert code == 0 and json.loads(out)["property_problems"] == []


def test_round_trip_bytes(built):
    text = open(built("A22")).read()
    assert HBXDocument.loads(text).dumps() == text


def test_invariants_json(built, capsys):
    path = built("T")
    code, out, _ = run(capsys, "invariants", path, "--json")
    assert code == 0 and json.loads(out)["antipode_order"] == 4
    _, again, _ = run(capsys, "invariants", path, "--json")
    assert again == out
    assert list(json.loads(out)) == sorted(json.loads(out))


def test_verify_broken(built, tmp_path, capsys):
    doc = json.loads(open(built("T")).read())
    i, j, k, s = doc["mult"][5]
    doc["mult"][5] = [i, j, k, ["2/1", "0/1", "0/1", "0/1"]]
    bad = tmp_path / "broken.hbx"
    bad.write_text(json.dumps(doc))
    code, _, err = run(capsys, "verify", str(bad))
    assert code == 1 and "associativity" in err


def test_usage_errors(tmp_path, capsys):
    assert run(capsys, "verify", str(tmp_path / "missing.hbx"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "catalog", "get", "Zorro")[0] == 2
    bad = tmp_path / "bad.hpf"
    bad.write_text("algebra Q over cyclotomic(8)\ngens g | rels")
    code, _, err = run(capsys, "build", str(bad))
    assert code == 2 and "'|'" in err


def test_field_conflict(built, monkeypatch, capsys):
    path = built("T")
    monkeypatch.setenv("HOPFKIT_FIELD", "16")
    code, _, err = run(capsys, "verify", path)
    assert code == 2 and "HOPFKIT_FIELD" in err


def test_catalog_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "A" in json.loads(out)["entries"]
    path = tmp_path / "A.hbx"
    assert run(capsys, "catalog", "get", "A", "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "coradical", str(path))
    assert code == 0 and json.loads(out)["coradical_type"] == [2, 1]
    code, out, _ = run(capsys, "reps", str(path))
    # characters of A are the group-likes of A4pp, a cyclic group of order 4
    assert code == 0 and len(json.loads(out)["characters"]) == 4


def test_dual_tensor_iso(built, tmp_path, capsys):
    t = built("T")
    d = str(tmp_path / "Td.hbx")
    tt = str(tmp_path / "TT.hbx")
    assert run(capsys, "dual", t, "-o", d)[0] == 0
    assert run(capsys, "tensor", t, t, "-o", tt)[0] == 0
    code, out, _ = run(capsys, "iso", t, d)
    assert code == 0 and json.loads(out)["status"] == "found"
    code, out, _ = run(capsys, "iso", t, built("kC4"))
    assert code == 1 and json.loads(out)["status"] == "refuted"
    code, out, _ = run(capsys, "invariants", tt, "--json")
    assert json.loads(out)["dim"] == 16


def test_cleft_commands(tmp_path, capsys):
    d = datum_transform(twist_datum(), random_transform(5)).datum
    p = tmp_path / "datum.json"
    p.write_text(json.dumps(d.to_json()))
    assert run(capsys, "cleft", "validate", str(p))[0] == 0
    code, out, _ = run(capsys, "cleft", "normalize", str(p))
    assert code == 0 and json.loads(out)["canonical"] == "twist"
    code, out, _ = run(capsys, "cleft", "build", str(p))
    assert code == 0 and json.loads(out)["radical_dim"] == 12
    doc = d.to_json()
    doc["alpha"] = [["0/1"] * 4, ["1/1", "0/1", "0/1", "0/1"], ["0/1"] * 4, ["0/1"] * 4]
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "cleft", "validate", str(p))
    assert code == 1 and not json.loads(out)["ok"]


def test_exactseq_command(tmp_path, capsys):
    for name in ("T", "TT"):
        assert run(capsys, "catalog", "get", name, "-o", str(tmp_path / f"{name}.hbx"))[0] == 0
    one, zero = ["1/1", "0/1", "0/1", "0/1"], ["0/1"] * 4
    iota = [[one if r == 4 * c else zero for c in range(4)] for r in range(16)]
    eps = [1, 1, 0, 0]
    pi = [[one if (j == r and eps[i]) else zero for i in range(4) for j in range(4)] for r in range(4)]
    a, h = str(tmp_path / "T.hbx"), str(tmp_path / "TT.hbx")
    (tmp_path / "iota.json").write_text(json.dumps({"source": a, "target": h, "matrix": iota}))
    (tmp_path / "pi.json").write_text(json.dumps({"source": h, "target": a, "matrix": pi}))
    code, out, _ = run(capsys, "exactseq", a, h, a, "--iota", str(tmp_path / "iota.json"), "--pi", str(tmp_path / "pi.json"))
    assert code == 0 and json.loads(out)["ok"]


def test_suite_unique_a(capsys):
    code, out, _ = run(capsys, "suite", "unique-A")
    assert code == 0 and json.loads(out)["coradical_type"] == [2, 1]
