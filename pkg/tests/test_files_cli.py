import io
import json
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from dissecta import cli, files
from dissecta.errors import ParseError

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"

BUNDLED = sorted(DATA.glob("*.json"))


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def test_bundled_files_exist():
    names = {p.name for p in BUNDLED}
    assert {"sphere.json", "plane.json", "two_lines.json", "two_circles.json",
            "diamond.json", "n5.json", "m3.json", "split_interval.json",
            "two_patches.json"} <= names


@pytest.mark.parametrize("path", BUNDLED, ids=lambda p: p.name)
def test_round_trip_is_byte_identical(path):
    doc = files.read_document(path)
    # parse/validate by type
    if "ground" in doc:
        files.parse_set_model(doc, path)
    elif "attrs" in doc:
        files.parse_arrangement(doc, path)
    else:
        files.parse_poset(doc, path)
    assert files.dumps_canonical(doc).encode() == path.read_bytes()


def test_format_tag_enforced(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": "dissecta/2", "elements": [], "covers": []}')
    with pytest.raises(ParseError):
        files.read_document(bad)


def test_parse_errors(tmp_path):
    f = tmp_path / "x.json"
    f.write_text("{not json")
    with pytest.raises(ParseError):
        files.read_document(f)
    f.write_text('{"covers": []}')
    with pytest.raises(ParseError):
        files.parse_poset(files.read_document(f), f)
    f.write_text('{"elements": [1, 2], "covers": []}')
    with pytest.raises(ParseError):
        files.parse_poset(files.read_document(f), f)
    f.write_text('{"elements": ["a"], "covers": [], "relation": []}')
    with pytest.raises(ParseError):
        files.parse_poset(files.read_document(f), f)


def test_set_model_parse_rejects_malformed_payloads():
    bad_docs = [
        {"ground": [[1], [2]], "subspaces": [], "refinement": [[[1], [2]]],
         "chambers": [[[1], [2]]]},
        {"ground": [{"a": 1}], "subspaces": [], "refinement": [], "chambers": []},
        {"ground": [1, 2], "subspaces": [3], "refinement": [[1, 2]], "chambers": [[1, 2]]},
        {"ground": [1, 2], "subspaces": [[1]], "refinement": [None], "chambers": [[2]]},
        {"ground": [1, 2], "subspaces": [[9]], "refinement": [[1, 2]], "chambers": [[1, 2]]},
        {"ground": [True], "subspaces": [], "refinement": [[True]], "chambers": [[True]]},
    ]
    for doc in bad_docs:
        with pytest.raises(ParseError):
            files.parse_set_model(doc, "case")


def test_element_cap_env(tmp_path, monkeypatch):
    f = tmp_path / "big.json"
    f.write_text(json.dumps({"elements": ["a", "b", "c"], "covers": []}))
    monkeypatch.setenv("DISSECTA_MAX_ELEMENTS", "2")
    with pytest.raises(ParseError):
        files.parse_poset(files.read_document(f), f)
    monkeypatch.setenv("DISSECTA_MAX_ELEMENTS", "3")
    files.parse_poset(files.read_document(f), f)


def golden(name):
    return (GOLDEN / name).read_text()


def test_golden_dissect_sphere():
    code, out = run_cli(["dissect", str(DATA / "sphere.json")])
    assert code == 0
    assert out == golden("dissect_sphere.txt").replace("data/sphere.json",
                                                       str(DATA / "sphere.json"))


def test_golden_dissect_plane():
    code, out = run_cli(["dissect", str(DATA / "plane.json"), "--chamber-chi", "1"])
    assert code == 0
    assert out == golden("dissect_plane.txt").replace("data/plane.json",
                                                      str(DATA / "plane.json"))


def test_golden_check_n5():
    code, out = run_cli(["check", str(DATA / "n5.json")])
    assert code == 0
    assert out == golden("check_n5.txt").replace("data/n5.json", str(DATA / "n5.json"))


def test_json_and_text_agree_on_values():
    code, text = run_cli(["dissect", str(DATA / "plane.json"), "--chamber-chi", "1"])
    code2, js = run_cli(["dissect", str(DATA / "plane.json"), "--chamber-chi", "1",
                         "--format", "json"])
    assert code == code2 == 0
    doc = json.loads(js)
    assert doc["results"]["sum"] == 18 and doc["results"]["count"] == 18
    assert "sum: 18" in text and "count: 18" in text


def test_cli_ji_and_val():
    code, out = run_cli(["ji", str(DATA / "diamond.json"), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["ji"] == ["0", "a", "b"]
    assert doc["results"]["lower_cover"] == {"a": "0", "b": "0"}

    code, out = run_cli(["val", str(DATA / "diamond.json"), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"] == {"free_rank": 3, "torsion": [], "ji_count": 3,
                              "match": True}


def test_cli_val_zaslavsky(tmp_path):
    mfile = tmp_path / "m.json"
    mfile.write_text('["0", "a", "b", "1"]')
    code, out = run_cli(["val", str(DATA / "diamond.json"),
                         "--check-zaslavsky", str(mfile), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["membership"] == {"1": True}


def test_cli_mobius_single_and_table():
    code, out = run_cli(["mobius", str(DATA / "sphere.json"),
                         "--from", "P13", "--to", "S2", "--format", "json"])
    assert code == 0
    assert json.loads(out)["results"]["mobius"] == 1

    code, out = run_cli(["mobius", str(DATA / "diamond.json"), "--format", "json"])
    assert code == 0
    table = json.loads(out)["results"]["mobius"]
    assert table["0 -> 1"] == 1 and table["a -> 1"] == -1


def test_cli_fpoly_and_mpoly():
    code, out = run_cli(["fpoly", str(DATA / "two_lines.json"),
                         "--convention", "literal"])
    assert code == 0
    assert "4*x^2 + 4*x + 1" in out

    code, out = run_cli(["mpoly", str(DATA / "two_lines.json")])
    assert code == 0
    assert "x^2*y^2 - 2*x^2*y - 2*x*y^2 + x^2 + 2*x*y + y^2" in out


def test_cli_faces_with_profile(tmp_path):
    prof = tmp_path / "prof.json"
    prof.write_text('{"chamber_chi_by_dim": {"0": 1, "1": -1, "2": 1}}')
    code, out = run_cli(["faces", str(DATA / "two_lines.json"),
                         "--profile", str(prof), "--format", "json"])
    assert code == 0
    assert json.loads(out)["results"]["faces"] == {"0": 1, "1": 4, "2": 4}


def test_cli_verify():
    code, out = run_cli(["verify", str(DATA / "two_patches.json"), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["equal"] is True
    assert doc["results"]["lhs"] == doc["results"]["rhs"] == 3
    assert doc["results"]["irreducibles_among_generators"] is True


def test_cli_exit_codes(monkeypatch, tmp_path):
    code, _ = run_cli(["dissect", str(tmp_path / "missing.json")])
    assert code == 1

    bad = tmp_path / "bad.json"
    bad.write_text('{"ground": [1, 2], "subspaces": [], '
                   '"refinement": [[1, 2]], "chambers": [[1]]}')
    code, _ = run_cli(["verify", str(bad)])
    assert code == 1

    # identity failure wiring: a model the oracle reports unequal exits 2
    monkeypatch.setattr(
        cli, "set_oracle_check",
        lambda m, weights=None, materialize_limit=12: {
            "lhs": 1, "rhs": 2, "equal": False, "d_size": None, "ji_contained": None})
    code, _ = run_cli(["verify", str(DATA / "two_patches.json")])
    assert code == 2


def test_check_on_non_lattice(tmp_path):
    f = tmp_path / "anti.json"
    f.write_text(json.dumps({"elements": ["x", "y"], "covers": []}))
    code, out = run_cli(["check", str(f), "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["results"] == {"lattice": False}
    assert doc["warnings"]
