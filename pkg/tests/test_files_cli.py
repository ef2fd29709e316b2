import json

import pytest

from bstar import (ComplexFile, ComplexFileError, build, cross_polytope,
                   emit, emit_text, parse, parse_text)
from bstar.cli import main, parse_field
from bstar.linalg import GF2, GF3, QQ


def test_parse_minimal_document(triangle_boundary):
    cf = parse_text('{"facets": [[1, 2], [2, 3], [1, 3]]}')
    assert cf.complex == triangle_boundary
    assert cf.coloring is None and cf.name is None


def test_parse_coloring_violation_names_edge():
    with pytest.raises(ComplexFileError) as err:
        parse_text('{"facets": [[1, 2]], "coloring": {"1": 1, "2": 1}}')
    assert "edge [1, 2]" in str(err.value)


def test_parse_reports_position():
    with pytest.raises(ComplexFileError) as err:
        parse_text('{"facets": [[1, 2],]}', source="bad.json")
    assert str(err.value).startswith("bad.json:1:")


def test_parse_rejects_bad_labels():
    with pytest.raises(ComplexFileError):
        parse_text('{"facets": [[-1, 2]]}')
    with pytest.raises(ComplexFileError):
        parse_text('{"facets": [[1.5]]}')
    with pytest.raises(ComplexFileError):
        parse_text('{"facets": [[true]]}')
    with pytest.raises(ComplexFileError):
        parse_text('{"facets": [[1, 1]]}')
    with pytest.raises(ComplexFileError):
        parse_text('{"facets": [[1]], "coloring": {"9": 1}}')


def test_emit_parse_roundtrip(tmp_path):
    octa, coloring = cross_polytope(3)
    cf = ComplexFile(octa, coloring, name="octahedron",
                     metadata={"note": "fixture"})
    path = tmp_path / "octa.json"
    emit(cf, path)
    back = parse(path)
    assert back.complex == octa
    assert back.coloring.assignment == coloring.assignment
    assert back.name == "octahedron" and back.metadata == {"note": "fixture"}
    # canonical emission is a fixed point
    assert emit_text(back) == emit_text(cf)


def test_integer_coloring_keys_roundtrip(tmp_path):
    c = build([(1, 2), (2, 3)])
    from bstar import Coloring
    coloring = Coloring({1: 1, 2: 2, 3: 1}, 2)
    path = tmp_path / "path.json"
    emit(ComplexFile(c, coloring), path)
    back = parse(path)
    assert back.coloring.assignment == {1: 1, 2: 2, 3: 1}


def test_parse_field_strings():
    assert parse_field("q") is QQ
    assert parse_field("F2") is GF2
    assert parse_field("f3") is GF3
    assert parse_field("7").label == "F7"
    import argparse
    with pytest.raises(argparse.ArgumentTypeError):
        parse_field("f4")


def test_cli_construct_vectors_homology(tmp_path, capsys):
    out = tmp_path / "octa.json"
    assert main(["construct", "cross-polytope", "3", "-o", str(out)]) == 0
    assert main(["vectors", str(out), "--field", "q", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["f"] == [1, 6, 12, 8] and data["h_prime"] == [1, 3, 3, 1]
    assert main(["homology", str(out), "--field", "f2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["betti"] == [0, 0, 0, 1]


def test_cli_check_exit_codes(tmp_path, capsys):
    octa = tmp_path / "octa.json"
    main(["construct", "cross-polytope", "3", "-o", str(octa)])
    bow = tmp_path / "bowtie.json"
    main(["construct", "named", "bowtie2d", "-o", str(bow)])
    capsys.readouterr()
    assert main(["check", "buchsbaum-star", str(octa), "--field", "q"]) == 0
    assert main(["check", "buchsbaum", str(bow), "--field", "q"]) == 1
    assert main(["check", "m-cm", str(octa), "--field", "q", "-m", "2"]) == 0
    assert main(["check", "balanced", str(octa)]) == 0
    assert main(["check", "flag", str(octa)]) == 0
    assert main(["check", "nonsense", str(octa)]) == 2
    capsys.readouterr()


def test_cli_rank_select(tmp_path, capsys):
    octa = tmp_path / "octa.json"
    main(["construct", "cross-polytope", "3", "-o", str(octa)])
    sub = tmp_path / "sub.json"
    assert main(["rank-select", str(octa), "--colors", "1,2",
                 "-o", str(sub)]) == 0
    cf = parse(sub)
    assert cf.complex.dim == 1 and len(cf.complex.faces_of_dim(1)) == 4
    capsys.readouterr()


def test_cli_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"facets": oops')
    assert main(["vectors", str(bad)]) == 2
    void = tmp_path / "void.json"
    void.write_text('{"facets": []}')
    assert main(["vectors", str(void)]) == 2
    assert main(["vectors", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_cli_verify_and_explore(capsys):
    assert main(["verify", "orientability-rp2"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert main(["verify", "no-such-suite"]) == 2
    capsys.readouterr()
    assert main(["explore", "--m", "2", "--i", "1", "--d", "2",
                 "--max-n", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True


def test_cli_cache_dir(tmp_path, capsys, monkeypatch):
    octa = tmp_path / "octa.json"
    main(["construct", "cross-polytope", "3", "-o", str(octa)])
    cache = tmp_path / "cache"
    monkeypatch.setenv("BSTAR_CACHE_DIR", str(cache))
    assert main(["homology", str(octa), "--field", "q"]) == 0
    assert (cache / "betti.json").exists()
    saved = json.loads((cache / "betti.json").read_text())
    assert any(key.startswith("Q|") for key in saved)
    capsys.readouterr()


def test_cli_json_and_text_verdicts_agree(tmp_path, capsys):
    octa = tmp_path / "octa.json"
    main(["construct", "cross-polytope", "3", "-o", str(octa)])
    capsys.readouterr()
    main(["check", "buchsbaum-star", str(octa), "--field", "q", "--json"])
    as_json = json.loads(capsys.readouterr().out)
    main(["check", "buchsbaum-star", str(octa), "--field", "q"])
    as_text = capsys.readouterr().out
    assert as_json["verdict"] is True and "True" in as_text
