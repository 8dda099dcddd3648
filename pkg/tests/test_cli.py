"""Command-line interface: parsing, subcommands, exit codes, determinism."""

import json

import pytest

from conekit import cli
from conekit.cones import SimplicialCone
from conekit.errors import ParseError

CONE_12 = {"generators": [[1, 0], [1, 2]]}
CONE_DET5 = {"generators": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 2, 3, 5]]}


def _write(tmp_path, doc, name="cone.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_load_cone(tmp_path):
    path = _write(tmp_path, CONE_DET5)
    cone = cli.load_cone(path)
    assert cone.generators == (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (1, 2, 3, 5),
    )


def test_load_cone_accepts_string_integers(tmp_path):
    big = 2**70
    doc = {"generators": [[str(big), 0], [0, 1]]}
    cone = cli.load_cone(_write(tmp_path, doc))
    assert cone.generators[0][0] == big
    dumped = cli.dump_cone(cone)
    assert dumped["generators"][0][0] == str(big)
    assert dumped["generators"][1][1] == 1


def test_load_cone_rejects_bad_input(tmp_path):
    with pytest.raises(ParseError):
        cli.load_cone(str(tmp_path / "missing.json"))
    with pytest.raises(ParseError):
        cli.load_cone(_write(tmp_path, {"generators": [[1.5, 0], [0, 1]]}))
    with pytest.raises(ParseError):
        cli.load_cone(_write(tmp_path, {"generators": []}))
    with pytest.raises(ParseError):
        cli.load_cone(_write(tmp_path, [1, 2, 3]))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        cli.load_cone(str(bad))


def test_analyze(tmp_path, capsys):
    path = _write(tmp_path, CONE_DET5)
    assert cli.main(["analyze", path]) == 0
    out = capsys.readouterr().out
    assert "multiplicity: 5" in out
    assert "nontrivial coset classes: 4" in out
    assert "hilbert basis size: 8" in out
    assert "icr upper bound: 4" in out


def test_decompose_command(tmp_path, capsys):
    path = _write(tmp_path, CONE_DET5)
    code = cli.main(["decompose", path, "--point", "2,4,6,8", "--certify-oracle"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["target"] == [2, 4, 6, 8]
    assert doc["terms"] == [[2, [1, 2, 3, 4]]]
    assert doc["term_count"] == 1
    assert doc["all_hilbert"] is True
    assert doc["oracle"]["status"] == "exact"
    assert doc["oracle"]["min_terms"] == 1


def test_decompose_hilbert_only(tmp_path, capsys):
    path = _write(tmp_path, CONE_12)
    code = cli.main(["decompose", path, "--point", "3,2", "--hilbert-only"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_hilbert"] is True
    assert doc["term_count"] == 2


def test_decompose_outside_point_exit_code(tmp_path, capsys):
    path = _write(tmp_path, CONE_12)
    assert cli.main(["decompose", path, "--point", "0,1"]) == 3
    assert "error:" in capsys.readouterr().err


def test_bad_point_exit_code(tmp_path, capsys):
    path = _write(tmp_path, CONE_12)
    assert cli.main(["decompose", path, "--point", "1,x"]) == 2
    capsys.readouterr()


def test_missing_file_exit_code(tmp_path, capsys):
    assert cli.main(["analyze", str(tmp_path / "nope.json")]) == 2
    capsys.readouterr()


def test_cover5_command(tmp_path, capsys):
    path = _write(tmp_path, CONE_DET5)
    assert cli.main(["cover5", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["subcones"]) == 18
    assert doc["census"] == [4, 10, 4]
    assert doc["volume"] == "10/3"
    assert doc["verified"] is True
    assert doc["disjoint_pairs"] == 153


def test_cover5_precondition_exit_code(tmp_path, capsys):
    path = _write(tmp_path, CONE_12)
    assert cli.main(["cover5", path]) == 4
    capsys.readouterr()


def test_experiment_deterministic(tmp_path, capsys):
    args = [
        "experiment",
        "--dims", "2..3",
        "--min-det", "1",
        "--max-det", "3",
        "--count", "2",
        "--seed", "9",
    ]
    out_a = str(tmp_path / "a.csv")
    out_b = str(tmp_path / "b.csv")
    assert cli.main(args + ["--out", out_a]) == 0
    assert cli.main(args + ["--out", out_b]) == 0
    text_a = open(out_a, "rb").read()
    assert text_a == open(out_b, "rb").read()
    lines = text_a.decode().splitlines()
    assert lines[0] == "dim,det,cosets,engine_max,oracle_max,bound,method,seed,elapsed_ms"
    assert len(lines) == 1 + 2 * 3 * 2
    assert all(line.endswith(",0") for line in lines[1:])  # timing off


def test_experiment_bad_dims(capsys):
    assert cli.main(["experiment", "--dims", "3"]) == 2
    capsys.readouterr()


def test_special_skew(capsys):
    assert cli.main(["special", "skew", "--n", "4", "--r", "0,1,2,4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["hypothesis_holds"] is True
    assert doc["nontrivial_classes"] == 3
    assert doc["cross_checks_ok"] is True


def test_special_gorenstein(tmp_path, capsys):
    path = _write(tmp_path, CONE_12)
    assert cli.main(["special", "gorenstein", path]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["premise_holds"] is True
    assert doc["lambda"] == ["1/2", "1/2"]
    assert doc["y"] == ["1", "1"]


def test_special_pq(capsys):
    assert cli.main(["special", "pq", "--p", "2", "--q", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["multiplicity"] == 6
    assert doc["premise_holds"] is True
    assert doc["divisor_count"] == 4
    assert doc["not_skew"] is True


def test_dump_load_round_trip(tmp_path):
    cone = SimplicialCone(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 2, 3, 5)))
    path = _write(tmp_path, cli.dump_cone(cone), "round.json")
    assert cli.load_cone(path) == cone
