import json
from importlib import resources

import jsonschema
import pytest

from graphcurv import cli, parse_edge_list, path, serialize, star


@pytest.fixture(scope="module")
def schema():
    text = resources.files("graphcurv").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    return doc


class TestGen:
    def test_gen_path(self, capsys):
        code, out, _ = run(capsys, "gen", "--input", "path:3")
        assert code == 0
        assert out == "3 2\n0 1\n1 2\n"

    def test_gen_roundtrips(self, capsys):
        code, out, _ = run(capsys, "gen", "--input", "gnp:10,1/3", "--seed", "5")
        assert code == 0
        assert parse_edge_list(out).n == 10


class TestDist:
    def test_json(self, capsys, schema):
        doc = run_json(capsys, schema, "dist", "--input", "path:3", "--format", "json")
        assert doc["distances"] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "dist", "--input", "path:3", "--format", "csv")
        assert code == 0
        assert out == "0,1,2\n1,0,1\n2,1,0\n"

    def test_file_input(self, capsys, tmp_path, schema):
        f = tmp_path / "g.edges"
        f.write_text(serialize(star(4)))
        doc = run_json(capsys, schema, "dist", "--input", str(f))
        assert doc["n"] == 4


class TestCurvature:
    def test_exact_star4(self, capsys, schema):
        doc = run_json(capsys, schema, "curvature", "--input", "star:4")
        assert doc["status"] == "unique"
        assert doc["bound_K"] == "3/4"
        assert doc["nonneg"] is False
        assert doc["w"] == ["-4/3", "4/3", "4/3", "4/3"]

    def test_float_mode(self, capsys, schema):
        doc = run_json(capsys, schema, "curvature", "--input", "path:3", "--float")
        assert doc["mode"] == "float"
        assert abs(doc["w_float"][0] - 1.5) < 1e-12
        assert doc["residual_inf"] < 1e-10

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "curvature", "--input", "path:3", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "vertex,w,w_float"
        assert lines[1] == "0,3/2,1.5"

    def test_underdetermined_warning_surfaces(self, capsys, schema):
        doc = run_json(capsys, schema, "curvature", "--input", "cycle:4")
        assert doc["status"] == "underdetermined"
        assert any("not canonical" in w for w in doc["warnings"])
        assert doc["transitive_oracle_K"] == "1/1"


class TestVerify:
    def test_path3(self, capsys, schema):
        doc = run_json(capsys, schema, "verify", "--input", "path:3", "--samples", "20")
        assert doc["K"] == "1/1"
        assert doc["summary"]["lower_failures"] == 0
        assert doc["summary"]["upper_failures"] == 0

    def test_star4_witness(self, capsys, schema):
        doc = run_json(capsys, schema, "verify", "--input", "star:4", "--samples", "20")
        assert doc["nonneg"] is False
        assert doc["summary"]["lower_failures"] > 0
        assert doc["lower_violation_witness"] is not None

    def test_byte_identical_reruns(self, capsys):
        args = ("verify", "--input", "gnp:8,1/2", "--seed", "7", "--samples", "50")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestGame:
    def test_star4(self, capsys, schema):
        doc = run_json(capsys, schema, "game", "--input", "star:4")
        assert doc["value"] == "1/1"
        assert doc["certificate_residues"] == {"maximin": "0/1", "minimax": "0/1"}
        assert doc["curvature_comparison"]["K"] == "3/4"
        assert doc["curvature_comparison"]["equal"] is False

    def test_underdetermined_has_no_comparison(self, capsys, schema):
        doc = run_json(capsys, schema, "game", "--input", "cycle:4")
        assert doc["value"] == "1/1"
        assert doc["curvature_comparison"] is None


class TestReport:
    def test_path3(self, capsys, schema):
        doc = run_json(capsys, schema, "report", "--input", "path:3")
        assert doc["curvature"]["bound_K"] == "1/1"
        assert doc["curvature"]["nonneg"] is True
        assert doc["verification"]["summary"]["lower_failures"] == 0
        assert doc["game"]["curvature_comparison"]["equal"] is True

    def test_star4(self, capsys, schema):
        doc = run_json(capsys, schema, "report", "--input", "star:4")
        assert doc["curvature"]["nonneg"] is False
        assert doc["verification"]["lower_violation_witness"] is not None
        assert doc["game"]["value"] == "1/1"
        assert doc["game"]["curvature_comparison"]["K"] == "3/4"

    def test_byte_identical_reruns(self, capsys):
        args = ("report", "--input", "gnp:7,2/3", "--seed", "3", "--samples", "25")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_table_format_renders(self, capsys):
        code, out, _ = run(capsys, "report", "--input", "star:4", "--format", "table")
        assert code == 0
        assert "K = 3/4" in out


class TestExitCodes:
    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "dist", "--input", "/nonexistent/g.edges")
        assert code == 2 and "no such file" in err

    def test_bad_spec(self, capsys):
        code, _, _ = run(capsys, "dist", "--input", "blah:3")
        assert code == 2

    def test_disconnected(self, capsys, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("4 2\n0 1\n2 3\n")
        code, _, err = run(capsys, "dist", "--input", str(f))
        assert code == 3 and "disconnected" in err

    def test_inconsistent_system(self, capsys):
        code, _, err = run(capsys, "curvature", "--input", "complete:1")
        assert code == 4 and "no solution" in err

    def test_inconsistent_verify(self, capsys):
        code, _, _ = run(capsys, "verify", "--input", "complete:1")
        assert code == 4
