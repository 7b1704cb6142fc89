import json

import pytest

from betacover import (
    IncompleteTableError,
    SpaceSyntaxError,
    parse_set,
    parse_space,
    serialize_set,
    serialize_space,
    serialize_space_csv,
)
from betacover.cli import run_cli
from betacover.serialize import parse_space_csv, parse_space_doc, space_to_doc

from conftest import fuzzy, iv

SPACE_JSON = """{
  "universe": ["x", "y", "z"],
  "parameters": ["e1", "e2"],
  "beta": "[0.5,0.6]",
  "membership": {
    "e1": {"x": "[0.6,0.7]", "y": "[0.4,0.5]", "z": "[0.3,0.6]"},
    "e2": {"x": "[0.4,0.9]", "y": "[0.5,0.6]", "z": "[0.5,0.55]"}
  }
}"""


class TestSpaceDocuments:
    def test_parse_then_serialize_round_trip(self):
        space = parse_space(SPACE_JSON)
        again = parse_space(serialize_space(space))
        assert space_to_doc(again) == space_to_doc(space)

    def test_serialization_is_canonical(self):
        space = parse_space(SPACE_JSON)
        assert serialize_space(space) == serialize_space(parse_space(serialize_space(space)))

    def test_missing_cell_names_parameter_and_object(self):
        doc = json.loads(SPACE_JSON)
        del doc["membership"]["e2"]["z"]
        with pytest.raises(IncompleteTableError) as exc:
            parse_space_doc(doc)
        assert exc.value.parameter == "e2" and exc.value.object == "z"

    def test_bad_interval_literal_is_located(self):
        doc = json.loads(SPACE_JSON)
        doc["membership"]["e1"]["y"] = "[0.7,0.3]"
        with pytest.raises(SpaceSyntaxError) as exc:
            parse_space_doc(doc)
        assert "membership.e1.y" in str(exc.value)

    def test_unknown_keys_rejected(self):
        doc = json.loads(SPACE_JSON)
        doc["extra"] = 1
        with pytest.raises(SpaceSyntaxError):
            parse_space_doc(doc)

    def test_bad_beta_strict_policy(self):
        space = parse_space(SPACE_JSON, policy="strict")
        assert space.beta == iv("[0.5,0.6]")
        doc = json.loads(SPACE_JSON)
        doc["beta"] = "[0.9,0.9]"
        with pytest.raises(Exception) as exc:
            parse_space(json.dumps(doc), policy="strict")
        assert "beta-covering" in str(exc.value)

    def test_repair_policy_through_parse(self):
        doc = json.loads(SPACE_JSON)
        doc["beta"] = "[0.8,0.9]"
        space = parse_space(json.dumps(doc), policy="repair:e1")
        assert space.beta == iv("[0.8,0.9]")


class TestCsv:
    def test_round_trip_with_out_of_band_beta(self):
        space = parse_space(SPACE_JSON)
        text = serialize_space_csv(space)
        again = parse_space(text, fmt="csv", beta="[0.5,0.6]")
        assert space_to_doc(again) == space_to_doc(space)

    def test_csv_requires_beta(self):
        text = serialize_space_csv(parse_space(SPACE_JSON))
        with pytest.raises(SpaceSyntaxError):
            parse_space(text, fmt="csv")

    def test_header_validation(self):
        with pytest.raises(SpaceSyntaxError):
            parse_space_csv("thing,e1\nx,[0,1]\n")
        with pytest.raises(SpaceSyntaxError):
            parse_space_csv("object\nx\n")

    def test_ragged_row_rejected(self):
        with pytest.raises(IncompleteTableError):
            parse_space_csv('object,e1,e2\nx,"[0,1]"\n')


class TestSetDocuments:
    def test_fuzzy_round_trip(self, xyz):
        f = fuzzy(xyz, x="[0.2,0.3]", y="[1/3,0.5]", z="[0,1]")
        assert parse_set(serialize_set(f), xyz) == f

    def test_crisp_round_trip(self, xyz):
        space = parse_space(SPACE_JSON)
        c = parse_set('{"mode":"crisp","members":["z","x"]}', space.universe)
        assert c.sorted_members() == ("x", "z")
        assert parse_set(serialize_set(c), space.universe) == c

    def test_unknown_member_rejected(self, xyz):
        with pytest.raises(SpaceSyntaxError):
            parse_set('{"mode":"crisp","members":["w"]}', xyz)

    def test_unknown_mode_rejected(self, xyz):
        with pytest.raises(SpaceSyntaxError):
            parse_set('{"mode":"rough","members":[]}', xyz)


@pytest.fixture
def space_file(tmp_path):
    path = tmp_path / "space.json"
    path.write_text(SPACE_JSON)
    return str(path)


class TestCli:
    def test_validate_ok(self, space_file, capsys):
        assert run_cli(["validate", space_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        assert doc["schema_version"] == 1 and "version" in doc

    def test_validate_failure_exits_2(self, tmp_path, capsys):
        doc = json.loads(SPACE_JSON)
        doc["beta"] = "[0.9,1]"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        assert run_cli(["validate", str(bad)]) == 2
        out = json.loads(capsys.readouterr().out)
        assert out["ok"] is False
        assert {f["object"] for f in out["failures"]} == {"x", "y", "z"}

    def test_validate_malformed_document_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run_cli(["validate", str(bad)]) == 2
        assert "error" in capsys.readouterr().err

    def test_bad_policy_exits_2(self, space_file, capsys):
        assert run_cli(["validate", "--policy", "mend", space_file]) == 2

    def test_neighborhood_output(self, space_file, capsys):
        assert run_cli(["neighborhood", space_file, "--object", "z", "--matrix"]) == 0
        doc = json.loads(capsys.readouterr().out)
        entry = doc["neighborhoods"][0]
        assert entry["object"] == "z"
        assert entry["empty_index_set"] is True
        assert entry["fuzzy"] == {"x": "[1,1]", "y": "[1,1]", "z": "[1,1]"}
        assert doc["matrix"]["x"]["z"] == "[0.3,0.6]"

    def test_approximate_fuzzy(self, space_file, tmp_path, capsys):
        target = tmp_path / "x.json"
        target.write_text(
            '{"mode":"fuzzy","grades":{"x":"[0.5,0.5]","y":"[0.2,0.3]","z":"[0.6,0.8]"}}'
        )
        code = run_cli(
            ["approximate", space_file, "--kind", "3", "--mode", "fuzzy", "--set", str(target)]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert set(doc) >= {"lower", "upper", "definable", "kind", "mode"}
        assert doc["lower"]["mode"] == "fuzzy"

    def test_approximate_mode_mismatch_exits_2(self, space_file, tmp_path, capsys):
        target = tmp_path / "x.json"
        target.write_text('{"mode":"crisp","members":["x"]}')
        code = run_cli(
            ["approximate", space_file, "--kind", "1", "--mode", "fuzzy", "--set", str(target)]
        )
        assert code == 2

    def test_gen_random_is_byte_identical(self, capsys):
        args = ["gen-random", "--size", "3,3", "--grid", "10", "--seed", "7"]
        assert run_cli(args) == 0
        first = capsys.readouterr().out
        assert run_cli(args) == 0
        assert capsys.readouterr().out == first
        doc = json.loads(first)
        assert doc["schema_version"] == 1

    def test_gen_random_output_is_ingestible(self, capsys, tmp_path):
        assert run_cli(["gen-random", "--seed", "3"]) == 0
        text = capsys.readouterr().out
        path = tmp_path / "gen.json"
        path.write_text(text)
        assert run_cli(["validate", str(path)]) == 0

    def test_audit_all_pass_exit_zero(self, capsys):
        code = run_cli(
            ["audit", "--trials", "10", "--seed", "2", "--size", "3,2",
             "--theorems", "N-REFL,CN-TRANS,A2-P4"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        assert doc["theorems"]["N-REFL"]["failures"] == 0

    def test_audit_law_failure_exit_one(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(
            ["audit", "--trials", "60", "--seed", "1", "--size", "4,3",
             "--theorems", "REL-F1", "--out", str(out)]
        )
        assert code == 1
        doc = json.loads(out.read_text())
        assert doc["ok"] is False and doc["law_failures"] == ["REL-F1"]

    def test_usage_error_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli(["no-such-command"])
        assert exc.value.code == 2
