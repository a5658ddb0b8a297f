import json

import pytest

from bentcodes.catalog import FamilySpec, preset
from bentcodes.cli import emit_report, run
from bentcodes.galois import DATA_ENV_VAR, poly_table_path


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reproduce_example4_passes(capsys):
    code, out, _ = invoke(capsys, "reproduce", "example4")
    assert code == 0
    assert "PASS  example4 I=zero: enumerated = printed" in out
    assert "FAIL" not in out


def test_weights_enumerated_equals_predicted(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "weights", "--preset", "example1", "--set", "zero", "--mode", "both")
    doc = json.loads(out)
    assert code == 0
    assert doc["diff"] == {"T3i": []}
    assert doc["enumerated"]["weights"] == doc["predicted"]["T3i"]["weights"]
    ws = [w for w, _ in doc["enumerated"]["weights"]]
    assert ws == sorted(ws)


def test_charsum_prop10(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "charsum", "prop10", "--q", "9")
    doc = json.loads(out)
    assert code == 0 and doc["equal"]
    assert [doc["closed_form"][k] for k in ("SS", "SN", "NS", "NN")] == [1, 2, 2, 2]


def test_reports_are_byte_identical(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        assert run(["--format", "json", "--out", str(path), "construct", "--preset", "example4", "--set", "zero"]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_spec_round_trips_through_report(capsys):
    _, out, _ = invoke(capsys, "--format", "json", "construct", "--preset", "table2-row30", "--set", "first:1")
    assert FamilySpec.from_dict(json.loads(out)["spec"]) == preset("table2-row30")


def test_spec_json_input(capsys):
    spec = preset("table2-row1").to_json()
    code, out, _ = invoke(capsys, "--format", "json", "construct", "--spec-json", spec, "--set", "first:1")
    doc = json.loads(out)
    assert code == 0 and (doc["code"]["n"], doc["code"]["k"]) == (14, 7)


def test_mismatch_exit_code(capsys):
    code, out, _ = invoke(capsys, "verify", "--preset", "example4", "--condition", "I")
    assert code == 1
    assert "matches_expected: false" in out


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["reproduce", "example99"], "unknown artifact"),
        (["weights", "--set", "zero"], "--preset"),
        (["bounds", "5", "6", "3", "2"], "K must not exceed N"),
        (["construct", "--preset", "example4", "--set", "coset:b=5"], "b=5"),
        (["--frobnicate"], "--frobnicate"),
    ],
)
def test_usage_errors(capsys, argv, needle):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert needle in out + err


def test_bounds_and_quantum(capsys):
    code, out, _ = invoke(capsys, "--format", "json", "bounds", "14", "10", "3", "8", "--quantum")
    assert code == 0 and json.loads(out)["verdict"] == "hamming_optimal"
    code, out, _ = invoke(capsys, "--format", "json", "quantum", "--preset", "table2-row30", "--set", "first:1")
    assert json.loads(out)["label"] == "[[14, 10, 3]]_8"


def test_lcd_with_best_known_table(tmp_path, capsys):
    best = tmp_path / "best.csv"
    best.write_text("q,n,k,d_best\n9,27,24,3\n")
    code, out, _ = invoke(
        capsys, "--format", "json", "--best-known", str(best), "lcd", "--preset", "table2-row33", "--set", "first:1"
    )
    doc = json.loads(out)
    assert code == 0
    assert (doc["dual"]["n"], doc["dual"]["k"], doc["dual"]["d"]) == (27, 24, 3)
    assert doc["dual"]["bound_verdict"] == "best_known"


def test_emit_report_formats():
    doc = {"b": [[2, 1], [5, 3]], "a": {"y": 1, "x": None}}
    assert emit_report(doc, "json").index('"a"') < emit_report(doc, "json").index('"b"')
    assert emit_report(doc, "text") == "a.x: null\na.y: 1\nb: [[2, 1], [5, 3]]\n"


def test_data_dir_env_var(monkeypatch, tmp_path):
    monkeypatch.setenv(DATA_ENV_VAR, str(tmp_path))
    assert poly_table_path() == tmp_path / "irreducible_polys.txt"
