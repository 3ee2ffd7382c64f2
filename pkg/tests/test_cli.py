import json

import pytest

from transgraph import verify
from transgraph.cli import main
from transgraph.closed_form import Variant


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_transform_classical_dot(tmp_path, fig2_path, capsys):
    out = tmp_path / "total.dot"
    code, _, _ = run(capsys, "transform", "--input", str(fig2_path), "--classical", "+++", "--output", str(out))
    assert code == 0
    text = out.read_text()
    assert text.count(" -- ") == 16
    assert text.count(";\n") - text.count(" -- ") == 9


def test_transform_generalized_edges(fig2_path, capsys):
    code, out, _ = run(
        capsys, "transform", "--input", str(fig2_path),
        "--r", "2", "--s", "1", "--x", "+-", "--y", "-", "--z", "++", "--format", "edges",
    )
    assert code == 0
    from transgraph.graph import parse_edge_list

    g = parse_edge_list(out)
    assert (g.n, g.m) == (14, 28)
    assert "# 7 v2_2" in out
    assert g.degrees[7] == 4


@pytest.mark.parametrize(
    "extra",
    [
        ["--r", "2", "--s", "1", "--x", "+", "--y", "-", "--z", "++"],
        ["--r", "1", "--s", "1", "--x", "+", "--y", "-", "--z", "++"],
        ["--classical", "++"],
        ["--classical", "+*+"],
        ["--classical", "+++", "--r", "1"],
        [],
    ],
)
def test_transform_usage_errors(fig2_path, extra, capsys):
    with pytest.raises(SystemExit) as info:
        main(["transform", "--input", str(fig2_path), *extra])
    assert info.value.code == 2


def test_transform_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("3 1\n1 9\n")
    assert run(capsys, "transform", "--input", str(bad), "--classical", "+++")[0] == 1
    assert run(capsys, "transform", "--input", str(tmp_path / "missing"), "--classical", "+++")[0] == 1


def test_index_text_and_json(fig2_path, tmp_path, capsys):
    code, out, _ = run(capsys, "index", "--input", str(fig2_path))
    assert (code, out.strip()) == (0, "n=5 m=4 M1=16 M2=14 F=38")
    code, out, _ = run(capsys, "index", "--input", str(fig2_path), "--json")
    doc = json.loads(out)
    assert doc["indices"] == {"n": 5, "m": 4, "M1": 16, "M2": 14, "F": 38}
    assert doc["schema_version"] and doc["tool_version"]
    empty = tmp_path / "empty.edges"
    empty.write_text("4 0\n")
    assert run(capsys, "index", "--input", str(empty))[1].strip() == "n=4 m=0 M1=0 M2=0 F=0"


def test_index_parse_failure(tmp_path, capsys):
    bad = tmp_path / "bad.edges"
    bad.write_text("2 1\n1 two\n")
    code, _, err = run(capsys, "index", "--input", str(bad))
    assert code == 1 and "line 2" in err


def test_verify_single_graph(fig2_path, tmp_path, capsys):
    report = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--graph", str(fig2_path), "--r-max", "1", "--s-max", "1", "--report", str(report))
    assert code == 0
    doc = json.loads(report.read_text())
    assert set(doc) == {"schema_version", "tool_version", "inputs", "records", "summary"}
    assert len(doc["records"]) == 2 * 4
    rec = next(r for r in doc["records"] if r["family"] == "plus-incidence" and (r["p"], r["q"]) == (1, 1))
    assert rec["oracle"] == 130 and rec["derived_matches"]


def test_verify_zero_trials(capsys):
    code, out, _ = run(capsys, "verify", "--trials", "0")
    doc = json.loads(out)
    assert code == 0 and doc["records"] == [] and doc["summary"]["trial_count"] == 0


@pytest.mark.parametrize(
    "extra", [["--n-min", "0"], ["--n-min", "5", "--n-max", "4"], ["--r-max", "0"], ["--trials", "-1"], ["--edge-prob", "3/2"]]
)
def test_verify_invalid_ranges(extra, capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", *extra])
    assert info.value.code == 2


def test_verify_derived_mismatch_exit_code(monkeypatch, fig2_path, capsys):
    real = verify.m1_minus_family
    monkeypatch.setattr(verify, "m1_minus_family", lambda inp, variant=Variant.DERIVED: real(inp, variant) + (Variant(variant) is Variant.DERIVED))
    code, _, _ = run(capsys, "verify", "--graph", str(fig2_path), "--r-max", "1", "--s-max", "1")
    assert code == 3


def test_verify_output_is_byte_identical(tmp_path, capsys):
    args = ["verify", "--n-min", "2", "--n-max", "5", "--trials", "3", "--seed", "7", "--r-max", "2", "--s-max", "2"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, *args, "--report", str(a))[0] == 0
    assert run(capsys, *args, "--report", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
