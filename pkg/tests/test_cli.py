"""Tests for the command-line interface."""

import json
from pathlib import Path

import pytest

import heavenly.cli as cli
from heavenly.cli import main
from heavenly.verifier import CHECK_IDS, LemmaReport

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def write_doc(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


GOOD_DOC = {"kind": "elliptic", "base_field": "Q", "cubic": [0, -1, 0, 1]}
CAP_DOC = {"kind": "weil_restriction", "base_field": "Q", "D": 3,
           "cubic": ["-1-s", "-1", "0", "1"]}


def test_verify_single_check(capsys):
    assert main(["verify", "--only", "octic"]) == 0
    out = capsys.readouterr().out
    assert "check octic: pass" in out
    assert "pairs_examined = 16384" in out
    assert "1/1 checks passed" in out


def test_verify_unknown_check(capsys):
    assert main(["verify", "--only", "nope"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_verify_full_suite(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert f"{len(CHECK_IDS)}/{len(CHECK_IDS)} checks passed" in out
    for lemma in CHECK_IDS:
        assert f"check {lemma}: pass" in out


def test_verify_json_output(capsys):
    assert main(["verify", "--only", "bounds", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["format"] == "heavenly-verification"
    assert doc["passed"] is True
    assert [r["lemma"] for r in doc["reports"]] == ["bounds"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    broken = LemmaReport("demo", False, 0.0, (("answer", 41),),
                         ("answer: expected 42, got 41",))
    monkeypatch.setattr(cli, "run_all", lambda: [broken])
    assert main(["verify"]) == 1
    out = capsys.readouterr().out
    assert "check demo: FAIL" in out
    assert "FAIL: answer" in out


def test_classify_to_stdout(capsys, tmp_path):
    path = write_doc(tmp_path / "curve.json", GOOD_DOC)
    assert main(["classify", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"]["status"] == "heavenly"
    assert doc["input"] == GOOD_DOC
    assert doc["certificate"]


def test_classify_to_file(tmp_path):
    path = write_doc(tmp_path / "curve.json", GOOD_DOC)
    target = tmp_path / "curve.cert.json"
    assert main(["classify", str(path), "--out", str(target)]) == 0
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["verdict"]["status"] == "heavenly"
    assert not list(tmp_path.glob("*.tmp"))


def test_classify_invalid_document(capsys, tmp_path):
    path = write_doc(tmp_path / "bad.json", {"kind": "elliptic"})
    assert main(["classify", str(path)]) == 2
    assert "missing input fields" in capsys.readouterr().err


def test_classify_unreadable_file(capsys, tmp_path):
    assert main(["classify", str(tmp_path / "absent.json")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_classify_resource_cap_exit(capsys, tmp_path):
    path = write_doc(tmp_path / "cap.json", CAP_DOC)
    target = tmp_path / "cap.cert.json"
    assert main(["classify", str(path), "--out", str(target)]) == 3
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["verdict"]["status"] == "unknown"
    assert "resource cap" in doc["certificate"][-1]["description"]


def test_classify_batch(capsys, tmp_path):
    indir = tmp_path / "in"
    outdir = tmp_path / "out"
    indir.mkdir()
    write_doc(indir / "a.json", GOOD_DOC)
    write_doc(indir / "b.json", {"kind": "elliptic", "base_field": "Q",
                                 "cubic": [-2, 0, 0, 1]})
    assert main(["classify", str(indir), "--dir", str(outdir)]) == 0
    out = capsys.readouterr().out
    assert "a.json: heavenly" in out
    assert "b.json: not_heavenly" in out
    for name, status in (("a.cert.json", "heavenly"),
                         ("b.cert.json", "not_heavenly")):
        doc = json.loads((outdir / name).read_text(encoding="utf-8"))
        assert doc["verdict"]["status"] == status
    assert not list(outdir.glob("*.tmp"))


def test_classify_batch_keeps_going_past_invalid_files(capsys, tmp_path):
    indir = tmp_path / "in"
    outdir = tmp_path / "out"
    indir.mkdir()
    write_doc(indir / "good.json", GOOD_DOC)
    write_doc(indir / "bad.json", {"kind": "elliptic"})
    assert main(["classify", str(indir), "--dir", str(outdir)]) == 2
    assert (outdir / "good.cert.json").exists()
    assert not (outdir / "bad.cert.json").exists()
    assert "bad.json: invalid" in capsys.readouterr().err


def test_classify_batch_rejects_non_directory(capsys, tmp_path):
    path = write_doc(tmp_path / "curve.json", GOOD_DOC)
    assert main(["classify", str(path), "--dir", str(tmp_path / "o")]) == 2
    assert "not a directory" in capsys.readouterr().err


def test_classify_batch_rejects_empty_directory(capsys, tmp_path):
    indir = tmp_path / "empty"
    indir.mkdir()
    assert main(["classify", str(indir), "--dir", str(tmp_path / "o")]) == 2
    assert "no .json files" in capsys.readouterr().err


def test_tool_factor(capsys):
    assert main(["tool", "factor", "x^4-1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["x - 1", "x + 1", "x^2 + 1"]


def test_tool_factor_shows_multiplicity(capsys):
    assert main(["tool", "factor", "x^2 - 2*x + 1"]) == 0
    assert "(multiplicity 2)" in capsys.readouterr().out


def test_tool_splitting_degree(capsys):
    assert main(["tool", "splitting-degree", "x^4-2"]) == 0
    assert capsys.readouterr().out.strip() == "8"


def test_tool_ramification(capsys):
    assert main(["tool", "ramification", "x^2-5"]) == 0
    assert capsys.readouterr().out.strip() == "{5}"
    assert main(["tool", "ramification", "x^2+1"]) == 0
    assert capsys.readouterr().out.strip() == "{}"


def test_tool_rejects_floats(capsys):
    assert main(["tool", "factor", "x^2-0.5"]) == 2
    assert "floating point" in capsys.readouterr().err


def test_tool_axioms_lists_all_records(capsys):
    from heavenly.axioms import all_axioms

    assert main(["tool", "axioms"]) == 0
    out = capsys.readouterr().out
    for record in all_axioms():
        assert record.id in out
        assert record.source in out


def test_corpus_files_classify_with_expected_statuses(tmp_path):
    expected = {
        "elliptic_32a2": "heavenly",
        "elliptic_64a1": "heavenly",
        "elliptic_x3_minus_2": "not_heavenly",
        "jacobian_x5_minus_x": "heavenly",
        "jacobian_x5_plus_x": "heavenly",
        "jacobian_x6_minus_1": "not_heavenly",
        "product_32a2_64a1": "heavenly",
        "weil_sqrt2": "heavenly",
        "weil_sqrt_minus_1": "not_heavenly",
    }
    outdir = tmp_path / "certs"
    assert main(["classify", str(CORPUS), "--dir", str(outdir)]) == 0
    for stem, status in expected.items():
        doc = json.loads((outdir / f"{stem}.cert.json").read_text(
            encoding="utf-8"))
        assert doc["verdict"]["status"] == status, stem
