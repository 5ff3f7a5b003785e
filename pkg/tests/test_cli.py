"""End-to-end runs of the command-line interface through main(argv)."""

import json

import pytest

from cppo.atlas import catalog_names
from cppo.cli import main
from cppo.corpus import write_corpus_file
from cppo.harness import SCHEMA_VERSION

TINY_DOCS = [{"atlas": "q8"}, {"atlas": "s4"}, {"atlas": "alt", "params": [5]}]


@pytest.fixture
def tiny_corpus(tmp_path):
    path = tmp_path / "corpus.json"
    write_corpus_file(path, TINY_DOCS)
    return str(path)


def test_atlas_list(capsys):
    assert main(["atlas", "list"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == catalog_names()


def test_atlas_build(capsys):
    assert main(["atlas", "build", "s4"]) == 0
    out = capsys.readouterr().out
    assert "order: 24" in out and "expected_order: 24" in out


def test_classify_text(capsys):
    assert main(["classify", "atlas:s4"]) == 0
    out = capsys.readouterr().out
    assert "theorem1: pass" in out
    assert "tower_witness:" in out
    assert "fitting_height: 3" in out


def test_classify_structured(capsys):
    assert main(["--format", "structured", "classify", "atlas:q8"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema_version"] == SCHEMA_VERSION
    assert len(payload["reports"]) == 1
    assert payload["reports"][0]["name"] == "q8"


def test_classify_reports_commutator_witnesses(capsys):
    assert main(["classify", "atlas:dihedral(12)"]) == 0
    out = capsys.readouterr().out
    assert "is_cppo: False" in out
    assert "witness[cppo]:" in out


def test_classify_spec_file(tmp_path, capsys):
    spec = tmp_path / "g.json"
    spec.write_text(json.dumps({"atlas": "sl2_3"}))
    assert main(["classify", str(spec)]) == 0
    assert "order: 24" in capsys.readouterr().out


def test_classify_missing_file(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "absent.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_classify_malformed_spec(tmp_path, capsys):
    spec = tmp_path / "g.json"
    spec.write_text("{oops")
    assert main(["classify", str(spec)]) == 2
    assert "error:" in capsys.readouterr().err


def test_classify_unknown_atlas_id(capsys):
    assert main(["classify", "atlas:nope"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_theorems_tiny_corpus(tiny_corpus, capsys):
    assert main(["verify", "theorems", "--corpus", tiny_corpus]) == 0
    out = capsys.readouterr().out
    assert "3 group(s), 0 failure(s), 0 skip(s)" in out


def test_verify_theorems_structured(tiny_corpus, capsys):
    assert main(["--format", "structured", "verify", "theorems", "--corpus", tiny_corpus]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [r["name"] for r in payload["reports"]] == ["q8", "sym(4)", "alt(5)"]
    assert payload["failures"] == []


def test_verify_theorems_strict_cap(tiny_corpus, capsys):
    assert main(["--cap", "30", "verify", "theorems", "--corpus", tiny_corpus]) == 0
    assert "skip:" in capsys.readouterr().out
    assert main(["--cap", "30", "--strict", "verify", "theorems", "--corpus", tiny_corpus]) == 1
    assert "FAIL: strict:" in capsys.readouterr().out


def test_verify_lemmas_subset(capsys):
    assert main(["verify", "lemmas", "--ids", "cc_iii"]) == 0
    out = capsys.readouterr().out
    assert "0 failed, 0 undecided" in out


def test_verify_lemmas_unknown_id(capsys):
    assert main(["verify", "lemmas", "--ids", "made_up"]) == 2
    assert "unknown lemma id" in capsys.readouterr().err


def test_tower_find(capsys):
    assert main(["tower", "find", "atlas:s4"]) == 0
    out = capsys.readouterr().out
    assert "height: 3" in out
    assert out.count("p=") == 3


def test_tower_find_insoluble(capsys):
    assert main(["tower", "find", "atlas:alt(5)"]) == 2
    assert "soluble" in capsys.readouterr().err


def test_commutators_orders_only(capsys):
    assert main(["commutators", "atlas:q8", "--orders-only"]) == 0
    out = capsys.readouterr().out
    assert "order 1: 1 commutator(s)" in out
    assert "order 2: 1 commutator(s)" in out
    assert "2 commutator(s) in a group of order 8" in out


def test_out_flag_redirects_everything(tmp_path, capsys):
    target = tmp_path / "report.txt"
    assert main(["--out", str(target), "classify", "atlas:q8"]) == 0
    assert capsys.readouterr().out == ""
    assert "order: 8" in target.read_text()
