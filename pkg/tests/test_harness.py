"""Classification reports, suite runners, and the structured results format."""

import json

import pytest

from cppo.arith import is_prime_power
from cppo.atlas import build
from cppo.errors import SchemaError
from cppo.harness import (
    SCHEMA_VERSION,
    ClassificationReport,
    classify,
    full_suite_to_text,
    lemma_suite_to_text,
    load_results,
    persist_results,
    reports_to_text,
    run_full_suite,
    run_lemma_suite,
    run_theorem_suite,
    theorem_suite_to_text,
)

TINY_DOCS = [
    {"atlas": "q8"},
    {"atlas": "dihedral", "params": [12]},
    {"atlas": "alt", "params": [5]},
]


def test_classify_s4():
    r = classify(build("s4").group)
    assert r.name == "sym(4)"
    assert r.order == 24 and r.primes == [2, 3]
    assert r.is_soluble and not r.is_perfect
    assert r.is_eppo is True and r.is_cppo is True
    assert r.derived_order == 12 and r.derived_primes == [2, 3]
    assert r.derived_is_eppo is True
    assert r.radical_order == 24
    assert r.fitting_height == 3 and r.tower_height == 3
    assert [p for p, _ in r.tower_witness] == [2, 3, 2]
    assert r.theorem1 == "pass" and r.theorem2 == "not_applicable"
    assert r.witnesses == {}


def test_classify_commutator_counterexample():
    r = classify(build("dihedral(12)").group)
    assert r.is_cppo is False and r.is_eppo is False
    assert r.witnesses["cppo"]["order"] == 6
    assert not is_prime_power(r.witnesses["eppo"]["order"])
    # verdicts only apply to groups with the commutator property
    assert r.theorem1 == "not_applicable" and r.theorem2 == "not_applicable"
    # the witness entries are strings a reader can replay
    assert "(" in r.witnesses["cppo"]["left"]


def test_classify_a5():
    r = classify(build("alt(5)").group)
    assert not r.is_soluble and r.is_perfect
    assert r.is_eppo is True and r.is_cppo is True
    assert r.fitting_height is None and r.tower_height is None
    assert r.second_derived_equals_derived is True
    assert r.derived_radical_order == 1
    assert r.derived_radical_is_2_group is True
    assert r.derived_radical_closure_order == 1
    assert r.simple_quotient == "PSL2_4"
    assert r.theorem1 == "not_applicable" and r.theorem2 == "pass"


def test_classify_quasisimple_near_miss():
    r = classify(build("sl2_5").group)
    assert r.is_cppo is False
    assert not is_prime_power(r.witnesses["cppo"]["order"])
    assert r.theorem2 == "not_applicable"


def test_low_cap_produces_skip_markers():
    r = classify(build("s4").group, cap=10)
    marker = "skipped: too large (cap=10)"
    assert r.is_eppo == marker and r.is_cppo == marker
    assert r.tower_height == marker
    # the cheap structural facts are still present
    assert r.fitting_height == 3 and r.order == 24
    assert r.theorem1 == "not_applicable"


def test_low_cap_skips_simple_quotient_identification():
    r = classify(build("alt(5)").group, cap=30)
    assert r.simple_quotient == "skipped: too large (cap=30)"
    assert r.theorem2 == "not_applicable"


def test_theorem_suite_on_a_tiny_corpus():
    suite = run_theorem_suite(TINY_DOCS)
    assert suite.ok and suite.skips == []
    assert [r.name for r in suite.reports] == ["q8", "dihedral(12)", "alt(5)"]
    assert [r.theorem1 for r in suite.reports] == ["pass", "not_applicable", "not_applicable"]
    assert [r.theorem2 for r in suite.reports] == ["not_applicable", "not_applicable", "pass"]


def test_strict_mode_promotes_skips():
    relaxed = run_theorem_suite(TINY_DOCS, cap=30)
    assert relaxed.ok and relaxed.skips
    strict = run_theorem_suite(TINY_DOCS, cap=30, strict=True)
    assert not strict.ok
    assert all(f.startswith("strict: ") for f in strict.failures)
    assert len(strict.failures) == len(relaxed.skips)


def test_lemma_suite_runner():
    checks = run_lemma_suite(["cc_iii", "quasisimple_negative"])
    assert {c.lemma_id for c in checks} == {"cc_iii", "quasisimple_negative"}
    assert all(c.status == "pass" for c in checks)
    with pytest.raises(ValueError):
        run_lemma_suite(["no_such_family"])


def test_full_suite_combines_both_halves():
    result = run_full_suite(TINY_DOCS, ids=["cc_iii"])
    assert result.ok
    text = full_suite_to_text(result)
    payload = json.loads(text)
    assert payload["schema_version"] == SCHEMA_VERSION
    assert payload["failures"] == [] and len(payload["lemma_checks"]) >= 3


def test_results_roundtrip(tmp_path):
    suite = run_theorem_suite(TINY_DOCS)
    path = tmp_path / "results.json"
    persist_results(suite.reports, path)
    back = load_results(path)
    assert back == suite.reports


def test_roundtrip_preserves_skip_markers(tmp_path):
    suite = run_theorem_suite(TINY_DOCS, cap=30)
    path = tmp_path / "results.json"
    persist_results(suite.reports, path)
    back = load_results(path)
    assert back == suite.reports
    assert any(
        isinstance(r.is_eppo, str) and r.is_eppo == "skipped: too large (cap=30)"
        for r in back
    )


def test_empty_results_roundtrip(tmp_path):
    path = tmp_path / "empty.json"
    persist_results([], path)
    assert load_results(path) == []


def test_load_results_schema_validation(tmp_path):
    path = tmp_path / "results.json"
    path.write_text("[1, 2]\n")
    with pytest.raises(SchemaError):
        load_results(path)
    path.write_text(json.dumps({"schema_version": 99, "reports": []}))
    with pytest.raises(SchemaError):
        load_results(path)
    path.write_text("{broken")
    with pytest.raises(SchemaError):
        load_results(path)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "reports": [{"name": "x", "order": 1, "primes": [], "is_soluble": True,
                     "is_perfect": False, "mystery_field": 7}],
    }
    path.write_text(json.dumps(doc))
    with pytest.raises(SchemaError):
        load_results(path)


def test_structured_text_is_deterministic():
    a = theorem_suite_to_text(run_theorem_suite(TINY_DOCS))
    b = theorem_suite_to_text(run_theorem_suite(TINY_DOCS))
    assert a == b
    assert a.endswith("\n")
    c = lemma_suite_to_text(run_lemma_suite(["cc_iii"]))
    d = lemma_suite_to_text(run_lemma_suite(["cc_iii"]))
    assert c == d


def test_reports_to_text_key_order_is_fixed():
    text = reports_to_text([classify(build("q8").group)])
    keys = list(json.loads(text)["reports"][0])
    assert keys == [f for f in ClassificationReport.__dataclass_fields__]
