"""CLI front end: suite runs, exit codes, report schema, series dumps."""

import json

import pytest

from darboux.cli import dump_series, format_text, main, run_suite


def test_run_suite_document_shape():
    doc = run_suite("klein-invariants", 16)
    assert set(doc) == {"version", "suite", "order", "results", "duration_ms", "status"}
    assert doc["status"] == "pass"
    ids = [r["id"] for r in doc["results"]]
    assert ids == sorted(ids)
    for r in doc["results"]:
        assert {"id", "anchor", "status"} <= set(r)


def test_json_roundtrip():
    doc = run_suite("modular-level5", 12)
    blob = json.dumps(doc, sort_keys=True)
    assert json.loads(blob) == json.loads(json.dumps(json.loads(blob), sort_keys=True))


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope", 16)


def test_order_minimum():
    with pytest.raises(ValueError):
        run_suite("genus0", 4)


def test_exit_codes(capsys):
    assert main(["--spec", "thm-3A-1", "--order", "12"]) == 0
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2
    capsys.readouterr()
    assert main(["--spec", "unknown-spec", "--order", "12"]) == 2
    capsys.readouterr()


def test_list_contains_anchors(capsys):
    assert main(["--list"]) == 0
    out = capsys.readouterr().out
    assert "thm-3A-1" in out
    assert "klein-congruence" in out
    assert "[divisors]" in out


def test_dump_j_leading_terms():
    assert dump_series("j", 3) == "q^-1: 1, q^0: 744, q^1: 196884, q^2: 21493760"


def test_dump_x7_initial_coefficients():
    assert dump_series("x7", 6) == "q^1: -1, q^2: 2, q^4: -5, q^5: 4"


def test_dump_zero_series_is_empty():
    assert dump_series("zero", 10) == ""


def test_dump_spec_side_and_chart_entry():
    assert dump_series("thm-3A-1.right", 3).startswith("x^0: 1")
    assert dump_series("t7:u", 5) == "t^2: 1, t^4: 11"
    with pytest.raises(KeyError):
        dump_series("thm-3A-1.middle", 3)


def test_text_format_alignment():
    doc = run_suite("klein-invariants", 16)
    text = format_text(doc)
    assert "overall: pass" in text
    assert "klein-congruence" in text


def test_failed_spec_nonzero_exit(capsys, monkeypatch):
    import darboux.catalog as cat
    from darboux.verifier import IdentitySpec, Term, Pw
    bad = IdentitySpec("bogus-check", "synthetic failing identity", "x",
                       (Term(1, (Pw("x", 1),)),), (Term(1, (Pw("one_minus_x", 1),)),), 16)
    monkeypatch.setitem(cat.IDENTITY_BY_ID, "bogus-check", bad)
    code = main(["--spec", "bogus-check", "--order", "12"])
    out = capsys.readouterr().out
    assert code == 1
    assert "first mismatch" in out
