import io

import pytest

from rdfsurfaces.cli import main

from support import FIXTURES


@pytest.fixture(autouse=True)
def _in_fixtures(monkeypatch):
    monkeypatch.chdir(FIXTURES)
    monkeypatch.delenv("N3S_LIMITS", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_prints_canonical_text(capsys):
    code, out, _ = run(capsys, "parse", "graffiti_rdf.n3s")
    assert code == 0
    assert "log:onNegativeSurface" in out


def _stdin(monkeypatch, text: str) -> None:
    monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(text.encode())))


def test_parse_from_stdin(capsys, monkeypatch):
    _stdin(monkeypatch, open("graffiti_rdf.n3s").read())
    code, out, _ = run(capsys, "parse", "-")
    assert code == 0 and ":JournalA" in out


def test_parse_error_has_a_location(capsys, monkeypatch):
    _stdin(monkeypatch, "@prefix : <https://example.org/ns#> .\n:a :b")
    code, _, err = run(capsys, "parse", "-")
    assert code == 1
    assert "2:" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "parse", "nope.n3s")
    assert code == 1 and "nope.n3s" in err


def test_reason_formats(capsys):
    code, out, _ = run(capsys, "reason", "graffiti_rdf.n3s")
    assert code == 0
    assert ":accredit :JournalA ." in out and "\n_:" in out
    code, out, _ = run(capsys, "reason", "--format", "n3s", "graffiti_rdf.n3s")
    assert code == 0 and ":WOS :indexed :JournalA" in out
    code, out, _ = run(capsys, "reason", "--format", "trace-text", "graffiti_rdf.n3s")
    assert [line.split()[0] for line in out.splitlines()] == ["R4I", "R4D", "R3R"]


def test_verbose_trace_goes_to_stderr_unless_asked(capsys):
    _, out, err = run(capsys, "reason", "-v", "graffiti_rdf.n3s")
    assert "[0] R4I" in err and "[0]" not in out
    _, out, err = run(capsys, "reason", "-v", "--trace-to-stdout", "graffiti_rdf.n3s")
    assert "[0] R4I" in out and "[0]" not in err


def test_inputs_inherit_prefixes(capsys):
    # the later documents lean on prefixes declared by the first
    code, out, _ = run(capsys, "query", "policies.n3s", "fever_policy.n3s", "patient_ann.n3s", "patient_joe.n3s",
                       "prescription_query.n3s")
    assert code == 0
    assert ":Ann :isPrescribed :aspirinHighDose ." in out


def test_reason_fuse_and_limit(capsys):
    code, _, err = run(capsys, "reason", "researcher_preferences.n3s", "department_preferences.n3s",
                       "venue_facts.n3s", "preference_negated_query.n3s")
    assert code == 2 and "inference fuse: empty negative surface at /" in err and "last step: R4D" in err
    code, out, err = run(capsys, "reason", "--limits", "blanks=5", "looping.n3s")
    assert code == 3 and "limit exceeded" in err and out.strip()


def test_limits_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("N3S_LIMITS", "iters=2")
    code, _, err = run(capsys, "reason", "looping.n3s")
    assert code == 3 and "rule applications" in err
    # the flag overrides the environment
    code, _, _ = run(capsys, "reason", "--limits", "iters=10000", "graffiti_rdf.n3s")
    assert code == 0


@pytest.mark.parametrize("bad", ["iters", "iters=0", "speed=3"])
def test_bad_limits(capsys, bad):
    code, _, err = run(capsys, "reason", "--limits", bad, "graffiti_rdf.n3s")
    assert code == 1 and "bad limits" in err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as e:
        main(["reason"])
    assert e.value.code == 1
    with pytest.raises(SystemExit) as e:
        main(["oracle", "-k", "0", "empty.n3s"])
    assert e.value.code == 1
    capsys.readouterr()


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith("n3s ")


def test_query_without_query_surface(capsys):
    code, _, err = run(capsys, "query", "graffiti_rdf.n3s")
    assert code == 4


def test_prove_modes(capsys):
    code, out, _ = run(capsys, "prove", "researcher_preferences.n3s", "department_preferences.n3s",
                       "venue_facts.n3s", "--goal", "preference_goal.n3s")
    assert code == 0
    code, _, _ = run(capsys, "prove", "no_naf.n3s", "--goal", "no_naf_goal.n3s")
    assert code == 5


def test_check_proof(capsys):
    code, out, _ = run(capsys, "check-proof", "graffiti_rdf.n3s", "--script", "accredit_proof.txt")
    assert code == 0 and "valid: 2 steps" in out
    code, _, _ = run(capsys, "check-proof", "graffiti_rdf.n3s", "--script", "missing.txt")
    assert code == 1


def test_oracle_modes(capsys):
    code, out, _ = run(capsys, "oracle", "no_naf.n3s")
    assert code == 0 and out.startswith("Satisfiable")
    code, out, _ = run(capsys, "oracle", "no_naf.n3s", "--goal", "no_naf_goal.n3s")
    assert code == 5 and "counter-model:" in out
    code, out, _ = run(capsys, "oracle", "graffiti_rdf.n3s", "--goal", "accredit_output.n3s")
    assert code == 0 and "Entailed-at-3" in out
    code, _, err = run(capsys, "oracle", "-k", "4", "five_predicates.n3s")
    assert code == 6 and "--force" in err
