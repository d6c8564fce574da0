import pytest

from rdfsurfaces.calculus import Limits
from rdfsurfaces.query import (
    NoQuerySurface,
    Verdict,
    answer_query_surfaces,
    answers_turtle,
    goal_surface,
    prove_by_contradiction,
    prove_by_negation,
)
from rdfsurfaces.terms import BlankNode, Surface, SurfaceKind

from support import NS, iri, load, triple

PREFS = ("researcher_preferences", "department_preferences", "venue_facts")


def test_goal_surface_closes_blank_nodes():
    goal = load("accredit_output")
    s = goal_surface(goal)
    assert s.kind is SurfaceKind.NEGATIVE
    assert s.graffiti == ("e1",)


def test_proof_by_contradiction():
    kb = load(*PREFS)
    proved = prove_by_contradiction(kb, load("preference_goal"))
    assert proved.verdict is Verdict.PROVED and proved.verdict.yes
    assert proved.fuse is not None
    not_proved = prove_by_contradiction(load("no_naf"), load("no_naf_goal"))
    assert not_proved.verdict is Verdict.NOT_PROVED


def test_proof_with_existential_goal():
    kb = load("graffiti_rdf")
    assert prove_by_contradiction(kb, load("accredit_output")).verdict is Verdict.PROVED
    other = Surface((), SurfaceKind.POSITIVE, [triple("_:c", "accredit", "WOS")])
    assert prove_by_contradiction(kb, other).verdict is Verdict.NOT_PROVED


def test_proof_by_negation():
    # the goal contradicts the knowledge base, so its negation holds
    kb = load("wos_not_abc")
    goal = Surface((), SurfaceKind.POSITIVE, [triple("WOS", "indexed", "JournalABC")])
    assert prove_by_negation(kb, goal).verdict is Verdict.PROVED
    assert prove_by_negation(kb, load("no_naf_goal")).verdict is Verdict.NOT_PROVED


def test_proof_unknown_on_limit():
    result = prove_by_contradiction(load("looping"), load("no_naf_goal"), Limits(max_fresh=5))
    assert result.verdict is Verdict.UNKNOWN
    assert "fresh" in result.reason


def test_query_bindings_and_text():
    result = answer_query_surfaces(load("policies", "fever_policy", "patient_ann", "patient_joe", "prescription_query"))
    bindings = sorted((a.bindings["WHO"].value, a.bindings["WHAT"].value) for a in result.answers)
    assert bindings == [(NS + "Ann", NS + "aspirinHighDose"), (NS + "Joe", NS + "betaBlocker")]
    out = answers_turtle(result, {"": NS})
    assert ":Ann :isPrescribed :aspirinHighDose ." in out


def test_query_without_fever_policy():
    result = answer_query_surfaces(load("policies", "patient_ann", "patient_joe", "prescription_query"))
    assert result.triples == [triple("Joe", "isPrescribed", "betaBlocker")]


def test_query_errors_and_partial_answers():
    with pytest.raises(NoQuerySurface):
        answer_query_surfaces(load("graffiti_rdf"))
    partial = answer_query_surfaces(load("looping", "accredit_query"), Limits(max_fresh=3))
    assert not partial.complete and partial.reason
    fused = answer_query_surfaces(load(*PREFS, "preference_negated_query", "accredit_query"))
    assert fused.fuse is not None and fused.answers == []


def test_query_answers_are_deduplicated():
    result = answer_query_surfaces(load("graffiti_rdf", "graffiti_rdf_relabeled", "accredit_query"))
    # two rules, two witnesses: the triples differ only by label
    assert all(isinstance(t.subject, BlankNode) for t in result.triples)
    assert {t.object for t in result.triples} == {iri("JournalA")}
