import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdfsurfaces.normalize import (
    FreshLabelSource,
    GraffitiShadowingWarning,
    PrefixCollision,
    equivalent_documents,
    existential_closure,
    format_path,
    isomorphic,
    merge_documents,
    normalize,
    resolve_scopes,
    standardize_apart,
)
from rdfsurfaces.parser import parse_document
from rdfsurfaces.terms import BlankNode, Document, Surface, SurfaceKind, blank_labels, free_labels, iter_surfaces

from support import NS, PREFIXES, DocGen, iri, load, triple

NEG = SurfaceKind.NEGATIVE
POS = SurfaceKind.POSITIVE
seeds = st.integers(0, 10**6)


def _declarations(doc: Document) -> list[str]:
    return [g for s in iter_surfaces(doc.root) for g in s.graffiti]


def test_fresh_labels_skip_taken():
    fresh = FreshLabelSource("e", taken={"e1", "e3"})
    assert [fresh.next() for _ in range(3)] == ["e2", "e4", "e5"]
    assert fresh.minted == 3


def test_closure_declares_free_nodes_once():
    doc = parse_document(f"@prefix : <{NS}> . _:a :p _:b . _:b :p _:a .")
    closed = existential_closure(doc)
    assert closed.root.graffiti == ("a", "b")
    assert free_labels(closed.root) == set()


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_closure_is_idempotent(seed):
    doc = DocGen(seed).document()
    once = existential_closure(doc)
    assert existential_closure(once) == once
    assert not free_labels(once.root)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_standardize_apart_declares_each_label_once(seed):
    doc = normalize(DocGen(seed).document())
    labels = _declarations(doc)
    assert len(labels) == len(set(labels))
    assert equivalent_documents(doc, DocGen(seed).document())
    assert normalize(doc) == doc


def test_shadowing_warning_and_binding():
    doc = parse_document(
        f"@prefix : <{NS}> . @prefix log: <http://www.w3.org/2000/10/swap/log#> .\n"
        "(_:x) log:onNegativeSurface { _:x :p :a . (_:x) log:onNegativeSurface { _:x :q :b } . } ."
    )
    with pytest.warns(GraffitiShadowingWarning):
        scoped = resolve_scopes(doc)
    # the inner occurrence binds to the inner declaration
    outer = doc.root.children[0]
    fact_at = outer.contents.index(outer.facts[0])
    assert scoped.binding[((0,), fact_at, 0)] == ((0,), 0)
    assert scoped.binding[((0, 0), 0, 0)] == ((0, 0), 0)
    assert scoped.free == set()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        resolve_scopes(doc, warn=False)
    renamed = standardize_apart(doc)
    inner = renamed.root.children[0].children[0]
    assert inner.graffiti != ("x",)
    assert inner.facts[0].subject == BlankNode(inner.graffiti[0])


def test_format_path():
    assert format_path(()) == "/"
    assert format_path((0, 2)) == "/0/2"


def test_merge_keeps_documents_apart():
    a = Document(PREFIXES, None, Surface((), POS, [triple("_:x", "p", "a")]))
    b = Document(PREFIXES, None, Surface((), POS, [triple("_:x", "q", "b")]))
    merged = merge_documents(a, b)
    subjects = {t.subject for t in merged.root.facts}
    assert len(subjects) == 2
    assert set(merged.root.graffiti) == {t.label for t in subjects}


def test_merge_prefix_collision():
    a = Document((("ex", "http://a/"),))
    b = Document((("ex", "http://b/"),))
    with pytest.raises(PrefixCollision):
        merge_documents(a, b)
    assert merge_documents(a, Document((("ex", "http://a/"), ("y", "http://y/")))).prefix_map == {
        "ex": "http://a/",
        "y": "http://y/",
    }


def test_merge_of_fixtures_is_standardized():
    doc = load("researcher_preferences", "department_preferences", "venue_facts")
    labels = _declarations(doc)
    assert len(labels) == len(set(labels))
    # four rules plus the two negated facts about :GHI
    assert len(doc.root.children) == 6


def test_isomorphic_under_binding():
    s = Surface(["y"], NEG, [triple("_:x", "p", "_:y")])
    t = Surface(["z"], NEG, [triple("a", "p", "_:z")])
    assert isomorphic(s, t, {"x": iri("a")})
    assert not isomorphic(s, t)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_merge_is_label_disjoint(seed):
    a = DocGen(seed).document()
    b = DocGen(seed + 1).document()
    merged = merge_documents(a, b)
    assert len(merged.root.contents) <= len(a.root.contents) + len(b.root.contents)
    na, nb = normalize(a), normalize(b)
    # nothing of b's vocabulary of labels can be captured by a's declarations
    assert len(blank_labels(merged.root)) >= max(len(blank_labels(na.root)), len(blank_labels(nb.root)))
    labels = _declarations(merged)
    assert len(labels) == len(set(labels))


def test_query_graffiti_keep_their_names():
    doc = load("policies", "prescription_query")
    (query,) = [c for c in doc.root.children if c.kind is SurfaceKind.QUERY]
    assert set(query.graffiti) == {"WHO", "WHAT"}
    labels = _declarations(doc)
    assert len(labels) == len(set(labels))
    # a root declaration still wins over a query one
    rooted = Document(PREFIXES, None, Surface(["WHO"], POS, [triple("_:WHO", "p", "a")]))
    merged = merge_documents(rooted, load("prescription_query"))
    (query,) = [c for c in merged.root.children if c.kind is SurfaceKind.QUERY]
    assert "WHO" not in query.graffiti and "WHO" in merged.root.graffiti
