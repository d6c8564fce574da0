import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rdfsurfaces.parser import (
    ErrorKind,
    ParseError,
    expand_iri,
    parse_document,
    parse_items,
    parse_term,
    serialize_document,
    serialize_turtle,
)
from rdfsurfaces.terms import RDF_TYPE, XSD, BlankNode, Iri, Literal, SurfaceKind

from support import NS, DocGen, iri, text, triple

HEAD_MAP = {"": NS, "log": "http://www.w3.org/2000/10/swap/log#"}
HEAD = "@prefix : <https://example.org/ns#> .\n@prefix log: <http://www.w3.org/2000/10/swap/log#> .\n"


def parse(body: str):
    return parse_document(HEAD + body)


def test_turtle_subset():
    doc = parse(':a :p :b , :c ; a :T .\n:a :q "x"@en , 1 , 2.5 , 1e3 , true , "y"^^:dt .')
    facts = set(doc.root.facts)
    assert triple("a", "p", "b") in facts and triple("a", "p", "c") in facts
    assert triple("a", Iri(RDF_TYPE), "T") in facts
    objects = {t.object for t in facts if t.predicate == iri("q")}
    assert Literal("x", language="en") in objects
    assert Literal("1", XSD + "integer") in objects
    assert Literal("2.5", XSD + "decimal") in objects
    assert Literal("1e3", XSD + "double") in objects
    assert Literal("true", XSD + "boolean") in objects
    assert Literal("y", NS + "dt") in objects


def test_surfaces_and_graffiti():
    doc = parse("(_:x) log:onNegativeSurface { _:x :p :a . () log:onNegativeSurface { _:x :q :b } . } .")
    (s,) = doc.root.children
    assert s.kind is SurfaceKind.NEGATIVE and s.graffiti == ("x",)
    assert s.children[0].graffiti == ()
    q = parse("(_:s) log:onQuerySurface { _:s :p :o } .")
    assert q.root.children[0].kind is SurfaceKind.QUERY


def test_anonymous_nodes_do_not_collide():
    doc = parse("_:anon1 :p [ :q :r ] .")
    labels = {t.subject.label for t in doc.root.facts if isinstance(t.subject, BlankNode)}
    assert len(labels) == 2


def test_base_and_relative_iris():
    doc = parse_document("@base <http://x.org/a/> . <b> <p> <../c> .")
    (t,) = doc.root.facts
    assert t.subject == Iri("http://x.org/a/b") and t.object == Iri("http://x.org/c")
    doc = parse_document("PREFIX ex: <http://e/>\nex:a ex:p ex:b .")
    assert doc.prefix_map == {"ex": "http://e/"}


@pytest.mark.parametrize(
    "body, kind",
    [
        (":a :p un:known .", ErrorKind.UNKNOWN_PREFIX),
        ("{ :a :b :c } :says :d .", ErrorKind.GRAPH_TERM_OUTSIDE_SURFACE_OBJECT),
        (":a :p { :b :c :d } .", ErrorKind.UNKNOWN_SURFACE_PREDICATE),
        ("(:a) :p :b .", ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT),
        (":a :p (:b) .", ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT),
        ("(:a) log:onNegativeSurface { } .", ErrorKind.NON_BLANK_NODE_IN_GRAFFITI_LIST),
        ("() :other { :a :b :c } .", ErrorKind.UNKNOWN_SURFACE_PREDICATE),
        ("() log:onNegativeSurface { () log:onQuerySurface { :a :b :c } . } .", ErrorKind.QUERY_NOT_TOP_LEVEL),
        (":a :p :b", ErrorKind.SYNTAX_ERROR),
        ('"lit" :p :b .', ErrorKind.SYNTAX_ERROR),
        ("() log:onNegativeSurface { :a :b :c .", ErrorKind.SYNTAX_ERROR),
    ],
)
def test_error_kinds(body, kind):
    with pytest.raises(ParseError) as err:
        parse(body)
    assert err.value.kind is kind


def test_error_span_points_at_the_token():
    with pytest.raises(ParseError) as err:
        parse_document(":a :b :c .\n:d :e zz:f .", prefixes={"": NS})
    assert (err.value.span.line, err.value.span.column) == (2, 7)
    assert str(err.value).startswith("2:7: UnknownPrefix")


def test_graph_subject_fixture():
    with pytest.raises(ParseError) as err:
        parse_document(text("graph_subject.n3s"))
    assert err.value.kind is ErrorKind.GRAPH_TERM_OUTSIDE_SURFACE_OBJECT


def test_fragments_terms_and_iris():
    items = parse_items(":a :p :b . () log:onNegativeSurface { :a :p :c } .", HEAD_MAP)
    assert len(items) == 2
    with pytest.raises(ParseError):
        parse_items("() log:onQuerySurface { :a :p :c } .", HEAD_MAP)
    assert parse_term("_:x") == BlankNode("x")
    assert parse_term(":a", HEAD_MAP) == iri("a")
    with pytest.raises(ParseError):
        parse_term(":a :b", HEAD_MAP)
    assert expand_iri("log:onNegativeSurface", HEAD_MAP).endswith("#onNegativeSurface")


def test_serialize_turtle_declares_used_prefixes_only():
    out = serialize_turtle([triple("a", "p", "_:e1")], {"": NS, "unused": "http://u/"})
    assert out == "@prefix : <https://example.org/ns#> .\n\n:a :p _:e1 .\n"
    assert serialize_turtle([], {"": NS}) == ""


def test_literal_escapes_round_trip():
    doc = parse(':a :p "line\\nbreak \\"q\\" \\u00e9" .')
    (t,) = doc.root.facts
    assert t.object.lexical == 'line\nbreak "q" é'
    assert parse_document(serialize_document(doc)).root == doc.root


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_round_trip(seed):
    doc = DocGen(seed).document()
    once = parse_document(serialize_document(doc))
    assert once.root.contents == doc.root.contents
    twice = parse_document(serialize_document(once))
    assert serialize_document(twice) == serialize_document(once)
