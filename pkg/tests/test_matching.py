import random

from hypothesis import given, settings
from hypothesis import strategies as st

from rdfsurfaces.matching import alpha_equivalent, first_match, match, shape_signature
from rdfsurfaces.terms import Surface, SurfaceKind, iter_surfaces, rename_graffiti, substitute

from support import DocGen, iri, triple

NEG = SurfaceKind.NEGATIVE


def test_universals_bind_consistently():
    pattern = Surface((), NEG, [triple("_:x", "p", "_:y"), triple("_:y", "p", "_:x")])
    target = Surface((), NEG, [triple("a", "p", "b"), triple("b", "p", "a")])
    assert first_match(pattern, target, {"x", "y"}) == {"x": iri("a"), "y": iri("b")}
    bad = Surface((), NEG, [triple("a", "p", "b"), triple("b", "p", "c")])
    assert first_match(pattern, bad, {"x", "y"}) is None
    # without universals the labels are just constants
    assert first_match(pattern, target) is None


def test_all_matches_enumerated():
    pattern = Surface((), NEG, [triple("_:x", "p", "a")])
    t1 = Surface((), NEG, [triple("b", "p", "a")])
    assert list(match(pattern, t1, {"x"})) == [{"x": iri("b")}]
    assert list(match(pattern, t1, {"x"}, {"x": iri("c")})) == []


def test_local_graffiti_match_bijectively():
    a = Surface(["u", "v"], NEG, [triple("_:u", "p", "_:v")])
    b = Surface(["s", "t"], NEG, [triple("_:s", "p", "_:t")])
    c = Surface(["s", "t"], NEG, [triple("_:s", "p", "_:s")])
    assert alpha_equivalent(a, b)
    assert not alpha_equivalent(a, c)
    # a local label never matches a free one
    free = Surface(["s", "t"], NEG, [triple("_:s", "p", "_:w")])
    assert not alpha_equivalent(a, free)


def test_graffiti_levels_are_kept_apart():
    # same shape, but the label is declared one surface further out
    a = Surface(["x"], NEG, [Surface([], NEG, [triple("_:x", "p", "a")])])
    b = Surface([], NEG, [Surface(["x"], NEG, [triple("_:x", "p", "a")])])
    assert not alpha_equivalent(Surface(["y"], NEG, [a]), Surface(["y"], NEG, [b]))


def _rename_all(s: Surface, rng: random.Random) -> Surface:
    kids = [c for c in s.contents if isinstance(c, Surface)]
    facts = [c for c in s.contents if not isinstance(c, Surface)]
    s = Surface(s.graffiti, s.kind, facts + [_rename_all(c, rng) for c in kids])
    mapping = {g: f"r{rng.randrange(10**9)}" for g in s.graffiti}
    if len(set(mapping.values())) < len(mapping):
        return s
    return rename_graffiti(s, mapping)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_renaming_preserves_alpha_equivalence_and_shape(seed):
    doc = DocGen(seed).document()
    rng = random.Random(seed)
    for s in iter_surfaces(doc.root):
        if s is doc.root:
            continue
        renamed = _rename_all(s, rng)
        assert alpha_equivalent(s, renamed)
        assert shape_signature(s) == shape_signature(renamed)


def test_match_is_sound():
    gen = DocGen(3)
    for _ in range(200):
        doc = gen.document()
        for s in doc.root.children:
            labels = sorted(s.graffiti)
            theta = {g: gen.rng.choice(gen.constants) for g in labels}
            body = Surface((), NEG, [substitute(i, theta) for i in s.contents])
            pattern = Surface((), NEG, s.contents)
            found = first_match(pattern, body, set(labels))
            assert found is not None
            assert substitute(pattern, found) == body


def test_collapsing_pattern_still_matches():
    # x := a merges the two facts of the pattern into one
    pattern = Surface((), NEG, [triple("_:x", "p", "a"), triple("a", "p", "a")])
    target = Surface((), NEG, [triple("a", "p", "a")])
    assert first_match(pattern, target, {"x"}) == {"x": iri("a")}
    assert first_match(target, pattern, {"x"}) is None
