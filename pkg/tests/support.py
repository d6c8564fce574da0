"""Shared helpers: fixture loading and a seeded random document generator."""

from __future__ import annotations

import random
from pathlib import Path

from rdfsurfaces.normalize import merge_documents
from rdfsurfaces.parser import parse_document
from rdfsurfaces.terms import BlankNode, Document, Iri, Surface, SurfaceKind, Triple, iter_surfaces

FIXTURES = Path(__file__).parent / "fixtures"
NS = "https://example.org/ns#"
PREFIXES = (("", NS), ("log", "http://www.w3.org/2000/10/swap/log#"))

NEG = SurfaceKind.NEGATIVE
POS = SurfaceKind.POSITIVE


def text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def load(*names: str) -> Document:
    """Parse fixtures in order and merge them; later files see earlier prefixes."""
    prefixes: dict[str, str] = dict(PREFIXES)
    out = None
    for name in names:
        if "." not in name:
            name += ".n3s"
        doc = parse_document(text(name), prefixes=prefixes)
        prefixes.update(doc.prefix_map)
        out = doc if out is None else merge_documents(out, doc)
    return out


def iri(local: str) -> Iri:
    return Iri(NS + local)


def triple(s, p, o) -> Triple:
    def term(x):
        if isinstance(x, str):
            return BlankNode(x[2:]) if x.startswith("_:") else iri(x)
        return x

    return Triple(term(s), term(p), term(o))


def paths(surface: Surface, prefix=()):
    """Every surface path, root first."""
    yield prefix
    for i, child in enumerate(surface.children):
        yield from paths(child, prefix + (i,))


class DocGen:
    """Tiny random documents.

    ``constants`` and ``predicates`` bound the vocabulary; nested negative
    surfaces declare graffiti drawn from a small label pool, so shadowing and
    reuse of labels across siblings both show up.
    """

    LABELS = ("x", "y", "z")

    def __init__(
        self,
        seed: int,
        constants: int = 3,
        predicates: int = 2,
        max_depth: int = 3,
        root_blanks: bool = True,
    ) -> None:
        self.rng = random.Random(seed)
        self.constants = [iri(c) for c in "abc"[:constants]]
        self.predicates = [iri(p) for p in "pq"[:predicates]]
        self.max_depth = max_depth
        self.root_blanks = root_blanks

    def term(self, scope: list[str]):
        r = self.rng
        if scope and r.random() < 0.55:
            return BlankNode(r.choice(scope))
        return r.choice(self.constants)

    def fact(self, scope: list[str]) -> Triple:
        return Triple(self.term(scope), self.rng.choice(self.predicates), self.term(scope))

    def surface(self, depth: int, scope: list[str]) -> Surface:
        r = self.rng
        graffiti = r.sample(self.LABELS, r.choice((0, 1, 1, 2)))
        inner = sorted(set(scope) | set(graffiti))
        items = [self.fact(inner) for _ in range(r.choice((0, 1, 1, 2)))]
        if depth < self.max_depth:
            for _ in range(r.choice((0, 1, 1, 2))):
                items.append(self.surface(depth + 1, inner))
        if not items and r.random() < 0.8:
            items.append(self.fact(inner))
        return Surface(graffiti, NEG, items)

    def rule(self, facts: list[Triple]) -> Surface:
        """A negative surface whose premise generalizes one of ``facts``."""
        r = self.rng
        seed = r.choice(facts)
        graffiti: list[str] = []
        terms = []
        for t in (seed.subject, seed.object):
            if r.random() < 0.6:
                label = r.choice(self.LABELS)
                if label not in graffiti:
                    graffiti.append(label)
                terms.append(BlankNode(label))
            else:
                terms.append(t)
        items: list = [Triple(terms[0], seed.predicate, terms[1])]
        if r.random() < 0.3:
            items.append(self.fact(graffiti))
        for _ in range(r.choice((1, 1, 2))):
            items.append(self.surface(2, graffiti))
        return Surface(graffiti, NEG, items)

    def document(self) -> Document:
        r = self.rng
        graffiti = ["b"] if self.root_blanks and r.random() < 0.25 else []
        items = [self.fact(graffiti) for _ in range(r.randint(0, 4))]
        facts = list(items)
        for _ in range(r.randint(0, 3)):
            if facts and r.random() < 0.5:
                items.append(self.rule(facts))
            else:
                items.append(self.surface(1, graffiti))
        return Document(PREFIXES, None, Surface(graffiti, POS, items))

    def ground_fact(self) -> Triple:
        return self.fact([])


def depth_ok(doc: Document, limit: int = 3) -> bool:
    return doc.root.depth() - 1 <= limit


def count_surfaces(doc: Document) -> int:
    return sum(1 for _ in iter_surfaces(doc.root))
