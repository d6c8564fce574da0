"""Immutable terms, triples, surfaces and documents.

A surface's contents are a set: facts and child surfaces are deduplicated on
construction (child surfaces up to renaming of their own graffiti) and kept in
a canonical order so that child indices form stable paths.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD = "http://www.w3.org/2001/XMLSchema#"
LOG = "http://www.w3.org/2000/10/swap/log#"

RDF_TYPE = RDF + "type"
RDF_LANGSTRING = RDF + "langString"
XSD_STRING = XSD + "string"

_WS = re.compile(r"\s")

Path = tuple  # tuple[int, ...], indices into canonical child order


class TermError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not self.value or ":" not in self.value:
            raise TermError(f"not an absolute IRI: {self.value!r}")

    def __str__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self) -> None:
        if not self.label or _WS.search(self.label):
            raise TermError(f"bad blank node label: {self.label!r}")

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: str = XSD_STRING
    language: str | None = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if not self.language:
                raise TermError("empty language tag")
            object.__setattr__(self, "language", self.language.lower())
            object.__setattr__(self, "datatype", RDF_LANGSTRING)
        elif self.datatype == RDF_LANGSTRING:
            raise TermError("rdf:langString literal without a language tag")

    def __str__(self) -> str:
        text = '"' + _escape(self.lexical) + '"'
        if self.language:
            return f"{text}@{self.language}"
        if self.datatype != XSD_STRING:
            return f"{text}^^<{self.datatype}>"
        return text


Term = Union[Iri, BlankNode, Literal]


def _escape(s: str) -> str:
    return (
        s.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.predicate, Iri):
            raise TermError(f"predicate must be an IRI, got {self.predicate}")
        if isinstance(self.subject, Literal):
            raise TermError(f"literal in subject position: {self.subject}")

    def terms(self) -> tuple[Term, Term, Term]:
        return (self.subject, self.predicate, self.object)

    @property
    def key(self) -> str:
        return f"T({self.subject} {self.predicate} {self.object})"

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


class SurfaceKind(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    QUERY = "query"


SURFACE_PREDICATES = {
    LOG + "onNegativeSurface": SurfaceKind.NEGATIVE,
    LOG + "onQuerySurface": SurfaceKind.QUERY,
}
SURFACE_IRIS = {kind: iri for iri, kind in SURFACE_PREDICATES.items()}


class Surface:
    """A Hayes triple: graffiti, a surface kind and a set of items.

    Equality ignores graffiti order and content order.  Items are either
    :class:`Triple` (a fact) or nested :class:`Surface` objects.
    """

    __slots__ = ("graffiti", "kind", "contents", "key", "_hash")

    def __init__(
        self,
        graffiti: Iterable[str] = (),
        kind: SurfaceKind = SurfaceKind.NEGATIVE,
        contents: Iterable["Item"] = (),
    ) -> None:
        graffiti = tuple(graffiti)
        if len(set(graffiti)) != len(graffiti):
            raise TermError(f"duplicate graffiti labels: {graffiti}")
        for label in graffiti:
            BlankNode(label)
        items = _dedup(contents)
        if kind is SurfaceKind.QUERY and any(isinstance(i, Surface) for i in items):
            raise TermError("a query surface cannot contain nested surfaces")
        items.sort(key=item_key)
        object.__setattr__(self, "graffiti", graffiti)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "contents", tuple(items))
        body = ";".join(item_key(i) for i in items)
        key = f"S[{kind.value}|{' '.join(sorted(graffiti))}]{{{body}}}"
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("Surface is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Surface) and self.key == other.key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Surface({list(self.graffiti)!r}, {self.kind.name}, {len(self.contents)} items)"

    @property
    def facts(self) -> tuple[Triple, ...]:
        return tuple(i for i in self.contents if isinstance(i, Triple))

    @property
    def children(self) -> tuple["Surface", ...]:
        return tuple(i for i in self.contents if isinstance(i, Surface))

    def replace(self, graffiti=None, kind=None, contents=None) -> "Surface":
        return Surface(
            self.graffiti if graffiti is None else graffiti,
            self.kind if kind is None else kind,
            self.contents if contents is None else contents,
        )

    def depth(self) -> int:
        kids = self.children
        return 1 + (max(c.depth() for c in kids) if kids else 0)


Item = Union[Triple, Surface]


def item_key(item: Item) -> str:
    return item.key


def _dedup(contents: Iterable[Item]) -> list[Item]:
    # Facts dedup by equality; child surfaces up to renaming of local graffiti.
    # The first occurrence wins.
    from .matching import alpha_equivalent, shape_signature

    out: list[Item] = []
    seen: set[str] = set()
    buckets: dict[str, list[Surface]] = {}
    for item in contents:
        if not isinstance(item, (Triple, Surface)):
            raise TermError(f"not a surface item: {item!r}")
        if item.key in seen:
            continue
        if isinstance(item, Surface):
            sig = shape_signature(item)
            bucket = buckets.setdefault(sig, [])
            if any(alpha_equivalent(item, other) for other in bucket):
                continue
            bucket.append(item)
        seen.add(item.key)
        out.append(item)
    return out


@dataclass(frozen=True)
class Document:
    prefixes: tuple[tuple[str, str], ...] = ()
    base: str | None = None
    root: Surface = field(default_factory=lambda: Surface((), SurfaceKind.POSITIVE, ()))

    def __post_init__(self) -> None:
        if self.root.kind is not SurfaceKind.POSITIVE:
            raise TermError("document root must be a positive surface")
        for child in self.root.children:
            for s in iter_surfaces(child):
                if s.kind is SurfaceKind.POSITIVE:
                    raise TermError("nested surfaces must be negative or query surfaces")

    @property
    def prefix_map(self) -> dict[str, str]:
        return dict(self.prefixes)

    def with_root(self, root: Surface) -> "Document":
        return Document(self.prefixes, self.base, root)


def iter_surfaces(surface: Surface) -> Iterator[Surface]:
    yield surface
    for child in surface.children:
        yield from iter_surfaces(child)


def surface_at(surface: Surface, path: Path) -> Surface:
    for i in path:
        kids = surface.children
        if not 0 <= i < len(kids):
            raise IndexError(f"path {tuple(path)} addresses no surface")
        surface = kids[i]
    return surface


def surfaces_along(surface: Surface, path: Path) -> list[Surface]:
    """The surfaces from ``surface`` down to the one addressed by ``path``."""
    out = [surface]
    for i in path:
        kids = out[-1].children
        if not 0 <= i < len(kids):
            raise IndexError(f"path {tuple(path)} addresses no surface")
        out.append(kids[i])
    return out


def parity(doc: Document | Surface, path: Path) -> int:
    root = doc.root if isinstance(doc, Document) else doc
    chain = surfaces_along(root, tuple(path))
    return sum(1 for s in chain if s.kind is SurfaceKind.NEGATIVE) % 2


def containment(surface: Surface) -> list[Item]:
    """Every item enclosed by ``surface`` (transitively), the surface first.

    Returned as a list: equal facts on different surfaces are distinct
    occurrences.
    """
    out: list[Item] = [surface]
    for item in surface.contents:
        if isinstance(item, Surface):
            out.extend(containment(item))
        else:
            out.append(item)
    return out


def structural_equal(a: Surface, b: Surface) -> bool:
    return a == b


def blank_labels(item: Item) -> set[str]:
    """All blank node labels occurring in ``item``, graffiti included."""
    if isinstance(item, Triple):
        return {t.label for t in item.terms() if isinstance(t, BlankNode)}
    out = set(item.graffiti)
    for sub in item.contents:
        out |= blank_labels(sub)
    return out


def free_labels(item: Item, bound: frozenset[str] = frozenset()) -> set[str]:
    """Labels of blank nodes in ``item`` not bound by graffiti inside it."""
    if isinstance(item, Triple):
        return {
            t.label for t in item.terms() if isinstance(t, BlankNode) and t.label not in bound
        }
    inner = bound | frozenset(item.graffiti)
    out: set[str] = set()
    for sub in item.contents:
        out |= free_labels(sub, inner)
    return out


def substitute(item: Item, subst: dict[str, Term]) -> Item:
    """Replace free occurrences of the labels in ``subst``.

    Graffiti of nested surfaces shadow the substitution below them.
    """
    if not subst:
        return item
    if isinstance(item, Triple):
        def sub(t: Term) -> Term:
            if isinstance(t, BlankNode) and t.label in subst:
                return subst[t.label]
            return t

        return Triple(sub(item.subject), item.predicate, sub(item.object))
    inner = {k: v for k, v in subst.items() if k not in item.graffiti}
    return item.replace(contents=[substitute(i, inner) for i in item.contents])


def instantiate(surface: Surface, subst: dict[str, Term]) -> Surface:
    """Drop the substituted graffiti of ``surface`` and apply ``subst`` inside it."""
    theta = {k: v for k, v in subst.items() if k in surface.graffiti}
    graffiti = [g for g in surface.graffiti if g not in theta]
    inner = Surface(graffiti, surface.kind, [substitute(i, theta) for i in surface.contents])
    return inner


def rename_graffiti(surface: Surface, mapping: dict[str, str]) -> Surface:
    """Alpha-rename graffiti declared directly on ``surface``."""
    theta = {k: BlankNode(v) for k, v in mapping.items() if k in surface.graffiti}
    graffiti = [mapping.get(g, g) for g in surface.graffiti]
    return Surface(graffiti, surface.kind, [substitute(i, theta) for i in surface.contents])
