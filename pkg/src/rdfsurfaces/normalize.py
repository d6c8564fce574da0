"""Scope resolution, existential closure, label hygiene and document merge."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .matching import alpha_equivalent
from .terms import (
    BlankNode,
    Document,
    Item,
    Path,
    Surface,
    SurfaceKind,
    Term,
    Triple,
    blank_labels,
    free_labels,
    substitute,
)


class GraffitiShadowingWarning(UserWarning):
    """A nested surface re-declares a label already bound further out."""


class PrefixCollision(ValueError):
    pass


class FreshLabelSource:
    """Mints ``<prefix><N>`` labels, skipping anything in ``taken``."""

    def __init__(self, prefix: str = "e", taken=(), counter: int = 0) -> None:
        self.prefix = prefix
        self.counter = counter
        self.taken: set[str] = set(taken)
        self.minted = 0

    def reserve(self, labels) -> None:
        self.taken.update(labels)

    def next(self) -> str:
        while True:
            self.counter += 1
            label = f"{self.prefix}{self.counter}"
            if label not in self.taken:
                self.taken.add(label)
                self.minted += 1
                return label


# an occurrence is (surface path, index into surface.contents, term position)
Occurrence = tuple
Binder = tuple  # (surface path, graffiti index)


@dataclass(frozen=True)
class ScopedDocument:
    doc: Document
    binding: dict = field(default_factory=dict)

    @property
    def free(self) -> set[Occurrence]:
        return {occ for occ, b in self.binding.items() if b is None}


def resolve_scopes(doc: Document, warn: bool = True) -> ScopedDocument:
    """Bind every blank-node occurrence to the closest enclosing declaration."""
    binding: dict[Occurrence, Binder | None] = {}

    def walk(s: Surface, path: Path, env: dict[str, Binder]) -> None:
        env = dict(env)
        for i, g in enumerate(s.graffiti):
            if warn and g in env:
                warnings.warn(
                    f"graffiti _:{g} at {format_path(path)} shadows an outer declaration",
                    GraffitiShadowingWarning,
                    stacklevel=3,
                )
            env[g] = (path, i)
        child = 0
        for ci, item in enumerate(s.contents):
            if isinstance(item, Triple):
                for pos, t in ((0, item.subject), (2, item.object)):
                    if isinstance(t, BlankNode):
                        binding[(path, ci, pos)] = env.get(t.label)
            else:
                walk(item, path + (child,), env)
                child += 1

    walk(doc.root, (), {})
    return ScopedDocument(doc, binding)


def format_path(path: Path) -> str:
    return "/" + "/".join(str(i) for i in path)


def existential_closure(doc: Document) -> Document:
    """Declare every free blank node on the root surface (once per label)."""
    free = free_labels(doc.root)
    if not free:
        return doc
    order: list[str] = []
    _free_in_order(doc.root, frozenset(), order)
    root = doc.root.replace(graffiti=list(doc.root.graffiti) + order)
    return doc.with_root(root)


def _free_in_order(item: Item, bound: frozenset[str], out: list[str]) -> None:
    if isinstance(item, Triple):
        for t in (item.subject, item.object):
            if isinstance(t, BlankNode) and t.label not in bound and t.label not in out:
                out.append(t.label)
        return
    inner = bound | frozenset(item.graffiti)
    for sub in item.contents:
        _free_in_order(sub, inner, out)


def standardize_apart(doc: Document, fresh: FreshLabelSource | None = None) -> Document:
    """Rename binders so no label is declared twice anywhere in the document.

    Root graffiti keep their labels, then graffiti of query surfaces (their
    names show up in answers), then the first other declaration of a label;
    later ones get fresh labels.  Free occurrences (if any) are left
    untouched and their labels reserved.
    """
    fresh = fresh or FreshLabelSource("v")
    fresh.reserve(blank_labels(doc.root))
    declared: set[str] = set(free_labels(doc.root))
    reserved = {
        g for c in doc.root.children if c.kind is SurfaceKind.QUERY for g in c.graffiti
    } - set(doc.root.graffiti) - declared

    def walk(s: Surface, env: dict[str, Term]) -> Surface:
        env = dict(env)
        graffiti = []
        for g in s.graffiti:
            keep = g not in declared and (g not in reserved or s.kind is SurfaceKind.QUERY)
            new = g if keep else fresh.next()
            declared.add(new)
            # identity entries matter too: they shadow outer renamings
            env[g] = BlankNode(new)
            graffiti.append(new)
        contents = []
        for item in s.contents:
            if isinstance(item, Triple):
                contents.append(substitute(item, env))
            else:
                contents.append(walk(item, env))
        return Surface(graffiti, s.kind, contents)

    return doc.with_root(walk(doc.root, {}))


def normalize(doc: Document, fresh: FreshLabelSource | None = None) -> Document:
    """Existential closure followed by standardizing labels apart."""
    return standardize_apart(existential_closure(doc), fresh)


def merge_prefixes(a, b) -> tuple[tuple[str, str], ...]:
    merged = dict(a)
    order = [p for p, _ in a]
    for p, ns in b:
        if p in merged:
            if merged[p] != ns:
                raise PrefixCollision(f"prefix {p!r} bound to <{merged[p]}> and <{ns}>")
            continue
        merged[p] = ns
        order.append(p)
    return tuple((p, merged[p]) for p in order)


def merge_documents(a: Document, b: Document, fresh: FreshLabelSource | None = None) -> Document:
    """Combine two documents on one root without cross-document coreference."""
    fresh = fresh or FreshLabelSource("v")
    prefixes = merge_prefixes(a.prefixes, b.prefixes)
    a = existential_closure(a)
    b = existential_closure(b)
    # root-level labels of b must not meet any label of a
    fresh.reserve(blank_labels(a.root) | blank_labels(b.root))
    clash = set(b.root.graffiti) & blank_labels(a.root)
    if clash:
        b = b.with_root(_rename_root(b.root, {g: fresh.next() for g in sorted(clash)}))
    root = Surface(
        list(a.root.graffiti) + list(b.root.graffiti),
        SurfaceKind.POSITIVE,
        list(a.root.contents) + list(b.root.contents),
    )
    return standardize_apart(Document(prefixes, a.base or b.base, root), fresh)


def _rename_root(root: Surface, mapping: dict[str, str]) -> Surface:
    # root graffiti may be shadowed below, so substitute rather than relabel
    terms = {k: BlankNode(v) for k, v in mapping.items()}
    return Surface([mapping.get(g, g) for g in root.graffiti], root.kind, [substitute(i, terms) for i in root.contents])


def isomorphic(a: Surface, b: Surface, under: dict[str, Term] | None = None) -> bool:
    """Equal after applying ``under`` to free labels of ``a``, up to local relabeling."""
    return alpha_equivalent(substitute(a, dict(under or {})), b)


def equivalent_documents(a: Document, b: Document) -> bool:
    """Structural equality up to a bijective renaming of all blank labels."""
    a = existential_closure(a)
    b = existential_closure(b)
    return alpha_equivalent(_as_negative(a.root), _as_negative(b.root))


def _as_negative(root: Surface) -> Surface:
    # alpha-matching treats a surface's own graffiti as renamable
    return Surface(root.graffiti, SurfaceKind.NEGATIVE, root.contents)
