"""Backtracking matcher for surface items.

Matches a pattern item against a target item.  Blank nodes named in
``universals`` act as variables; graffiti declared inside the items are
matched up to a level-preserving bijection; anything else must be equal.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .terms import BlankNode, Item, Surface, Term, Triple

_levels = itertools.count()


class _Matcher:
    __slots__ = ("universals", "subst", "bij", "rbij", "trail")

    def __init__(self, universals: frozenset[str], subst: dict[str, Term]) -> None:
        self.universals = universals
        self.subst = dict(subst)
        self.bij: dict[tuple, tuple] = {}
        self.rbij: dict[tuple, tuple] = {}
        self.trail: list[tuple] = []

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "s":
                del self.subst[entry[1]]
            else:
                del self.bij[entry[1]]
                del self.rbij[entry[2]]

    def term(self, p: Term, t: Term, pscope: dict, tscope: dict) -> bool:
        if isinstance(p, BlankNode) and p.label in pscope:
            if not (isinstance(t, BlankNode) and t.label in tscope):
                return False
            pk, tk = pscope[p.label], tscope[t.label]
            if pk[0] != tk[0]:
                return False
            if pk in self.bij:
                return self.bij[pk] == tk
            if tk in self.rbij:
                return False
            self.bij[pk] = tk
            self.rbij[tk] = pk
            self.trail.append(("b", pk, tk))
            return True
        if isinstance(t, BlankNode) and t.label in tscope:
            return False
        if isinstance(p, BlankNode) and p.label in self.universals:
            bound = self.subst.get(p.label)
            if bound is not None:
                return bound == t
            self.subst[p.label] = t
            self.trail.append(("s", p.label))
            return True
        return p == t

    def items(self, p: Item, t: Item, pscope: dict, tscope: dict) -> Iterator[None]:
        if isinstance(p, Triple):
            if not isinstance(t, Triple) or p.predicate != t.predicate:
                return
            mark = len(self.trail)
            if self.term(p.subject, t.subject, pscope, tscope) and self.term(
                p.object, t.object, pscope, tscope
            ):
                yield
            self.undo(mark)
            return
        if (
            not isinstance(t, Surface)
            or p.kind is not t.kind
            or len(p.graffiti) != len(t.graffiti)
            or len(p.contents) < len(t.contents)
        ):
            return
        level = next(_levels)
        ps = dict(pscope)
        ps.update((g, (level, g)) for g in p.graffiti)
        ts = dict(tscope)
        ts.update((g, (level, g)) for g in t.graffiti)
        pitems = sorted(p.contents, key=_constraint_order)
        hits = [0] * len(t.contents)
        yield from self._contents(pitems, 0, t.contents, hits, ps, ts)

    def _contents(self, pitems, i, titems, hits, ps, ts) -> Iterator[None]:
        # every pattern item lands on some target item and every target item
        # is hit: equal sets once substituted, even if the pattern collapses
        if i == len(pitems):
            if all(hits):
                yield
            return
        if hits.count(0) > len(pitems) - i:
            return
        p = pitems[i]
        for j, t in enumerate(titems):
            if type(t) is not type(p):
                continue
            hits[j] += 1
            for _ in self.items(p, t, ps, ts):
                yield from self._contents(pitems, i + 1, titems, hits, ps, ts)
            hits[j] -= 1


def _constraint_order(item: Item) -> tuple:
    # facts first: they bind labels cheaply before surfaces are tried
    if isinstance(item, Triple):
        return (0, item.key)
    return (1, len(item.contents), item.key)


def match(
    pattern: Item,
    target: Item,
    universals: frozenset[str] | set[str] = frozenset(),
    subst: dict[str, Term] | None = None,
) -> Iterator[dict[str, Term]]:
    """Yield every extension of ``subst`` under which ``pattern`` matches ``target``."""
    m = _Matcher(frozenset(universals), subst or {})
    for _ in m.items(pattern, target, {}, {}):
        yield dict(m.subst)


def first_match(pattern, target, universals=frozenset(), subst=None) -> dict[str, Term] | None:
    return next(match(pattern, target, universals, subst), None)


def alpha_equivalent(a: Item, b: Item) -> bool:
    if isinstance(a, Triple) or isinstance(b, Triple):
        return a == b
    if a == b:
        return True
    if shape_signature(a) != shape_signature(b):
        return False
    return first_match(a, b) is not None


def shape_signature(item: Item, bound: frozenset[str] = frozenset()) -> str:
    """A rendering of ``item`` that is invariant under renaming local graffiti."""
    if isinstance(item, Triple):
        parts = []
        for t in item.terms():
            if isinstance(t, BlankNode) and t.label in bound:
                parts.append("?")
            else:
                parts.append(str(t))
        return "T(" + " ".join(parts) + ")"
    inner = bound | frozenset(item.graffiti)
    body = ";".join(sorted(shape_signature(i, inner) for i in item.contents))
    return f"S[{item.kind.value}|{len(item.graffiti)}]{{{body}}}"
