"""Proof by contradiction, proof by negation and query-surface answering."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .calculus import DerivationTrace, FuseReport, LimitExceeded, Limits, _Work, saturate
from .normalize import FreshLabelSource, existential_closure, merge_documents, normalize
from .parser import serialize_turtle
from .terms import Document, Surface, SurfaceKind, Term, Triple, substitute


class NoQuerySurface(ValueError):
    pass


class Verdict(enum.Enum):
    PROVED = "Proved"
    NOT_PROVED = "NotProved"
    UNKNOWN = "Unknown"

    @property
    def yes(self) -> bool:
        return self is Verdict.PROVED


@dataclass
class ProofResult:
    verdict: Verdict
    trace: DerivationTrace
    reason: str = ""

    @property
    def fuse(self) -> FuseReport | None:
        return self.trace.fuse


@dataclass
class QueryAnswer:
    bindings: dict[str, Term]
    triples: tuple[Triple, ...]


@dataclass
class QueryResult:
    answers: list[QueryAnswer] = field(default_factory=list)
    trace: DerivationTrace | None = None
    complete: bool = True
    reason: str = ""

    @property
    def fuse(self) -> FuseReport | None:
        return self.trace.fuse if self.trace else None

    @property
    def triples(self) -> list[Triple]:
        out: list[Triple] = []
        for a in self.answers:
            for t in a.triples:
                if t not in out:
                    out.append(t)
        return out


def goal_surface(goal: Document | Surface) -> Surface:
    """The goal's root contents wrapped in one negative surface.

    Root graffiti and free blank nodes of the goal become the wrapper's
    graffiti, so they keep their existential reading inside the negation.
    """
    if isinstance(goal, Document):
        goal = existential_closure(goal).root
    return Surface(goal.graffiti, SurfaceKind.NEGATIVE, goal.contents)


def _as_document(goal: Document | Surface, prefixes) -> Document:
    if isinstance(goal, Document):
        return goal
    return Document(tuple(prefixes), None, Surface(goal.graffiti, SurfaceKind.POSITIVE, goal.contents))


def _prove(doc: Document, limits: Limits | None) -> ProofResult:
    try:
        _, trace = saturate(doc, limits)
    except LimitExceeded as e:
        return ProofResult(Verdict.UNKNOWN, e.trace, e.reason)
    return ProofResult(Verdict.PROVED if trace.fuse else Verdict.NOT_PROVED, trace)


def prove_by_contradiction(kb: Document, goal: Document | Surface, limits: Limits | None = None) -> ProofResult:
    """Add the negated goal to ``kb``; a fuse proves the goal."""
    negated = Document(kb.prefixes, None, Surface((), SurfaceKind.POSITIVE, [goal_surface(goal)]))
    return _prove(merge_documents(_without_queries(kb), negated), limits)


def prove_by_negation(kb: Document, goal: Document | Surface, limits: Limits | None = None) -> ProofResult:
    """Add the goal itself; a fuse proves that its negation holds."""
    return _prove(merge_documents(_without_queries(kb), _as_document(goal, kb.prefixes)), limits)


def _without_queries(doc: Document) -> Document:
    return doc.with_root(_strip(doc.root)[0])


def _strip(root: Surface) -> tuple[Surface, list[Surface]]:
    queries = [c for c in root.children if c.kind is SurfaceKind.QUERY]
    if not queries:
        return root, []
    rest = [i for i in root.contents if not (isinstance(i, Surface) and i.kind is SurfaceKind.QUERY)]
    return root.replace(contents=rest), queries


def answer_query_surfaces(kb: Document, limits: Limits | None = None) -> QueryResult:
    """Saturate with query surfaces held aside, then match each against root facts."""
    # match with the query surfaces as written so bindings keep their labels;
    # standardizing apart renames only later declarations, never root ones
    queries = _strip(existential_closure(kb).root)[1]
    if not queries:
        raise NoQuerySurface("the document has no query surface")
    kb = normalize(kb)
    root = _strip(kb.root)[0]
    result = QueryResult()
    try:
        saturated, result.trace = saturate(kb.with_root(root), limits, FreshLabelSource("e"))
    except LimitExceeded as e:
        result.trace, saturated = e.trace, e.document
        result.complete, result.reason = False, e.reason
    if result.trace.fuse is not None:
        return result
    work = _Work(saturated.root)
    seen: set[frozenset] = set()
    for q in queries:
        universals = frozenset(q.graffiti)
        for theta in work.embed_facts(q.facts, universals, {}):
            triples = tuple(substitute(t, theta) for t in q.facts)
            key = frozenset(t.key for t in triples)
            if key in seen:
                continue
            seen.add(key)
            bindings = {g: theta[g] for g in q.graffiti if g in theta}
            result.answers.append(QueryAnswer(bindings, triples))
    return result


def answers_turtle(result: QueryResult, prefixes: dict[str, str]) -> str:
    return serialize_turtle(result.triples, prefixes)
