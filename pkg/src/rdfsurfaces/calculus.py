"""Peirce diagram rules R1-R4, forward saturation and proof replay.

Every rule is a pure function ``Document -> Document`` that raises a
:class:`RuleError` subclass when its precondition fails.  ``saturate`` runs a
forward strategy built from R4 (iterate/deiterate) and R3 (double cut) on a
mutable working copy of the root, recording each step so that
``check_proof`` can replay it against the pure rule functions.
"""

from __future__ import annotations

import bisect
import enum
import os
from dataclasses import dataclass, field
from typing import Iterator

from .matching import alpha_equivalent, match, shape_signature
from .normalize import FreshLabelSource, format_path, normalize
from .terms import (
    BlankNode,
    Document,
    Item,
    Iri,
    Path,
    Surface,
    SurfaceKind,
    Term,
    Triple,
    blank_labels,
    free_labels,
    instantiate,
    rename_graffiti,
    substitute,
    surfaces_along,
)

NEG = SurfaceKind.NEGATIVE


class RuleError(Exception):
    """A rule's precondition does not hold."""


class AddressError(RuleError):
    pass


class ParityViolation(RuleError):
    pass


class ItemNotFound(RuleError):
    pass


class NotADoubleCut(RuleError):
    pass


class NoAncestorCopy(RuleError):
    pass


class ContainmentViolation(RuleError):
    pass


class ScopeViolation(RuleError):
    """A substitution or insertion would leave a label unbound or captured."""


class Rule(enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3R = "R3R"
    R3I = "R3I"
    R4I = "R4I"
    R4D = "R4D"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    Rule.R1: "R1-Insert",
    Rule.R2: "R2-Erase",
    Rule.R3R: "R3-RemoveDoubleCut",
    Rule.R3I: "R3-InsertDoubleCut",
    Rule.R4I: "R4-Iterate",
    Rule.R4D: "R4-Deiterate",
}


@dataclass(frozen=True)
class RuleApplication:
    """One rule step.

    ``target`` addresses a surface by child indices from the root.  For R4I
    ``source`` is the surface holding ``item``.  For R3R ``subst`` renames the
    inner graffiti; for R3I ``items`` is the wrapped subset.
    """

    rule: Rule
    target: Path
    item: Item | None = None
    subst: dict = field(default_factory=dict)
    source: Path | None = None
    items: tuple = ()

    def __str__(self) -> str:
        from .proofscript import format_step

        return format_step(self)


@dataclass
class FuseReport:
    path: Path
    subst: dict
    trace_index: int

    def describe(self) -> str:
        text = f"empty negative surface at {format_path(self.path)} after step {self.trace_index}"
        if self.subst:
            text += " {" + ", ".join(f"{k}={v}" for k, v in sorted(self.subst.items())) + "}"
        return text


@dataclass
class DerivationTrace:
    start: Document | None = None
    steps: list[RuleApplication] = field(default_factory=list)
    produced: list[Item] = field(default_factory=list)
    fuse: FuseReport | None = None

    @property
    def derived_facts(self) -> list[Triple]:
        return [i for i in self.produced if isinstance(i, Triple)]


@dataclass(frozen=True)
class Limits:
    max_iterations: int = 10_000
    max_fresh: int = 1_000
    max_depth: int = 32

    def __post_init__(self) -> None:
        for name in ("max_iterations", "max_fresh", "max_depth"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be positive")

    _KEYS = {"iters": "max_iterations", "blanks": "max_fresh", "depth": "max_depth"}

    @classmethod
    def parse(cls, text: str, base: "Limits | None" = None) -> "Limits":
        """Read ``iters=N,blanks=N,depth=N`` (any subset) over ``base``."""
        values = dict(vars(base or cls()))
        for part in filter(None, (p.strip() for p in text.split(","))):
            key, sep, value = part.partition("=")
            key = key.strip()
            if not sep or key not in cls._KEYS:
                raise ValueError(f"bad limit {part!r}; expected iters=, blanks= or depth=")
            try:
                values[cls._KEYS[key]] = int(value)
            except ValueError:
                raise ValueError(f"limit {key} needs an integer, got {value!r}") from None
        return cls(**values)

    @classmethod
    def from_env(cls) -> "Limits":
        text = os.environ.get("N3S_LIMITS", "")
        return cls.parse(text) if text else cls()


class LimitExceeded(Exception):
    def __init__(self, reason: str, trace: DerivationTrace, document: Document | None = None) -> None:
        super().__init__(reason)
        self.reason = reason
        self.trace = trace
        self.document = document


# helpers shared by the rule functions


def _chain(doc: Document, path: Path) -> list[Surface]:
    try:
        chain = surfaces_along(doc.root, tuple(path))
    except IndexError as e:
        raise AddressError(str(e)) from None
    if any(s.kind is SurfaceKind.QUERY for s in chain):
        raise AddressError(f"{format_path(path)} is inside a query surface")
    return chain


def _parity(chain: list[Surface]) -> int:
    return sum(1 for s in chain if s.kind is NEG) % 2


def _scope_labels(chain: list[Surface]) -> set[str]:
    out: set[str] = set()
    for s in chain:
        out.update(s.graffiti)
    return out


def _declared_inside(item: Item) -> set[str]:
    if isinstance(item, Triple):
        return set()
    out = set(item.graffiti)
    for c in item.children:
        out |= _declared_inside(c)
    return out


def _find(surface: Surface, item: Item) -> Item | None:
    if isinstance(item, Triple):
        for c in surface.contents:
            if c == item:
                return c
        return None
    for c in surface.children:
        if alpha_equivalent(item, c):
            return c
    return None


def _rebuild(chain: list[Surface], new: Surface | None) -> Surface:
    """Replace the last surface of ``chain`` by ``new`` (None removes it)."""
    for depth in range(len(chain) - 1, 0, -1):
        old, parent = chain[depth], chain[depth - 1]
        others = [c for c in parent.contents if c is not old]
        new = parent.replace(contents=others if new is None else others + [new])
    if new is None:
        raise AddressError("the root surface cannot be removed")
    return new


def _check_range(subst: dict, in_scope: set[str], captured: set[str]) -> None:
    for k, v in subst.items():
        if isinstance(v, BlankNode):
            if v.label not in in_scope:
                raise ScopeViolation(f"_:{k} -> {v}: label is not bound at this position")
            if v.label in captured:
                raise ScopeViolation(f"_:{k} -> {v}: label would be captured")


# the rules


def apply_r1_insert(doc: Document, target: Path, item: Item) -> Document:
    chain = _chain(doc, target)
    if _parity(chain) != 1:
        raise ParityViolation(f"R1 needs parity 1 at {format_path(target)}")
    unbound = free_labels(item) - _scope_labels(chain)
    if unbound:
        raise ScopeViolation(f"inserted item uses unbound labels {sorted(unbound)}")
    s = chain[-1]
    return doc.with_root(_rebuild(chain, s.replace(contents=list(s.contents) + [item])))


def apply_r2_erase(doc: Document, target: Path, item: Item) -> Document:
    chain = _chain(doc, target)
    if _parity(chain) != 0:
        raise ParityViolation(f"R2 needs parity 0 at {format_path(target)}")
    s = chain[-1]
    found = _find(s, item)
    if found is None:
        raise ItemNotFound(f"item not on {format_path(target)}")
    return doc.with_root(_rebuild(chain, s.replace(contents=[c for c in s.contents if c is not found])))


def remove_double_cut(
    doc: Document, target: Path, rename: dict | None = None, fresh: FreshLabelSource | None = None
) -> tuple[Document, dict[str, Term]]:
    """R3 removal that also reports the renaming applied to inner graffiti."""
    if not target:
        raise NotADoubleCut("the root is not a double cut")
    chain = _chain(doc, target)
    outer, parent = chain[-1], chain[-2]
    if outer.kind is not NEG or len(outer.contents) != 1:
        raise NotADoubleCut(f"{format_path(target)} does not hold exactly one item")
    inner = outer.contents[0]
    if not isinstance(inner, Surface) or inner.kind is not NEG:
        raise NotADoubleCut(f"{format_path(target)} does not enclose a negative surface")
    if set(outer.graffiti) & free_labels(inner):
        raise NotADoubleCut(f"outer graffiti at {format_path(target)} are used inside")
    others = [c for c in parent.contents if c is not outer]
    taken = _scope_labels(chain[:-1])
    for c in others:
        taken |= blank_labels(c)
    rename = {k: (v.label if isinstance(v, BlankNode) else v) for k, v in (rename or {}).items()}
    if set(rename) - set(inner.graffiti):
        raise ScopeViolation("rename touches labels not declared on the inner surface")
    mapping: dict[str, str] = {}
    for g in inner.graffiti:
        new = rename.get(g)
        if new is None:
            new = g
            if g in taken:
                if fresh is None:
                    raise ScopeViolation(f"_:{g} collides with a label in scope; give a rename")
                new = fresh.next()
        elif new in taken or (new != g and new in blank_labels(inner)):
            raise ScopeViolation(f"rename target _:{new} is already in use")
        taken.add(new)
        mapping[g] = new
    spliced = rename_graffiti(inner, mapping)
    new_parent = parent.replace(
        graffiti=list(parent.graffiti) + list(spliced.graffiti),
        contents=others + list(spliced.contents),
    )
    root = _rebuild(chain[:-1], new_parent)
    return doc.with_root(root), {k: BlankNode(v) for k, v in mapping.items()}


def apply_r3_remove_double_cut(
    doc: Document, target: Path, rename: dict | None = None, fresh: FreshLabelSource | None = None
) -> Document:
    return remove_double_cut(doc, target, rename, fresh)[0]


def apply_r3_insert_double_cut(doc: Document, target: Path, items=()) -> Document:
    chain = _chain(doc, target)
    s = chain[-1]
    found = []
    for item in items:
        f = _find(s, item)
        if f is None:
            raise ItemNotFound(f"item not on {format_path(target)}")
        if not any(f is g for g in found):
            found.append(f)
    others = [c for c in s.contents if not any(c is f for f in found)]
    wrapped = Surface((), NEG, [Surface((), NEG, found)])
    return doc.with_root(_rebuild(chain, s.replace(contents=others + [wrapped])))


def apply_r4_iterate(
    doc: Document, source: Path, item: Item, target: Path, subst: dict | None = None
) -> Document:
    """Copy ``item`` from ``source`` into ``target`` (a descendant-or-self).

    A non-empty ``subst`` instantiates graffiti of the copied negative
    surface: a universally read surface yields any of its instances.
    """
    source, target = tuple(source), tuple(target)
    src_chain = _chain(doc, source)
    found = _find(src_chain[-1], item)
    if found is None:
        raise ItemNotFound(f"item not on {format_path(source)}")
    if target[: len(source)] != source:
        raise ContainmentViolation(f"{format_path(target)} is not inside {format_path(source)}")
    tgt_chain = _chain(doc, target)
    if isinstance(found, Surface) and len(target) > len(source):
        if src_chain[-1].children.index(found) == target[len(source)]:
            raise ContainmentViolation("an item cannot be copied into itself")
    between = _scope_labels(tgt_chain[len(src_chain):])
    subst = dict(subst or {})
    if subst:
        if not isinstance(found, Surface) or found.kind is not NEG:
            raise ScopeViolation("instantiation needs a negative surface")
        if set(subst) - set(found.graffiti):
            raise ScopeViolation("substitution domain must be graffiti of the copied surface")
        _check_range(subst, _scope_labels(tgt_chain), _declared_inside(found))
        copy = instantiate(found, subst)
    else:
        copy = found
    if free_labels(copy) & between:
        raise ScopeViolation("a label of the copy would be captured at the target")
    t = tgt_chain[-1]
    return doc.with_root(_rebuild(tgt_chain, t.replace(contents=list(t.contents) + [copy])))


def apply_r4_deiterate(doc: Document, target: Path, item: Item, subst: dict | None = None) -> Document:
    """Erase ``item`` from ``target`` given a copy on an enclosing surface.

    With a non-empty ``subst`` the target surface is first instantiated in
    place (its graffiti in the domain are dropped); this needs parity 1 there.
    """
    chain = _chain(doc, target)
    t = chain[-1]
    subst = dict(subst or {})
    if subst:
        if t.kind is not NEG or _parity(chain) != 1:
            raise ParityViolation("instantiation in place needs a negative surface at parity 1")
        if set(subst) - set(t.graffiti):
            raise ScopeViolation("substitution domain must be graffiti of the target surface")
        _check_range(subst, _scope_labels(chain[:-1]), _declared_inside(t))
        t = instantiate(t, subst)
        item = substitute(item, subst)
    found = _find(t, item)
    if found is None:
        raise ItemNotFound(f"item not on {format_path(target)}")
    labels = free_labels(found)
    ancestors = chain[:-1]
    shadow = set(t.graffiti)
    ok = False
    for j in range(len(ancestors) - 1, -1, -1):
        if labels & shadow:
            break
        if _find(ancestors[j], found) is not None:
            ok = True
            break
        shadow |= set(ancestors[j].graffiti)
    if not ok:
        raise NoAncestorCopy(f"no copy of the item encloses {format_path(target)}")
    new = t.replace(contents=[c for c in t.contents if c is not found])
    return doc.with_root(_rebuild(chain, new))


def apply_step(doc: Document, step: RuleApplication, fresh: FreshLabelSource | None = None) -> Document:
    r = step.rule
    if r is Rule.R1:
        return apply_r1_insert(doc, step.target, _need_item(step))
    if r is Rule.R2:
        return apply_r2_erase(doc, step.target, _need_item(step))
    if r is Rule.R3R:
        return apply_r3_remove_double_cut(doc, step.target, step.subst, fresh)
    if r is Rule.R3I:
        return apply_r3_insert_double_cut(doc, step.target, step.items)
    if r is Rule.R4I:
        source = step.source if step.source is not None else step.target
        return apply_r4_iterate(doc, source, _need_item(step), step.target, step.subst)
    return apply_r4_deiterate(doc, step.target, _need_item(step), step.subst)


def _need_item(step: RuleApplication) -> Item:
    if step.item is None:
        raise ItemNotFound(f"{step.rule.value} needs an item")
    return step.item


def check_proof(doc: Document, steps) -> tuple[bool, int | None]:
    """Replay ``steps``; return (True, None) or (False, index of the first bad step)."""
    for i, step in enumerate(steps):
        try:
            doc = apply_step(doc, step)
        except (RuleError, ValueError):
            return False, i
    return True, None


def replay(doc: Document, steps) -> Document:
    for step in steps:
        doc = apply_step(doc, step)
    return doc


# unification


class _NoMatch:
    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NoMatch"


NoMatch = _NoMatch()


def unify_item(pattern: Item, fact: Item, universals=frozenset(), s0: dict | None = None):
    """Extend ``s0`` so that pattern under it equals ``fact``, or return NoMatch."""
    result = next(match(pattern, fact, frozenset(universals), dict(s0 or {})), None)
    return NoMatch if result is None else result


# saturation


def _unify_triple(p: Triple, t: Triple, universals, theta: dict) -> dict | None:
    out = theta
    for pt, tt in ((p.subject, t.subject), (p.object, t.object)):
        if isinstance(pt, BlankNode) and pt.label in universals:
            bound = out.get(pt.label)
            if bound is None:
                if out is theta:
                    out = dict(theta)
                out[pt.label] = tt
            elif bound != tt:
                return None
        elif pt != tt:
            return None
    return out


class _Work:
    """Mutable mirror of a root surface: facts by predicate, children by key."""

    def __init__(self, root: Surface) -> None:
        self.graffiti = list(root.graffiti)
        self.facts: dict[str, Triple] = {}
        self.by_pred: dict[Iri, list[Triple]] = {}
        self.children: dict[str, Surface] = {}
        self.keys: list[str] = []
        self.by_shape: dict[str, list[str]] = {}
        for item in root.contents:
            if isinstance(item, Triple):
                self.add_fact(item)
            else:
                self.add_child(item)

    def add_fact(self, t: Triple) -> bool:
        k = t.key
        if k in self.facts:
            return False
        self.facts[k] = t
        self.by_pred.setdefault(t.predicate, []).append(t)
        return True

    def find_child(self, s: Surface) -> str | None:
        if s.key in self.children:
            return s.key
        for k in self.by_shape.get(shape_signature(s), ()):
            if alpha_equivalent(s, self.children[k]):
                return k
        return None

    def add_child(self, s: Surface) -> tuple[str, bool]:
        k = self.find_child(s)
        if k is not None:
            return k, False
        self.children[s.key] = s
        bisect.insort(self.keys, s.key)
        self.by_shape.setdefault(shape_signature(s), []).append(s.key)
        return s.key, True

    def remove_child(self, key: str) -> None:
        s = self.children.pop(key)
        del self.keys[bisect.bisect_left(self.keys, key)]
        self.by_shape[shape_signature(s)].remove(key)

    def path(self, key: str) -> Path:
        return (bisect.bisect_left(self.keys, key),)

    def negatives(self) -> list[Surface]:
        return [self.children[k] for k in self.keys if self.children[k].kind is NEG]

    def surface(self) -> Surface:
        return Surface(
            self.graffiti,
            SurfaceKind.POSITIVE,
            list(self.facts.values()) + [self.children[k] for k in self.keys],
        )

    # pattern search against root items

    def embed_facts(self, patterns, universals, theta: dict) -> Iterator[dict]:
        pats = sorted(patterns, key=lambda p: (len(self.by_pred.get(p.predicate, ())), p.key))
        yield from self._embed(pats, 0, universals, theta)

    def _embed(self, pats, i, universals, theta) -> Iterator[dict]:
        if i == len(pats):
            yield theta
            return
        p = pats[i]
        for t in self.by_pred.get(p.predicate, ()):
            ext = _unify_triple(p, t, universals, theta)
            if ext is not None:
                yield from self._embed(pats, i + 1, universals, ext)

    def match_negative(self, pattern: Surface, universals, theta: dict) -> list[dict]:
        out: list[dict] = []
        for r in self.negatives():
            if len(r.graffiti) != len(pattern.graffiti) or len(r.contents) > len(pattern.contents):
                continue
            for ext in match(pattern, r, universals, theta):
                if ext not in out:
                    out.append(ext)
        return out

    def satisfied(self, items, universals, theta: dict) -> bool:
        facts = [i for i in items if isinstance(i, Triple)]
        surfaces = [i for i in items if isinstance(i, Surface)]
        for th in self.embed_facts(facts, universals, theta):
            if self._surfaces_hold(surfaces, 0, universals, th):
                return True
        return False

    def _surfaces_hold(self, surfaces, i, universals, theta) -> bool:
        if i == len(surfaces):
            return True
        for ext in self.match_negative(surfaces[i], universals, theta):
            if self._surfaces_hold(surfaces, i + 1, universals, ext):
                return True
        return False


@dataclass
class _Firing:
    theta: dict
    premises: list[Item]
    residual: list[Surface]


def _firings(s: Surface, work: _Work) -> Iterator[_Firing]:
    universals = frozenset(s.graffiti)
    negs = list(s.children)
    for theta in work.embed_facts(s.facts, universals, {}):
        yield from _branches(s, negs, 0, theta, list(s.facts), [], work, universals)


def _branches(s, negs, i, theta, premises, residual, work, universals) -> Iterator[_Firing]:
    if i == len(negs):
        if len(residual) > 1 and not premises:
            return
        yield _Firing(theta, premises, residual)
        return
    n = negs[i]
    exts = work.match_negative(n, universals, theta)
    if any(e == theta for e in exts):
        # matching without new bindings dominates leaving it residual
        yield from _branches(s, negs, i + 1, theta, premises + [n], residual, work, universals)
        return
    for ext in exts:
        yield from _branches(s, negs, i + 1, ext, premises + [n], residual, work, universals)
    yield from _branches(s, negs, i + 1, theta, premises, residual + [n], work, universals)


def _theta_key(theta: dict) -> tuple:
    return tuple(sorted((k, str(v)) for k, v in theta.items()))


class _Saturator:
    def __init__(self, doc: Document, limits: Limits, fresh: FreshLabelSource) -> None:
        self.doc = doc
        self.limits = limits
        self.fresh = fresh
        self.work = _Work(doc.root)
        self.trace = DerivationTrace(start=doc)
        self.fired: set = set()
        self.minted_at_start = fresh.minted

    def document(self) -> Document:
        return self.doc.with_root(self.work.surface())

    def step(self, app: RuleApplication) -> None:
        self.trace.steps.append(app)
        if len(self.trace.steps) > self.limits.max_iterations:
            raise LimitExceeded(
                f"more than {self.limits.max_iterations} rule applications", self.trace, self.document()
            )

    def mint(self) -> str:
        if self.fresh.minted - self.minted_at_start >= self.limits.max_fresh:
            raise LimitExceeded(f"more than {self.limits.max_fresh} fresh blank nodes", self.trace, self.document())
        return self.fresh.next()

    def run(self) -> DerivationTrace:
        for s in self.work.negatives():
            if not s.contents:
                self.trace.fuse = FuseReport(self.work.path(s.key), {}, -1)
                return self.trace
        changed = True
        while changed:
            changed = False
            for key in list(self.work.keys):
                s = self.work.children.get(key)
                if s is None or s.kind is not NEG:
                    continue
                for f in list(_firings(s, self.work)):
                    fkey = (s.key, _theta_key(f.theta), tuple(sorted(r.key for r in f.residual)))
                    if fkey in self.fired:
                        continue
                    if not self._premises_present(f):
                        continue
                    self.fired.add(fkey)
                    result = self.fire(s, f)
                    if self.trace.fuse is not None:
                        return self.trace
                    changed = changed or result != "skip"
                    if result == "in-place":
                        break
        return self.trace

    def _premises_present(self, f: _Firing) -> bool:
        for p in f.premises:
            inst = substitute(p, f.theta)
            if isinstance(p, Surface) and self.work.find_child(inst) is None:
                return False
        return True

    def fire(self, s: Surface, f: _Firing) -> str:
        work = self.work
        theta = f.theta
        conclude = None
        if len(f.residual) == 1:
            d = f.residual[0]
            unbound = (free_labels(d) & set(s.graffiti)) - set(theta)
            if not unbound:
                conclude = d
        if conclude is not None:
            d_inst = substitute(conclude, theta)
            if work.satisfied(d_inst.contents, frozenset(d_inst.graffiti), {}):
                return "skip"
        elif f.residual and not f.premises:
            return "skip"

        if theta:
            copy = instantiate(s, theta)
            if work.find_child(copy) is None:
                self.step(RuleApplication(Rule.R4I, (), s, dict(theta), source=()))
            key, _ = work.add_child(copy)
            mode = "copy"
        else:
            key = s.key
            mode = "in-place"

        for p in f.premises:
            inst = substitute(p, theta)
            cur = work.children[key]
            found = _find(cur, inst)
            if found is None:
                # an identical copy already lost this premise earlier
                continue
            self.step(RuleApplication(Rule.R4D, work.path(key), inst, {}))
            work.remove_child(key)
            key, _ = work.add_child(cur.replace(contents=[c for c in cur.contents if c is not found]))

        cur = work.children[key]
        if not cur.contents:
            self.trace.fuse = FuseReport(work.path(key), dict(theta), len(self.trace.steps) - 1)
            return mode
        if conclude is None:
            self.trace.produced.append(cur)
            return mode

        inner = cur.contents[0]
        mapping = {g: BlankNode(self.mint()) for g in inner.graffiti}
        self.step(RuleApplication(Rule.R3R, work.path(key), None, mapping))
        work.remove_child(key)
        spliced = rename_graffiti(inner, {k: v.label for k, v in mapping.items()})
        work.graffiti.extend(spliced.graffiti)
        for item in spliced.contents:
            if isinstance(item, Triple):
                if work.add_fact(item):
                    self.trace.produced.append(item)
            else:
                if work.add_child(item)[1]:
                    self.trace.produced.append(item)
        return mode


def saturate(
    doc: Document, limits: Limits | None = None, fresh: FreshLabelSource | None = None
) -> tuple[Document, DerivationTrace]:
    """Forward-chain to a fixpoint, a fuse, or a limit.

    The document is normalized first; ``trace.start`` is the normalized
    document the steps replay against.
    """
    limits = limits or Limits()
    doc = normalize(doc)
    if doc.root.depth() - 1 > limits.max_depth:
        raise LimitExceeded(
            f"nesting deeper than {limits.max_depth}", DerivationTrace(start=doc), doc
        )
    fresh = fresh or FreshLabelSource("e")
    fresh.reserve(blank_labels(doc.root))
    sat = _Saturator(doc, limits, fresh)
    trace = sat.run()
    return sat.document(), trace


def detect_fuse(doc: Document, limits: Limits | None = None) -> FuseReport | None:
    return saturate(doc, limits)[1].fuse


__all__ = [
    "AddressError",
    "ContainmentViolation",
    "DerivationTrace",
    "FuseReport",
    "ItemNotFound",
    "LimitExceeded",
    "Limits",
    "NoAncestorCopy",
    "NoMatch",
    "NotADoubleCut",
    "ParityViolation",
    "Rule",
    "RuleApplication",
    "RuleError",
    "ScopeViolation",
    "apply_r1_insert",
    "apply_r2_erase",
    "apply_r3_insert_double_cut",
    "apply_r3_remove_double_cut",
    "apply_r4_deiterate",
    "apply_r4_iterate",
    "apply_step",
    "check_proof",
    "detect_fuse",
    "remove_double_cut",
    "replay",
    "saturate",
    "unify_item",
]
