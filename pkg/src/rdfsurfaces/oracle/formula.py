"""First-order reading of a surface document.

The root surface reads as an existentially closed conjunction; a negative
surface with graffiti ``G`` reads as ``not exists G (contents)``.  Query
surfaces are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..normalize import existential_closure
from ..terms import BlankNode, Document, Iri, Literal, Surface, SurfaceKind, Triple


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


Constant = Union[Iri, Literal]
Arg = Union[Var, Iri, Literal]


@dataclass(frozen=True)
class Atom:
    predicate: str
    subject: Arg
    object: Arg


@dataclass(frozen=True)
class And:
    parts: tuple = ()


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    variables: tuple[Var, ...]
    body: "Formula"


Formula = Union[Atom, And, Not, Exists]
TRUE = And(())
FALSE = Not(TRUE)


def conj(parts) -> Formula:
    flat = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.parts)
        else:
            flat.append(p)
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def exists(variables, body: Formula) -> Formula:
    variables = tuple(variables)
    return Exists(variables, body) if variables else body


def negate(f: Formula) -> Formula:
    return f.body if isinstance(f, Not) else Not(f)


def to_formula(doc: Document | Surface) -> Formula:
    """Translate a document (or a root-like surface) into a closed formula."""
    if isinstance(doc, Document):
        doc = existential_closure(doc)
        root = doc.root
    else:
        root = doc
    names: dict[str, int] = {}

    def fresh_var(label: str) -> Var:
        n = names.get(label, 0)
        names[label] = n + 1
        return Var(label if n == 0 else f"{label}#{n}")

    def arg(t, env) -> Arg:
        if isinstance(t, BlankNode):
            if t.label not in env:
                raise ValueError(f"unbound blank node _:{t.label}")
            return env[t.label]
        return t

    def body(s: Surface, env: dict) -> Formula:
        env = dict(env)
        vs = []
        for g in s.graffiti:
            v = fresh_var(g)
            env[g] = v
            vs.append(v)
        parts: list[Formula] = []
        for item in s.contents:
            if isinstance(item, Triple):
                parts.append(Atom(item.predicate.value, arg(item.subject, env), arg(item.object, env)))
            elif item.kind is SurfaceKind.NEGATIVE:
                parts.append(Not(body(item, env)))
        return exists(vs, conj(parts))

    return body(root, {})


def atoms(f: Formula):
    if isinstance(f, Atom):
        yield f
    elif isinstance(f, And):
        for p in f.parts:
            yield from atoms(p)
    else:
        yield from atoms(f.body)


def vocabulary(f: Formula) -> tuple[list[str], list[Constant]]:
    """Predicates and constants (in first-seen order) used by ``f``."""
    preds: list[str] = []
    consts: list[Constant] = []
    for a in atoms(f):
        if a.predicate not in preds:
            preds.append(a.predicate)
        for t in (a.subject, a.object):
            if not isinstance(t, Var) and t not in consts:
                consts.append(t)
    return preds, consts


def _short(value: str, prefixes: dict[str, str]) -> str:
    for name, ns in prefixes.items():
        if value.startswith(ns) and len(value) > len(ns):
            return f"{name}:{value[len(ns):]}"
    return f"<{value}>"


def pretty(f: Formula, prefixes: dict[str, str] | None = None) -> str:
    """Render in conventional logic notation, e.g. ``¬∃x(⟨x p o⟩ ∧ ...)``."""
    prefixes = prefixes or {}

    def term(t) -> str:
        if isinstance(t, Var):
            return t.name
        if isinstance(t, Iri):
            return _short(t.value, prefixes)
        return str(t)

    def go(f: Formula) -> str:
        if isinstance(f, Atom):
            return f"⟨{term(f.subject)} {_short(f.predicate, prefixes)} {term(f.object)}⟩"
        if isinstance(f, And):
            if not f.parts:
                return "⊤"
            return "(" + " ∧ ".join(go(p) for p in f.parts) + ")"
        if isinstance(f, Not):
            if f.body == TRUE:
                return "⊥"
            return "¬" + go(f.body)
        vs = ",".join(v.name for v in f.variables)
        inner = go(f.body)
        if not inner.startswith("("):
            inner = f"({inner})"
        return f"∃{vs}{inner}"

    text = go(f)
    if isinstance(f, And) and f.parts and text.startswith("("):
        text = text[1:-1]
    return text
