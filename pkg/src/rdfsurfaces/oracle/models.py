"""Brute-force model search over tiny finite domains.

For a domain of size ``k`` every constant map (up to renaming of domain
elements) is tried; for each, the formula is grounded into a circuit over the
``|predicates| * k**2`` relation atoms and all relation assignments are
evaluated at once by a bit-parallel kernel.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from ..terms import BlankNode, Document, Iri
from .formula import TRUE, And, Atom, Formula, Not, Var, conj, negate, to_formula, vocabulary

MAX_ATOMS = 18
HARD_MAX_ATOMS = 40
MAX_BLOCK = 10


class TooLarge(ValueError):
    pass


@dataclass
class Interpretation:
    size: int
    constants: dict = field(default_factory=dict)
    relations: dict = field(default_factory=dict)

    def describe(self, prefixes: dict[str, str] | None = None) -> str:
        from .formula import _short

        prefixes = prefixes or {}

        def name(c) -> str:
            return _short(c.value, prefixes) if isinstance(c, Iri) else str(c)

        lines = [f"domain: {{{', '.join(f'd{i}' for i in range(self.size))}}}"]
        for c, d in self.constants.items():
            lines.append(f"  {name(c)} -> d{d}")
        for p, pairs in self.relations.items():
            body = ", ".join(f"(d{a}, d{b})" for a, b in sorted(pairs))
            lines.append(f"  {_short(p, prefixes)}: {{{body}}}")
        return "\n".join(lines)


def holds(f: Formula, interp: Interpretation, env: dict | None = None) -> bool:
    """Standard model checking of ``f`` in ``interp``."""
    env = env or {}

    def val(t):
        if isinstance(t, Var):
            return env[t]
        return interp.constants[t]

    if isinstance(f, Atom):
        return (val(f.subject), val(f.object)) in interp.relations.get(f.predicate, ())
    if isinstance(f, And):
        return all(holds(p, interp, env) for p in f.parts)
    if isinstance(f, Not):
        return not holds(f.body, interp, env)
    for variables, body in _miniscope(f):
        if not any(
            holds(body, interp, {**env, **dict(zip(variables, values))})
            for values in itertools.product(range(interp.size), repeat=len(variables))
        ):
            return False
    return True


def restricted_growth(m: int, k: int):
    """Maps of ``m`` constants into ``k`` elements, one per domain permutation class."""
    if m == 0:
        yield ()
        return
    seq = [0] * m

    def rec(i: int, top: int):
        if i == m:
            yield tuple(seq)
            return
        for v in range(min(top + 2, k)):
            seq[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


class Circuit:
    """Hash-consed straight-line program with constant folding."""

    def __init__(self) -> None:
        self.ops: list[int] = []
        self.arg_a: list[int] = []
        self.arg_b: list[int] = []
        self._memo: dict[tuple, int] = {}
        self.false = self._node(kernels.OP_FALSE)
        self.true = self._node(kernels.OP_TRUE)

    def _node(self, op: int, a: int = 0, b: int = 0) -> int:
        key = (op, a, b)
        idx = self._memo.get(key)
        if idx is None:
            idx = len(self.ops)
            self.ops.append(op)
            self.arg_a.append(a)
            self.arg_b.append(b)
            self._memo[key] = idx
        return idx

    def atom(self, i: int) -> int:
        return self._node(kernels.OP_ATOM, i)

    def not_(self, x: int) -> int:
        if x == self.true:
            return self.false
        if x == self.false:
            return self.true
        if self.ops[x] == kernels.OP_NOT:
            return self.arg_a[x]
        return self._node(kernels.OP_NOT, x)

    def and_(self, x: int, y: int) -> int:
        if x == self.false or y == self.false:
            return self.false
        if x == self.true:
            return y
        if y == self.true or x == y:
            return x
        return self._node(kernels.OP_AND, min(x, y), max(x, y))

    def or_(self, x: int, y: int) -> int:
        if x == self.true or y == self.true:
            return self.true
        if x == self.false:
            return y
        if y == self.false or x == y:
            return x
        return self._node(kernels.OP_OR, min(x, y), max(x, y))

    def arrays(self, root: int):
        # root must be the last register; copy it if it is not
        ops, a, b = list(self.ops), list(self.arg_a), list(self.arg_b)
        if root != len(ops) - 1:
            ops.append(kernels.OP_OR)
            a.append(root)
            b.append(root)
        return (
            np.asarray(ops, dtype=np.int8),
            np.asarray(a, dtype=np.int64),
            np.asarray(b, dtype=np.int64),
        )


def ground(f: Formula, k: int, preds: dict[str, int], consts: dict, circuit: Circuit) -> int:
    def go(f: Formula, env: dict) -> int:
        if isinstance(f, Atom):
            s = env[f.subject] if isinstance(f.subject, Var) else consts[f.subject]
            o = env[f.object] if isinstance(f.object, Var) else consts[f.object]
            return circuit.atom(preds[f.predicate] * k * k + s * k + o)
        if isinstance(f, And):
            acc = circuit.true
            for p in f.parts:
                acc = circuit.and_(acc, go(p, env))
                if acc == circuit.false:
                    break
            return acc
        if isinstance(f, Not):
            return circuit.not_(go(f.body, env))
        acc = circuit.true
        for variables, body in _miniscope(f):
            acc = circuit.and_(acc, go_exists(variables, body, env))
            if acc == circuit.false:
                break
        return acc

    def go_exists(variables, body, env) -> int:
        if len(variables) > MAX_BLOCK:
            raise TooLarge(f"{len(variables)} linked variables under one quantifier (limit {MAX_BLOCK})")
        acc = circuit.false
        for values in itertools.product(range(k), repeat=len(variables)):
            inner = dict(env)
            inner.update(zip(variables, values))
            acc = circuit.or_(acc, go(body, inner))
            if acc == circuit.true:
                break
        return acc

    return go(f, {})


def _free_vars(f: Formula) -> set:
    if isinstance(f, Atom):
        return {t for t in (f.subject, f.object) if isinstance(t, Var)}
    if isinstance(f, And):
        return set().union(*(_free_vars(p) for p in f.parts))
    if isinstance(f, Not):
        return _free_vars(f.body)
    return _free_vars(f.body) - set(f.variables)


def _miniscope(f: Exists) -> list[tuple[tuple, Formula]]:
    """Split ``exists xs (A and B ...)`` into blocks that share no variable of ``xs``.

    A conjunct without any of ``xs`` becomes its own block with no variables.
    """
    parts = f.body.parts if isinstance(f.body, And) else (f.body,)
    bound = set(f.variables)
    blocks: list[tuple[set, list]] = []
    for p in parts:
        vs = _free_vars(p) & bound
        linked = [b for b in blocks if b[0] & vs]
        merged_vars, merged_parts = set(vs), [p]
        for b in linked:
            merged_vars |= b[0]
            merged_parts = b[1] + merged_parts
            blocks.remove(b)
        blocks.append((merged_vars, merged_parts))
    out = []
    for vs, ps in blocks:
        # keep the declared order so grounding is deterministic
        ordered = tuple(v for v in f.variables if v in vs)
        out.append((ordered, conj(ps)))
    if not parts:
        out.append(((), TRUE))
    return out


def _check_size(n_preds: int, k: int, force: bool) -> int:
    n = n_preds * k * k
    if n > HARD_MAX_ATOMS or (n > MAX_ATOMS and not force):
        raise TooLarge(
            f"{n_preds} predicates at domain size {k} give {n} relation atoms "
            f"(limit {MAX_ATOMS}{'' if not force else f', hard limit {HARD_MAX_ATOMS}'})"
        )
    return n


def find_model(f: Formula, k: int, force: bool = False) -> Interpretation | None:
    """A model of ``f`` with exactly ``k`` elements, or None."""
    if k < 1:
        raise ValueError("domain size must be at least 1")
    preds, consts = vocabulary(f)
    n = _check_size(len(preds), k, force)
    pidx = {p: i for i, p in enumerate(preds)}
    for rgs in restricted_growth(len(consts), k):
        cmap = dict(zip(consts, rgs))
        circuit = Circuit()
        root = ground(f, k, pidx, cmap, circuit)
        if root == circuit.false:
            continue
        if root == circuit.true:
            index = 0
        else:
            index = kernels.first_true(*circuit.arrays(root), n)
            if index < 0:
                continue
        relations: dict[str, set] = {p: set() for p in preds}
        for p, pi in pidx.items():
            for s in range(k):
                for o in range(k):
                    if (index >> (pi * k * k + s * k + o)) & 1:
                        relations[p].add((s, o))
        return Interpretation(k, cmap, {p: frozenset(r) for p, r in relations.items()})
    return None


def satisfiable(f: Formula, k: int = 3, force: bool = False) -> bool:
    """True iff ``f`` has a model with at most ``k`` elements."""
    return smallest_model(f, k, force) is not None


def smallest_model(f: Formula, k: int = 3, force: bool = False) -> Interpretation | None:
    preds, _ = vocabulary(f)
    _check_size(len(preds), k, force)
    for size in range(1, k + 1):
        model = find_model(f, size, force)
        if model is not None:
            return model
    return None


class Entailment(enum.Enum):
    ENTAILED = "Entailed"
    NOT_ENTAILED = "NotEntailed"


@dataclass
class EntailmentResult:
    status: Entailment
    k: int
    counter_model: Interpretation | None = None

    def __str__(self) -> str:
        if self.status is Entailment.ENTAILED:
            return f"Entailed-at-{self.k}"
        return "NotEntailed"


def entails(kb: Document | Formula, goal: Document | Formula, k: int = 3, force: bool = False) -> EntailmentResult:
    """Search for a counter-model of ``kb => goal`` with at most ``k`` elements.

    ``Entailed-at-k`` is evidence, not proof: no counter-model that small.
    """
    kb_f = to_formula(kb) if isinstance(kb, Document) else kb
    goal_f = to_formula(goal) if isinstance(goal, Document) else goal
    model = smallest_model(conj([kb_f, negate(goal_f)]), k, force)
    if model is None:
        return EntailmentResult(Entailment.ENTAILED, k)
    return EntailmentResult(Entailment.NOT_ENTAILED, k, model)


def herbrand_interpretation(doc: Document) -> Interpretation:
    """Constants and root blank nodes as distinct elements; root facts as relations.

    Meant for saturated documents: if the document's formula holds here it is
    satisfiable, whatever the domain size.
    """
    elements: dict = {}
    relations: dict[str, set] = {}
    f = to_formula(doc)
    for c in vocabulary(f)[1]:
        elements.setdefault(c, len(elements))
    for t in doc.root.facts:
        for x in (t.subject, t.object):
            elements.setdefault(x, len(elements))
        relations.setdefault(t.predicate.value, set()).add((elements[t.subject], elements[t.object]))
    consts = {c: i for c, i in elements.items() if not isinstance(c, BlankNode)}
    return Interpretation(max(1, len(elements)), consts, {p: frozenset(r) for p, r in relations.items()})


__all__ = [
    "Entailment",
    "EntailmentResult",
    "Interpretation",
    "TooLarge",
    "entails",
    "find_model",
    "herbrand_interpretation",
    "holds",
    "satisfiable",
    "smallest_model",
]
