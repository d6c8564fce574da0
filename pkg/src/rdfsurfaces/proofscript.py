"""Line-oriented proof scripts: one rule application per line.

    R1  <path> <item>
    R2  <path> <item>
    R3R <path> [{rename}]
    R3I <path> [<item> ...]
    R4I <source-path> <target-path> <item> [{subst}]
    R4D <path> <item> [{subst}]

Paths are ``/`` for the root and ``/i/j`` for nested surfaces.  Items are
written in N3S; a substitution is ``{A=:WOS, B=_:e1}``.  ``@prefix`` lines
declare namespaces for the lines after them, ``#`` starts a comment.
"""

from __future__ import annotations

import re

from .calculus import Rule, RuleApplication
from .normalize import format_path
from .parser import ParseError, TermWriter, parse_items, parse_term, serialize_items
from .terms import Item, Path, Term


class ScriptError(ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


_PREFIX = re.compile(r"@prefix\s+([^\s:]*):\s*<([^>]*)>\s*\.\s*$")
_PATH = re.compile(r"/(?:\d+(?:/\d+)*)?\Z")
_BINDING = re.compile(
    r"""\s*([^\s=,{}]+)\s*=\s*("(?:[^"\\]|\\.)*"(?:@[A-Za-z0-9-]+|\^\^\S+?)?|[^\s,}]+)\s*(?:,|\Z)"""
)


def parse_path(text: str) -> Path:
    if not _PATH.match(text):
        raise ValueError(f"bad path {text!r}")
    return tuple(int(p) for p in text.strip("/").split("/") if p)


def _split_subst(rest: str) -> tuple[str, str | None]:
    rest = rest.rstrip()
    if not rest.endswith("}"):
        return rest, None
    start = rest.rfind("{")
    if start < 0:
        return rest, None
    body = rest[start + 1 : -1]
    if body.strip() and not re.fullmatch(r"(?:" + _BINDING.pattern + r")+", body):
        return rest, None
    return rest[:start].rstrip(), body


def _parse_subst(body: str, prefixes: dict[str, str]) -> dict[str, Term]:
    out: dict[str, Term] = {}
    for m in _BINDING.finditer(body):
        label = m.group(1)
        if label.startswith("_:"):
            label = label[2:]
        out[label] = parse_term(m.group(2), prefixes)
    return out


def parse_script(text: str, prefixes: dict[str, str] | None = None) -> list[RuleApplication]:
    prefixes = dict(prefixes or {})
    steps: list[RuleApplication] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _PREFIX.match(line)
        if m:
            prefixes[m.group(1)] = m.group(2)
            continue
        try:
            steps.append(_parse_line(line, prefixes))
        except (ValueError, ParseError) as e:
            raise ScriptError(lineno, str(e)) from None
    return steps


def _parse_line(line: str, prefixes: dict[str, str]) -> RuleApplication:
    head, _, rest = line.partition(" ")
    try:
        rule = Rule(head)
    except ValueError:
        raise ValueError(f"unknown rule {head!r}") from None
    rest = rest.strip()
    first, _, rest = rest.partition(" ")
    target = parse_path(first)
    source = None
    if rule is Rule.R4I:
        second, _, rest = rest.strip().partition(" ")
        source, target = target, parse_path(second)
    body, subst_text = _split_subst(rest)
    subst = _parse_subst(subst_text, prefixes) if subst_text is not None else {}
    if subst and rule not in (Rule.R3R, Rule.R4I, Rule.R4D):
        raise ValueError(f"{rule.value} takes no substitution")
    items = parse_items(body, prefixes) if body.strip() else []
    if rule is Rule.R3R:
        if items:
            raise ValueError("R3R takes no item")
        return RuleApplication(rule, target, None, subst)
    if rule is Rule.R3I:
        return RuleApplication(rule, target, items=tuple(items))
    if len(items) != 1:
        raise ValueError(f"{rule.value} needs exactly one item, got {len(items)}")
    return RuleApplication(rule, target, items[0], subst, source=source)


def _one_line(item: Item, writer: TermWriter) -> str:
    text = serialize_items([item], writer=writer)
    return re.sub(r"\s+", " ", text).strip()


def format_subst(subst: dict[str, Term], writer: TermWriter | None = None) -> str:
    writer = writer or TermWriter()
    return "{" + ", ".join(f"{k}={writer.term(v)}" for k, v in sorted(subst.items())) + "}"


def format_step(step: RuleApplication, prefixes: dict[str, str] | None = None) -> str:
    writer = TermWriter(prefixes)
    parts = [step.rule.value]
    if step.rule is Rule.R4I:
        parts.append(format_path(step.source if step.source is not None else step.target))
    parts.append(format_path(step.target))
    if step.item is not None:
        parts.append(_one_line(step.item, writer))
    for item in step.items:
        parts.append(_one_line(item, writer))
    if step.subst:
        parts.append(format_subst(step.subst, writer))
    return " ".join(parts)


def format_script(steps, prefixes: dict[str, str] | None = None) -> str:
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in (prefixes or {}).items()]
    lines.extend(format_step(s, prefixes) for s in steps)
    return "\n".join(lines) + "\n" if lines else ""
