"""Recursive-descent parser and serializer for the N3S surface syntax.

N3S is Turtle plus two constructs: a list of blank nodes (the graffiti) in
subject position and a graph term in object position, joined by a surface
predicate such as ``log:onNegativeSurface``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from urllib.parse import urljoin

from .terms import (
    LOG,
    RDF_LANGSTRING,
    RDF_TYPE,
    SURFACE_IRIS,
    SURFACE_PREDICATES,
    XSD,
    XSD_STRING,
    BlankNode,
    Document,
    Iri,
    Item,
    Literal,
    Surface,
    SurfaceKind,
    Term,
    TermError,
    Triple,
)

XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_BOOLEAN = XSD + "boolean"


class ErrorKind(enum.Enum):
    UNKNOWN_PREFIX = "UnknownPrefix"
    GRAPH_TERM_OUTSIDE_SURFACE_OBJECT = "GraphTermOutsideSurfaceObject"
    LIST_TERM_OUTSIDE_SURFACE_SUBJECT = "ListTermOutsideSurfaceSubject"
    NON_BLANK_NODE_IN_GRAFFITI_LIST = "NonBlankNodeInGraffitiList"
    UNKNOWN_SURFACE_PREDICATE = "UnknownSurfacePredicate"
    QUERY_NOT_TOP_LEVEL = "QueryNotTopLevel"
    SYNTAX_ERROR = "SyntaxError"


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    offset: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class ParseError(Exception):
    def __init__(self, kind: ErrorKind, message: str, span: SourceSpan) -> None:
        super().__init__(f"{span}: {kind.value}: {message}")
        self.kind = kind
        self.message = message
        self.span = span


_PN_CHARS_BASE = r"A-Za-zÀ-ÖØ-öø-˿Ͱ-ͽͿ-῿‌-‍⁰-↏Ⰰ-⿯、-퟿豈-﷏ﷰ-�\U00010000-\U000EFFFF"
_PN_CHARS_U = _PN_CHARS_BASE + "_"
_PN_CHARS = _PN_CHARS_U + r"\-0-9·̀-ͯ‿-⁀"
_PN_PREFIX = rf"[{_PN_CHARS_BASE}](?:[{_PN_CHARS}.]*[{_PN_CHARS}])?"
_PLX = r"%[0-9A-Fa-f]{2}|\\[_~.\-!$&'()*+,;=/?#@%]"
_PN_LOCAL = (
    rf"(?:[{_PN_CHARS_U}:0-9]|{_PLX})"
    rf"(?:(?:[{_PN_CHARS}.:]|{_PLX})*(?:[{_PN_CHARS}:]|{_PLX}))?"
)

_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("STRING_LONG", r'"""(?:[^"\\]|\\.|"(?!""))*"""|\'\'\'(?:[^\'\\]|\\.|\'(?!\'\'))*\'\'\''),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"|\'(?:[^\'\\\n\r]|\\.)*\''),
    ("BLANK", rf"_:[{_PN_CHARS_U}0-9](?:[{_PN_CHARS}.]*[{_PN_CHARS}])?"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("DOUBLE", r"[+-]?(?:[0-9]+\.[0-9]*[eE][+-]?[0-9]+|\.[0-9]+[eE][+-]?[0-9]+|[0-9]+[eE][+-]?[0-9]+)"),
    ("DECIMAL", r"[+-]?[0-9]*\.[0-9]+"),
    ("INTEGER", r"[+-]?[0-9]+"),
    ("PNAME_LN", rf"(?:{_PN_PREFIX})?:{_PN_LOCAL}"),
    ("PNAME_NS", rf"(?:{_PN_PREFIX})?:"),
    ("DTYPE", r"\^\^"),
    ("NAME", r"[A-Za-z][A-Za-z0-9_]*"),
    ("PUNCT", r"[.;,()\[\]{}]"),
    ("OTHER", r"=>|<=|[=?!^@|]"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{n}>{p})" for n, p in _TOKEN_SPEC))

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_UCHAR = re.compile(r"\\u([0-9A-Fa-f]{4})|\\U([0-9A-Fa-f]{8})")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


class _Lexer:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[Token] = []
        pos = 0
        n = len(text)
        while pos < n:
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise ParseError(ErrorKind.SYNTAX_ERROR, f"unexpected character {text[pos]!r}", self.span(pos))
            kind = m.lastgroup
            if kind not in ("WS", "COMMENT"):
                self.tokens.append(Token(kind, m.group(), pos))
            pos = m.end()
        self.tokens.append(Token("EOF", "", n))

    def span(self, pos: int) -> SourceSpan:
        pos = min(pos, len(self.text))
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return SourceSpan(line, col, len(self.text[:pos].encode("utf-8")))


def _unescape_string(body: str) -> str:
    body = _UCHAR.sub(lambda m: chr(int(m.group(1) or m.group(2), 16)), body)
    out = []
    i = 0
    while i < len(body):
        c = body[i]
        if c == "\\" and i + 1 < len(body):
            nxt = body[i + 1]
            if nxt not in _ECHAR:
                raise ValueError(f"bad escape \\{nxt}")
            out.append(_ECHAR[nxt])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _unescape_local(local: str) -> str:
    return re.sub(r"\\(.)", r"\1", local)


class _Parser:
    def __init__(self, text: str, prefixes: dict[str, str] | None = None, base: str | None = None) -> None:
        self.lexer = _Lexer(text)
        self.toks = self.lexer.tokens
        self.i = 0
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self.prefix_order: list[str] = list(self.prefixes)
        self.base = base
        used = {t.text[2:] for t in self.toks if t.kind == "BLANK"}
        stem = "anon"
        while any(u.startswith(stem) for u in used):
            stem += "x"
        self._anon_stem = stem
        self._anon = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, ahead: int = 1) -> Token:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def advance(self) -> Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, kind: ErrorKind, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(kind, message, self.lexer.span(tok.pos))

    def is_punct(self, ch: str, tok: Token | None = None) -> bool:
        tok = tok or self.tok
        return tok.kind == "PUNCT" and tok.text == ch

    def expect(self, ch: str) -> Token:
        if not self.is_punct(ch):
            shown = self.tok.text or "end of input"
            raise self.error(ErrorKind.SYNTAX_ERROR, f"expected {ch!r}, found {shown!r}")
        return self.advance()

    # directives

    def document(self) -> Document:
        items = self.statements(top=True, in_query=False, closing=None)
        root = self._surface((), SurfaceKind.POSITIVE, items, self.toks[0])
        prefixes = tuple((p, self.prefixes[p]) for p in self.prefix_order)
        return Document(prefixes, self.base, root)

    def directive(self) -> bool:
        tok = self.tok
        sparql = tok.kind == "NAME" and tok.text.upper() in ("PREFIX", "BASE")
        if tok.kind == "LANGTAG" and tok.text in ("@prefix", "@base") or sparql:
            word = tok.text.lstrip("@").lower()
            self.advance()
            if word == "prefix":
                ns_tok = self.advance()
                if ns_tok.kind != "PNAME_NS":
                    raise self.error(ErrorKind.SYNTAX_ERROR, "expected prefix name", ns_tok)
                iri_tok = self.advance()
                if iri_tok.kind != "IRIREF":
                    raise self.error(ErrorKind.SYNTAX_ERROR, "expected IRI", iri_tok)
                name = ns_tok.text[:-1]
                if name not in self.prefixes:
                    self.prefix_order.append(name)
                self.prefixes[name] = self.resolve(iri_tok.text[1:-1], iri_tok)
            else:
                iri_tok = self.advance()
                if iri_tok.kind != "IRIREF":
                    raise self.error(ErrorKind.SYNTAX_ERROR, "expected IRI", iri_tok)
                self.base = self.resolve(iri_tok.text[1:-1], iri_tok)
            if not sparql:
                self.expect(".")
            return True
        return False

    def resolve(self, ref: str, tok: Token) -> str:
        ref = _UCHAR.sub(lambda m: chr(int(m.group(1) or m.group(2), 16)), ref)
        if re.match(r"[A-Za-z][A-Za-z0-9+.\-]*:", ref):
            return ref
        if self.base is None:
            raise self.error(ErrorKind.SYNTAX_ERROR, f"relative IRI <{ref}> without a base", tok)
        return urljoin(self.base, ref)

    # statements

    def statements(self, top: bool, in_query: bool, closing: str | None) -> list[Item]:
        items: list[Item] = []
        while True:
            if self.tok.kind == "EOF":
                if closing:
                    raise self.error(ErrorKind.SYNTAX_ERROR, f"unterminated graph term, expected {closing!r}")
                return items
            if closing and self.is_punct(closing):
                return items
            if self.directive():
                continue
            self.statement(items, top, in_query)
            if closing and self.is_punct(closing):
                return items
            self.expect(".")

    def statement(self, items: list[Item], top: bool, in_query: bool) -> None:
        tok = self.tok
        if self.is_punct("("):
            items.append(self.surface_statement(top, in_query))
            return
        if self.is_punct("{"):
            raise self.error(ErrorKind.GRAPH_TERM_OUTSIDE_SURFACE_OBJECT, "graph term in subject position")
        if self.is_punct("["):
            subject = self.blank_property_list(items)
            if self.is_punct(".") or self.is_punct("}"):
                return
        else:
            subject = self.term()
            if isinstance(subject, Literal):
                raise self.error(ErrorKind.SYNTAX_ERROR, "literal in subject position", tok)
        self.predicate_object_list(subject, items)

    def surface_statement(self, top: bool, in_query: bool) -> Surface:
        start = self.tok
        graffiti, bad = self.graffiti_list()
        pred_tok = self.tok
        predicate = self.verb()
        has_graph = self.is_punct("{")
        kind = SURFACE_PREDICATES.get(predicate.value)
        if kind is None:
            if has_graph:
                raise self.error(
                    ErrorKind.UNKNOWN_SURFACE_PREDICATE, f"unknown surface predicate <{predicate.value}>", pred_tok
                )
            raise self.error(
                ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT, "list term outside a surface subject", start
            )
        if bad is not None:
            raise self.error(
                ErrorKind.NON_BLANK_NODE_IN_GRAFFITI_LIST, f"graffiti must be blank nodes, found {bad.text!r}", bad
            )
        if not has_graph:
            raise self.error(ErrorKind.SYNTAX_ERROR, "surface predicate requires a graph term object")
        if in_query:
            raise self.error(ErrorKind.SYNTAX_ERROR, "query surfaces hold triples only", start)
        if kind is SurfaceKind.QUERY and not top:
            raise self.error(ErrorKind.QUERY_NOT_TOP_LEVEL, "query surfaces are only allowed at top level", start)
        self.expect("{")
        contents = self.statements(top=False, in_query=kind is SurfaceKind.QUERY, closing="}")
        self.expect("}")
        return self._surface(graffiti, kind, contents, start)

    def _surface(self, graffiti, kind, contents, tok: Token) -> Surface:
        try:
            return Surface(graffiti, kind, contents)
        except TermError as e:
            raise self.error(ErrorKind.SYNTAX_ERROR, str(e), tok) from None

    def graffiti_list(self) -> tuple[list[str], Token | None]:
        """Blank-node labels of a list, plus the first non-blank member if any.

        A bad member is only an error once the predicate shows this is a
        surface, so the rest of the list is skipped rather than rejected.
        """
        self.expect("(")
        labels: list[str] = []
        bad: Token | None = None
        depth = 0
        while depth or not self.is_punct(")"):
            tok = self.tok
            if tok.kind == "EOF":
                raise self.error(ErrorKind.SYNTAX_ERROR, "unterminated list")
            if depth == 0 and tok.kind == "BLANK":
                self.advance()
                labels.append(tok.text[2:])
                continue
            if depth == 0 and self.is_punct("[") and self.is_punct("]", self.peek()):
                self.advance()
                self.advance()
                labels.append(self.fresh_anon())
                continue
            if bad is None:
                bad = tok
            if self.is_punct("(") or self.is_punct("[") or self.is_punct("{"):
                depth += 1
            elif self.is_punct(")") or self.is_punct("]") or self.is_punct("}"):
                depth -= 1
            self.advance()
        self.advance()
        return labels, bad

    def predicate_object_list(self, subject: Term, items: list[Item]) -> None:
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate, items)
            if not self.is_punct(";"):
                return
            while self.is_punct(";"):
                self.advance()
            if self.is_punct(".") or self.is_punct("]") or self.is_punct("}") or self.tok.kind == "EOF":
                return

    def object_list(self, subject: Term, predicate: Iri, items: list[Item]) -> None:
        while True:
            tok = self.tok
            if self.is_punct("{"):
                if predicate.value in SURFACE_PREDICATES:
                    raise self.error(ErrorKind.SYNTAX_ERROR, "surface subject must be a graffiti list", tok)
                raise self.error(
                    ErrorKind.UNKNOWN_SURFACE_PREDICATE, f"graph term object with non-surface predicate <{predicate.value}>"
                )
            if self.is_punct("("):
                raise self.error(ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT, "list term outside a surface subject")
            if self.is_punct("["):
                obj = self.blank_property_list(items)
            else:
                obj = self.term()
            items.append(self.triple(subject, predicate, obj, tok))
            if not self.is_punct(","):
                return
            self.advance()

    def triple(self, s: Term, p: Iri, o: Term, tok: Token) -> Triple:
        try:
            return Triple(s, p, o)
        except TermError as e:
            raise self.error(ErrorKind.SYNTAX_ERROR, str(e), tok) from None

    def blank_property_list(self, items: list[Item]) -> BlankNode:
        self.expect("[")
        node = BlankNode(self.fresh_anon())
        if not self.is_punct("]"):
            self.predicate_object_list(node, items)
        self.expect("]")
        return node

    def fresh_anon(self) -> str:
        self._anon += 1
        return f"{self._anon_stem}{self._anon}"

    def verb(self) -> Iri:
        tok = self.tok
        if tok.kind == "NAME" and tok.text == "a":
            self.advance()
            return Iri(RDF_TYPE)
        if tok.kind in ("IRIREF", "PNAME_LN", "PNAME_NS"):
            return self.iri()
        if self.is_punct("{"):
            raise self.error(ErrorKind.GRAPH_TERM_OUTSIDE_SURFACE_OBJECT, "graph term in predicate position")
        if self.is_punct("("):
            raise self.error(ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT, "list term in predicate position")
        raise self.error(ErrorKind.SYNTAX_ERROR, f"expected a predicate, found {tok.text or 'end of input'!r}")

    def iri(self) -> Iri:
        tok = self.advance()
        if tok.kind == "IRIREF":
            return Iri(self.resolve(tok.text[1:-1], tok))
        prefix, _, local = tok.text.partition(":")
        if prefix not in self.prefixes:
            raise self.error(ErrorKind.UNKNOWN_PREFIX, f"undeclared prefix {prefix!r}", tok)
        return Iri(self.prefixes[prefix] + _unescape_local(local))

    def term(self) -> Term:
        tok = self.tok
        kind = tok.kind
        if kind in ("IRIREF", "PNAME_LN", "PNAME_NS"):
            return self.iri()
        if kind == "BLANK":
            self.advance()
            return BlankNode(tok.text[2:])
        if self.is_punct("[") and self.is_punct("]", self.peek()):
            self.advance()
            self.advance()
            return BlankNode(self.fresh_anon())
        if kind in ("STRING", "STRING_LONG"):
            return self.literal()
        if kind == "INTEGER":
            self.advance()
            return Literal(tok.text, XSD_INTEGER)
        if kind == "DECIMAL":
            self.advance()
            return Literal(tok.text, XSD_DECIMAL)
        if kind == "DOUBLE":
            self.advance()
            return Literal(tok.text, XSD_DOUBLE)
        if kind == "NAME" and tok.text in ("true", "false"):
            self.advance()
            return Literal(tok.text, XSD_BOOLEAN)
        if self.is_punct("("):
            raise self.error(ErrorKind.LIST_TERM_OUTSIDE_SURFACE_SUBJECT, "list term outside a surface subject")
        if self.is_punct("{"):
            raise self.error(ErrorKind.GRAPH_TERM_OUTSIDE_SURFACE_OBJECT, "graph term outside a surface object")
        raise self.error(ErrorKind.SYNTAX_ERROR, f"unexpected {tok.text or 'end of input'!r}")

    def literal(self) -> Literal:
        tok = self.advance()
        raw = tok.text[3:-3] if tok.kind == "STRING_LONG" else tok.text[1:-1]
        try:
            lexical = _unescape_string(raw)
        except ValueError as e:
            raise self.error(ErrorKind.SYNTAX_ERROR, str(e), tok) from None
        if self.tok.kind == "LANGTAG" and self.tok.text not in ("@prefix", "@base"):
            lang = self.advance().text[1:]
            return Literal(lexical, RDF_LANGSTRING, lang)
        if self.tok.kind == "DTYPE":
            self.advance()
            if self.tok.kind not in ("IRIREF", "PNAME_LN", "PNAME_NS"):
                raise self.error(ErrorKind.SYNTAX_ERROR, "expected datatype IRI")
            dt = self.iri().value
            if dt == RDF_LANGSTRING:
                raise self.error(ErrorKind.SYNTAX_ERROR, "rdf:langString needs a language tag", tok)
            return Literal(lexical, dt)
        return Literal(lexical, XSD_STRING)


def parse_document(text: str, base: str | None = None, prefixes: dict[str, str] | None = None) -> Document:
    """Parse N3S text into a :class:`Document` (not yet existentially closed).

    ``prefixes`` pre-declares namespaces, as if the text were appended to a
    document that declared them.
    """
    return _Parser(text, prefixes, base).document()


def parse_items(text: str, prefixes: dict[str, str] | None = None, base: str | None = None) -> list[Item]:
    """Parse a fragment of N3S statements into surface items.

    Surface statements in the fragment are treated as nested (so query
    surfaces are rejected).
    """
    p = _Parser(text, prefixes, base)
    items = p.statements(top=False, in_query=False, closing=None)
    return items


def parse_term(text: str, prefixes: dict[str, str] | None = None, base: str | None = None) -> Term:
    p = _Parser(text, prefixes, base)
    term = p.term()
    if p.tok.kind != "EOF":
        raise p.error(ErrorKind.SYNTAX_ERROR, f"trailing input after term: {p.tok.text!r}")
    return term


def expand_iri(name: str, prefixes: dict[str, str], base: str | None = None) -> str:
    """Expand a prefixed name or ``<IRI>`` reference to an absolute IRI."""
    p = _Parser(name, prefixes, base)
    if p.tok.kind not in ("IRIREF", "PNAME_LN", "PNAME_NS"):
        raise p.error(ErrorKind.SYNTAX_ERROR, f"not an IRI: {name!r}")
    iri = p.iri()
    if p.tok.kind != "EOF":
        raise p.error(ErrorKind.SYNTAX_ERROR, f"trailing input: {p.tok.text!r}")
    return iri.value


# serialization

_SAFE_LOCAL = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*\Z")
_INTEGER = re.compile(r"[+-]?[0-9]+\Z")
_DECIMAL = re.compile(r"[+-]?[0-9]*\.[0-9]+\Z")


class TermWriter:
    """Render terms compactly against a prefix map."""

    def __init__(self, prefixes: dict[str, str] | None = None) -> None:
        self.prefixes = dict(prefixes or {})
        self._by_ns = sorted(self.prefixes.items(), key=lambda kv: -len(kv[1]))
        self.used: set[str] = set()

    def iri(self, value: str) -> str:
        for name, ns in self._by_ns:
            if value.startswith(ns):
                local = value[len(ns):]
                if local == "" or _SAFE_LOCAL.match(local):
                    self.used.add(name)
                    return f"{name}:{local}"
        return f"<{value}>"

    def term(self, t: Term) -> str:
        if isinstance(t, Iri):
            return self.iri(t.value)
        if isinstance(t, BlankNode):
            return f"_:{t.label}"
        if t.language:
            return str(t)
        if t.datatype == XSD_INTEGER and _INTEGER.match(t.lexical):
            return t.lexical
        if t.datatype == XSD_DECIMAL and _DECIMAL.match(t.lexical):
            return t.lexical
        if t.datatype == XSD_BOOLEAN and t.lexical in ("true", "false"):
            return t.lexical
        text = str(Literal(t.lexical))
        if t.datatype == XSD_STRING:
            return text
        return f"{text}^^{self.iri(t.datatype)}"

    def triple(self, t: Triple) -> str:
        pred = "a" if t.predicate.value == RDF_TYPE else self.iri(t.predicate.value)
        return f"{self.term(t.subject)} {pred} {self.term(t.object)} ."


def _surface_lines(writer: TermWriter, s: Surface, indent: int) -> list[str]:
    pad = "  " * indent
    graffiti = " ".join(f"_:{g}" for g in s.graffiti)
    head = f"( {graffiti} )" if graffiti else "()"
    pred = writer.iri(SURFACE_IRIS[s.kind])
    lines = [f"{pad}{head} {pred} {{"]
    for t in s.facts:
        lines.append(f"{pad}  {writer.triple(t)}")
    for child in s.children:
        lines.extend(_surface_lines(writer, child, indent + 1))
    lines.append(f"{pad}}} .")
    return lines


def serialize_items(items, prefixes: dict[str, str] | None = None, writer: TermWriter | None = None) -> str:
    writer = writer or TermWriter(prefixes)
    lines: list[str] = []
    for item in items:
        if isinstance(item, Triple):
            lines.append(writer.triple(item))
        else:
            lines.extend(_surface_lines(writer, item, 0))
    return "\n".join(lines)


def serialize_document(doc: Document) -> str:
    """Canonical N3S text for ``doc``; root graffiti are left implicit."""
    writer = TermWriter(doc.prefix_map)
    body: list[str] = []
    facts = doc.root.facts
    for t in facts:
        body.append(writer.triple(t))
    for child in doc.root.children:
        if body:
            body.append("")
        body.extend(_surface_lines(writer, child, 0))
    head = []
    if doc.base:
        head.append(f"@base <{doc.base}> .")
    head.extend(f"@prefix {p}: <{ns}> ." for p, ns in doc.prefixes)
    if head and body:
        head.append("")
    lines = head + body
    return "\n".join(lines) + "\n" if lines else ""


def serialize_turtle(triples, prefixes: dict[str, str]) -> str:
    """Plain Turtle for a list of triples, declaring only the prefixes used."""
    writer = TermWriter(prefixes)
    body = [writer.triple(t) for t in triples]
    head = [f"@prefix {p}: <{ns}> ." for p, ns in prefixes.items() if p in writer.used]
    if head and body:
        head.append("")
    lines = head + body
    return "\n".join(lines) + "\n" if lines else ""


__all__ = [
    "ErrorKind",
    "ParseError",
    "SourceSpan",
    "TermWriter",
    "expand_iri",
    "parse_document",
    "parse_items",
    "parse_term",
    "serialize_document",
    "serialize_items",
    "serialize_turtle",
    "LOG",
]
