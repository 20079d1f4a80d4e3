"""Turtle-subset and N-Triples parsing and serialization.

Supported Turtle subset: @prefix directives, prefixed names, absolute
IRIs in angle brackets, the ``a`` keyword, object lists (commas),
predicate lists (semicolons), string / numeric / typed literals, and
``#`` comments. N-Triples documents are a strict subset of this grammar
and parse with the same entry point.

Not supported (the event data model uses none of these): blank-node
property lists, collections, relative IRI resolution, language tags.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .model import (
    DT_DATETIME,
    DT_DECIMAL,
    DT_INTEGER,
    DT_PLAIN,
    Graph,
    Term,
    Triple,
    iri,
    literal,
    parse_datetime,
)
from .namespaces import BUILTIN_PREFIXES, RDF_TYPE, XSD


class TurtleSyntaxError(ValueError):
    """Malformed input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownPrefixError(TurtleSyntaxError):
    def __init__(self, prefix: str, line: int, column: int) -> None:
        super().__init__(f"unknown prefix '{prefix}:'", line, column)
        self.prefix = prefix


# Datatype IRIs the dialect accepts on typed literals.
_DATATYPE_TAGS = {
    XSD + "dateTime": DT_DATETIME,
    XSD + "integer": DT_INTEGER,
    XSD + "decimal": DT_DECIMAL,
    XSD + "string": DT_PLAIN,
}
_TAG_DATATYPES = {
    DT_DATETIME: XSD + "dateTime",
    DT_INTEGER: XSD + "integer",
    DT_DECIMAL: XSD + "decimal",
}

# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # IRIREF PNAME A PREFIX STRING INTEGER DECIMAL DOT SEMI COMMA HATHAT EOF
    value: object
    line: int
    column: int


_PNAME_RE = re.compile(r"([A-Za-z][A-Za-z0-9_-]*)?:([A-Za-z0-9_][A-Za-z0-9_.-]*)?")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.\d+|\d+)")
_ESCAPES = {"t": "\t", "n": "\n", "r": "\r", '"': '"', "\\": "\\"}


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)

    def err(msg: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(msg, line, col)

    while i < n:
        c = text[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if c == "<":
            end = text.find(">", i + 1)
            if end < 0:
                raise err("unterminated IRI")
            value = text[i + 1 : end]
            if "://" not in value and not value.startswith("urn:"):
                raise TurtleSyntaxError(
                    f"IRI is not absolute: <{value}>", start_line, start_col
                )
            tokens.append(_Token("IRIREF", value, start_line, start_col))
            col += end + 1 - i
            i = end + 1
            continue
        if c == '"':
            chars: list[str] = []
            j = i + 1
            while True:
                if j >= n or text[j] == "\n":
                    raise TurtleSyntaxError("unterminated string", start_line, start_col)
                ch = text[j]
                if ch == '"':
                    break
                if ch == "\\":
                    if j + 1 >= n:
                        raise TurtleSyntaxError("dangling escape", start_line, start_col)
                    esc = text[j + 1]
                    if esc == "u":
                        if j + 6 > n:
                            raise TurtleSyntaxError("bad \\u escape", start_line, start_col)
                        chars.append(chr(int(text[j + 2 : j + 6], 16)))
                        j += 6
                        continue
                    if esc not in _ESCAPES:
                        raise TurtleSyntaxError(
                            f"unsupported escape '\\{esc}'", start_line, start_col
                        )
                    chars.append(_ESCAPES[esc])
                    j += 2
                    continue
                chars.append(ch)
                j += 1
            tokens.append(_Token("STRING", "".join(chars), start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if c == "^":
            if text[i : i + 2] != "^^":
                raise err("expected '^^'")
            tokens.append(_Token("HATHAT", "^^", start_line, start_col))
            i += 2
            col += 2
            continue
        if c == ".":
            # A dot is a statement terminator unless it is part of a number.
            tokens.append(_Token("DOT", ".", start_line, start_col))
            i += 1
            col += 1
            continue
        if c == ";":
            tokens.append(_Token("SEMI", ";", start_line, start_col))
            i += 1
            col += 1
            continue
        if c == ",":
            tokens.append(_Token("COMMA", ",", start_line, start_col))
            i += 1
            col += 1
            continue
        if c == "@":
            if text.startswith("@prefix", i):
                tokens.append(_Token("PREFIX", "@prefix", start_line, start_col))
                i += 7
                col += 7
                continue
            raise err("unknown directive (only @prefix is supported)")
        if c.isdigit() or (c in "+-" and i + 1 < n and text[i + 1].isdigit()):
            m = _NUMBER_RE.match(text, i)
            assert m is not None
            value = m.group(0)
            kind = "DECIMAL" if "." in value else "INTEGER"
            tokens.append(_Token(kind, value, start_line, start_col))
            col += m.end() - i
            i = m.end()
            continue
        m = _PNAME_RE.match(text, i)
        if m is not None:
            prefix = m.group(1) or ""
            local = m.group(2) or ""
            # PN_LOCAL must not end with '.', leave it for the statement dot.
            while local.endswith("."):
                local = local[:-1]
            end = i + len(prefix) + 1 + len(local)
            tokens.append(_Token("PNAME", (prefix, local), start_line, start_col))
            col += end - i
            i = end
            continue
        if c == "a" and (i + 1 >= n or not (text[i + 1].isalnum() or text[i + 1] in "_:-")):
            tokens.append(_Token("A", "a", start_line, start_col))
            i += 1
            col += 1
            continue
        if c.isalpha():
            # Bare word that is not 'a' and not a prefixed name.
            word = re.match(r"[A-Za-z0-9_-]+", text[i:]).group(0)
            if word == "a":
                tokens.append(_Token("A", "a", start_line, start_col))
                i += 1
                col += 1
                continue
            raise err(f"unexpected token '{word}'")
        raise err(f"unexpected character {c!r}")
    tokens.append(_Token("EOF", None, line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.pos = 0
        self.prefixes = dict(BUILTIN_PREFIXES)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise TurtleSyntaxError(
                f"expected {kind}, found {tok.kind}", tok.line, tok.column
            )
        return tok

    def parse(self) -> Graph:
        graph = Graph()
        while self.peek().kind != "EOF":
            if self.peek().kind == "PREFIX":
                self.parse_prefix()
            else:
                self.parse_statement(graph)
        return graph

    def parse_prefix(self) -> None:
        self.expect("PREFIX")
        tok = self.expect("PNAME")
        prefix, local = tok.value
        if local:
            raise TurtleSyntaxError(
                "prefix declaration must end with ':'", tok.line, tok.column
            )
        ns = self.expect("IRIREF").value
        self.expect("DOT")
        self.prefixes[prefix] = ns

    def resolve(self, tok: _Token) -> Term:
        if tok.kind == "IRIREF":
            return iri(tok.value)
        prefix, local = tok.value
        ns = self.prefixes.get(prefix)
        if ns is None:
            raise UnknownPrefixError(prefix, tok.line, tok.column)
        return iri(ns + local)

    def parse_statement(self, graph: Graph) -> None:
        tok = self.next()
        if tok.kind not in ("IRIREF", "PNAME"):
            raise TurtleSyntaxError(
                f"expected subject IRI, found {tok.kind}", tok.line, tok.column
            )
        subject = self.resolve(tok)
        while True:
            predicate = self.parse_verb()
            while True:
                obj = self.parse_object()
                graph.add(Triple(subject, predicate, obj))
                if self.peek().kind == "COMMA":
                    self.next()
                    continue
                break
            tok = self.next()
            if tok.kind == "SEMI":
                if self.peek().kind == "DOT":  # trailing semicolon
                    self.next()
                    return
                continue
            if tok.kind == "DOT":
                return
            raise TurtleSyntaxError(
                f"expected ';' or '.', found {tok.kind}", tok.line, tok.column
            )

    def parse_verb(self) -> Term:
        tok = self.next()
        if tok.kind == "A":
            return iri(RDF_TYPE)
        if tok.kind in ("IRIREF", "PNAME"):
            return self.resolve(tok)
        raise TurtleSyntaxError(
            f"expected predicate, found {tok.kind}", tok.line, tok.column
        )

    def parse_object(self) -> Term:
        tok = self.next()
        if tok.kind in ("IRIREF", "PNAME"):
            return self.resolve(tok)
        if tok.kind == "INTEGER":
            return literal(tok.value, DT_INTEGER)
        if tok.kind == "DECIMAL":
            return literal(tok.value, DT_DECIMAL)
        if tok.kind == "STRING":
            if self.peek().kind == "HATHAT":
                self.next()
                dt_tok = self.next()
                if dt_tok.kind not in ("IRIREF", "PNAME"):
                    raise TurtleSyntaxError(
                        "expected datatype IRI after '^^'", dt_tok.line, dt_tok.column
                    )
                dt_iri = self.resolve(dt_tok).value
                tag = _DATATYPE_TAGS.get(dt_iri)
                if tag is None:
                    raise TurtleSyntaxError(
                        f"unsupported literal datatype <{dt_iri}>",
                        dt_tok.line,
                        dt_tok.column,
                    )
                return self._typed_literal(tok, tag)
            return literal(tok.value, DT_PLAIN)
        raise TurtleSyntaxError(
            f"expected object, found {tok.kind}", tok.line, tok.column
        )

    @staticmethod
    def _typed_literal(tok: _Token, tag: str) -> Term:
        value = tok.value
        if tag == DT_DATETIME:
            try:
                parse_datetime(value)
            except ValueError:
                raise TurtleSyntaxError(
                    f"invalid dateTime literal {value!r}", tok.line, tok.column
                ) from None
        elif tag == DT_INTEGER:
            if not re.fullmatch(r"[+-]?\d+", value):
                raise TurtleSyntaxError(
                    f"invalid integer literal {value!r}", tok.line, tok.column
                )
        elif tag == DT_DECIMAL:
            if not re.fullmatch(r"[+-]?(\d+\.\d*|\.?\d+)", value):
                raise TurtleSyntaxError(
                    f"invalid decimal literal {value!r}", tok.line, tok.column
                )
        return literal(value, tag)


def parse_turtle(text: str) -> Graph:
    """Parse a Turtle-subset (or N-Triples) document into a Graph."""
    return _Parser(text).parse()


parse_ntriples = parse_turtle  # N-Triples is a strict subset of the dialect


# ---------------------------------------------------------------------------
# Serializer

_SAFE_LOCAL_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_-]*")

# Longest namespaces first so id: wins over plod: for instance IRIs.
_CONTRACTIONS = sorted(BUILTIN_PREFIXES.items(), key=lambda kv: -len(kv[1]))


def _contract(value: str) -> str | None:
    for prefix, ns in _CONTRACTIONS:
        if value.startswith(ns):
            local = value[len(ns) :]
            if local and _SAFE_LOCAL_RE.fullmatch(local):
                return f"{prefix}:{local}"
    return None


def _escape(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    return out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")


def _term_turtle(term: Term) -> str:
    if term.is_iri():
        if term.value == RDF_TYPE:
            return "a"
        contracted = _contract(term.value)
        return contracted if contracted else f"<{term.value}>"
    if term.datatype == DT_PLAIN:
        return f'"{_escape(term.value)}"'
    if term.datatype in (DT_INTEGER, DT_DECIMAL):
        return term.value
    return f'"{_escape(term.value)}"^^xsd:{term.datatype}'


def serialize_turtle(graph: Graph) -> str:
    """Serialize grouping by subject; output is a pure function of the triple set."""
    lines = [
        f"@prefix {prefix}: <{ns}> ."
        for prefix, ns in sorted(BUILTIN_PREFIXES.items())
    ]
    lines.append("")
    by_subject: dict[Term, list[Triple]] = {}
    for t in graph:
        by_subject.setdefault(t.s, []).append(t)
    for subject in sorted(by_subject, key=Term.sort_key):
        triples = by_subject[subject]
        # rdf:type first (conventional Turtle), then predicates lexicographically.
        by_pred: dict[Term, list[Term]] = {}
        for t in triples:
            by_pred.setdefault(t.p, []).append(t.o)
        preds = sorted(
            by_pred, key=lambda p: (0 if p.value == RDF_TYPE else 1, p.sort_key())
        )
        subj_txt = _term_turtle(subject)
        parts = []
        for p in preds:
            objs = ", ".join(_term_turtle(o) for o in sorted(by_pred[p], key=Term.sort_key))
            parts.append(f"{_term_turtle(p)} {objs}")
        if len(parts) == 1:
            lines.append(f"{subj_txt} {parts[0]} .")
        else:
            lines.append(f"{subj_txt} " + " ;\n    ".join(parts) + " .")
    return "\n".join(lines) + "\n"


def _term_ntriples(term: Term) -> str:
    if term.is_iri():
        return f"<{term.value}>"
    if term.datatype == DT_PLAIN:
        return f'"{_escape(term.value)}"'
    return f'"{_escape(term.value)}"^^<{_TAG_DATATYPES[term.datatype]}>'


def serialize_ntriples(graph: Graph) -> str:
    lines = [
        f"{_term_ntriples(t.s)} {_term_ntriples(t.p)} {_term_ntriples(t.o)} ."
        for t in graph.sorted_triples()
    ]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# File helpers


def load_graph(path: str | Path) -> Graph:
    """Load a .ttl or .nt file (UTF-8)."""
    return parse_turtle(Path(path).read_text(encoding="utf-8"))


def save_graph(graph: Graph, path: str | Path) -> None:
    """Write Turtle (default) or N-Triples when the suffix is .nt."""
    path = Path(path)
    text = serialize_ntriples(graph) if path.suffix == ".nt" else serialize_turtle(graph)
    path.write_text(text, encoding="utf-8")


def merge(target: Graph, sources: Iterable[Graph]) -> Graph:
    for g in sources:
        target.add_all(g)
    return target
