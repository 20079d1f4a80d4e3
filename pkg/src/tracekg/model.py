"""RDF terms, triples, and the indexed in-memory graph.

Every other module reads and writes through ``Graph``. The store keeps
set semantics (duplicate inserts are no-ops) and maintains subject,
predicate, object, and (subject, predicate) indexes so pattern matching
never scans the full triple set.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from datetime import datetime
from typing import Iterable, Iterator, Optional

IRI = "iri"
LITERAL = "literal"

# Literal datatype tags. Everything else in the supported dialect is a
# plain string literal.
DT_DATETIME = "dateTime"
DT_INTEGER = "integer"
DT_DECIMAL = "decimal"
DT_PLAIN = "plain"


@dataclass(frozen=True, slots=True)
class Term:
    """An RDF term: an absolute IRI or a (possibly typed) literal."""

    kind: str
    value: str
    datatype: str = DT_PLAIN

    def is_iri(self) -> bool:
        return self.kind == IRI

    def is_literal(self) -> bool:
        return self.kind == LITERAL

    def sort_key(self) -> tuple:
        # IRIs order before literals; within a kind, lexicographic.
        return (0 if self.kind == IRI else 1, self.value, self.datatype)

    def as_datetime(self) -> datetime:
        if self.kind != LITERAL or self.datatype != DT_DATETIME:
            raise ValueError(f"not a dateTime literal: {self!r}")
        return parse_datetime(self.value)

    def as_number(self) -> float:
        if self.kind != LITERAL or self.datatype not in (DT_INTEGER, DT_DECIMAL):
            raise ValueError(f"not a numeric literal: {self!r}")
        return float(self.value)

    def __repr__(self) -> str:  # compact; used in diagnostics
        if self.kind == IRI:
            return f"<{self.value}>"
        if self.datatype == DT_PLAIN:
            return f'"{self.value}"'
        return f'"{self.value}"^^{self.datatype}'


def iri(value: str) -> Term:
    return Term(IRI, value)


def literal(value: str, datatype: str = DT_PLAIN) -> Term:
    return Term(LITERAL, value, datatype)


def dt_literal(value: datetime | str) -> Term:
    if isinstance(value, datetime):
        value = value.isoformat()
    return Term(LITERAL, value, DT_DATETIME)


def int_literal(value: int) -> Term:
    return Term(LITERAL, str(int(value)), DT_INTEGER)


def parse_datetime(text: str) -> datetime:
    """Parse an ISO-8601 combined date-time ('Z' suffix accepted)."""
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    return datetime.fromisoformat(text)


@dataclass(frozen=True, slots=True)
class Triple:
    """(subject, predicate, object); subject and predicate are IRIs."""

    s: Term
    p: Term
    o: Term

    def __post_init__(self) -> None:
        if not self.s.is_iri():
            raise ValueError(f"triple subject must be an IRI: {self.s!r}")
        if not self.p.is_iri():
            raise ValueError(f"triple predicate must be an IRI: {self.p!r}")

    def sort_key(self) -> tuple:
        return (self.s.sort_key(), self.p.sort_key(), self.o.sort_key())


def spo(s: str, p: str, o: Term | str) -> Triple:
    """Convenience constructor: subject/predicate IRI strings, object Term or IRI string."""
    obj = o if isinstance(o, Term) else iri(o)
    return Triple(iri(s), iri(p), obj)


class Graph:
    """A set of triples with subject/predicate/object/(s,p) indexes.

    Writes are not thread safe; the service layer serializes writers and
    hands immutable snapshots (copies) to the reasoner and queries.
    """

    def __init__(self, triples: Optional[Iterable[Triple]] = None) -> None:
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = defaultdict(set)
        self._by_p: dict[Term, set[Triple]] = defaultdict(set)
        self._by_o: dict[Term, set[Triple]] = defaultdict(set)
        self._by_sp: dict[tuple[Term, Term], set[Triple]] = defaultdict(set)
        if triples:
            self.add_all(triples)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def add(self, t: Triple) -> bool:
        """Insert a triple; returns False if it was already present."""
        if t in self._triples:
            return False
        self._triples.add(t)
        self._by_s[t.s].add(t)
        self._by_p[t.p].add(t)
        self._by_o[t.o].add(t)
        self._by_sp[(t.s, t.p)].add(t)
        return True

    def add_all(self, triples: Iterable[Triple]) -> int:
        return sum(1 for t in triples if self.add(t))

    def discard(self, t: Triple) -> bool:
        if t not in self._triples:
            return False
        self._triples.discard(t)
        self._by_s[t.s].discard(t)
        self._by_p[t.p].discard(t)
        self._by_o[t.o].discard(t)
        self._by_sp[(t.s, t.p)].discard(t)
        return True

    def copy(self) -> "Graph":
        return Graph(self._triples)

    def match(
        self,
        s: Optional[Term] = None,
        p: Optional[Term] = None,
        o: Optional[Term] = None,
    ) -> list[Triple]:
        """All triples agreeing with every bound position, in (s, p, o) lexicographic order."""
        return sorted(self.match_iter(s, p, o), key=Triple.sort_key)

    def match_iter(
        self,
        s: Optional[Term] = None,
        p: Optional[Term] = None,
        o: Optional[Term] = None,
    ) -> Iterable[Triple]:
        """Unordered match; use when the caller sorts or aggregates anyway."""
        if s is not None and p is not None:
            candidates = self._by_sp.get((s, p), ())
            if o is None:
                return candidates
            return (t for t in candidates if t.o == o)
        if s is not None:
            candidates = self._by_s.get(s, ())
        elif p is not None:
            candidates = self._by_p.get(p, ())
        elif o is not None:
            candidates = self._by_o.get(o, ())
        else:
            return self._triples
        return (
            t
            for t in candidates
            if (p is None or t.p == p) and (o is None or t.o == o)
        )

    def objects(self, s: Term, p: Term) -> list[Term]:
        """Objects of (s, p, *) in deterministic order."""
        return sorted((t.o for t in self._by_sp.get((s, p), ())), key=Term.sort_key)

    def object(self, s: Term, p: Term) -> Optional[Term]:
        """First object of (s, p, *) in deterministic order, or None."""
        objs = self.objects(s, p)
        return objs[0] if objs else None

    def subjects(self, p: Term, o: Term) -> list[Term]:
        """Subjects of (*, p, o) in deterministic order."""
        found = {t.s for t in self._by_o.get(o, ()) if t.p == p}
        return sorted(found, key=Term.sort_key)

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)
