"""Contact-tracing queries: spatiotemporal intersections, co-attendee
ranking, and neighborhood expansion.

All queries are read-only over a snapshot (asserted graph plus the
optional inference layer) and return deterministically ordered results.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Optional

from . import namespaces as ns
from .model import Graph, Term, iri
from .reasoner import ClassificationResult, LOW, level_max
from .temporal import MODE_RELIABLE, TimeSpan, intervals_overlap
from .views import GraphViews, extract_views
from .vocabulary import Diagnostic, Vocabulary, expand_curie


class UnknownEntityError(KeyError):
    def __init__(self, entity: str) -> None:
        super().__init__(entity)
        self.entity = entity


@dataclass(frozen=True)
class IntersectionResult:
    """One ordered pair of events meeting in time and space (both orderings are reported)."""

    event1: str
    place1: str
    city1: Optional[str]
    event2: str
    place2: str
    city2: Optional[str]

    def as_dict(self) -> dict:
        return {
            "event1": self.event1,
            "place1": self.place1,
            "city1": self.city1 or "",
            "event2": self.event2,
            "place2": self.place2,
            "city2": self.city2 or "",
        }


@dataclass(frozen=True)
class CoAttendeeRow:
    agent: str
    cnt: int

    def as_dict(self) -> dict:
        return {"agent": self.agent, "cnt": self.cnt}


@dataclass(frozen=True)
class NeighborhoodNode:
    id: str
    kind: str  # "iri" | "literal"
    type_label: str
    badge: Optional[str] = None  # strongest risk level, when classified

    def as_dict(self) -> dict:
        return {"id": self.id, "kind": self.kind, "type": self.type_label, "badge": self.badge}


@dataclass(frozen=True)
class NeighborhoodEdge:
    source: str
    predicate: str
    target: str

    def as_dict(self) -> dict:
        return {"source": self.source, "predicate": self.predicate, "target": self.target}


@dataclass
class Neighborhood:
    center: str
    nodes: list[NeighborhoodNode] = field(default_factory=list)
    edges: list[NeighborhoodEdge] = field(default_factory=list)

    def node_ids(self) -> set[str]:
        return {n.id for n in self.nodes}

    def as_dict(self) -> dict:
        return {
            "center": self.center,
            "nodes": [n.as_dict() for n in self.nodes],
            "edges": [e.as_dict() for e in self.edges],
        }


@dataclass
class QueryScope:
    """Optional restriction of intersection search."""

    place: Optional[str] = None
    city: Optional[str] = None
    begin: Optional[datetime] = None
    end: Optional[datetime] = None


def _node_key(term: Term) -> str:
    return term.value if term.is_iri() else repr(term)


class QueryEngine:
    def __init__(
        self,
        graph: Graph,
        vocab: Vocabulary,
        classification: Optional[ClassificationResult] = None,
        views: Optional[GraphViews] = None,
    ) -> None:
        self.graph = graph
        self.vocab = vocab
        self.classification = classification
        self.views = views if views is not None else extract_views(graph, vocab)
        self.diagnostics: list[Diagnostic] = []
        self._containment: Optional[dict[str, set[str]]] = None
        self._ancestor_cache: dict[str, frozenset[str]] = {}

    @property
    def inferred(self) -> Graph:
        return self.classification.inferred if self.classification else Graph()

    # -- place containment ---------------------------------------------------

    def _containment_edges(self) -> dict[str, set[str]]:
        """child place -> direct enclosing places, from schema:location links."""
        if self._containment is not None:
            return self._containment
        event_ids = set(self.views.events)
        edges: dict[str, set[str]] = {}
        for t in self.graph.match_iter(None, iri(ns.P_LOCATION), None):
            if t.s.value in event_ids or not t.o.is_iri():
                continue
            edges.setdefault(t.s.value, set()).add(t.o.value)
        self._containment = edges
        return edges

    def place_ancestors(self, place: str) -> frozenset[str]:
        """Reflexive-transitive containment closure (the place and everything enclosing it)."""
        cached = self._ancestor_cache.get(place)
        if cached is not None:
            return cached
        edges = self._containment_edges()
        seen: set[str] = set()
        stack = [place]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(edges.get(cur, ()))
        result = frozenset(seen)
        self._ancestor_cache[place] = result
        return result

    def co_located(self, p1: str, p2: str) -> bool:
        return p1 == p2 or p1 in self.place_ancestors(p2) or p2 in self.place_ancestors(p1)

    def city_of(self, place: str) -> Optional[str]:
        obj = self.graph.object(iri(place), iri(ns.P_CITY))
        return obj.value if obj is not None and obj.is_literal() else None

    # -- intersections ---------------------------------------------------------

    def find_intersections(
        self, scope: Optional[QueryScope] = None, mode: str = MODE_RELIABLE
    ) -> list[IntersectionResult]:
        """All ordered pairs of distinct events overlapping in time at
        co-located places (equal, or linked by transitive containment).

        Implemented as a forward-scan plane sweep inside containment
        components, so runtime tracks the number of genuine overlaps
        instead of the full quadratic join.
        """
        records = self._event_records(scope, mode)
        groups = self._group_by_component(records)
        pairs: list[IntersectionResult] = []
        for group in groups.values():
            group.sort(key=lambda r: (r[2], r[0]))  # by begin, then id
            for i, (id1, place1, begin1, end1) in enumerate(group):
                for id2, place2, begin2, end2 in group[i + 1 :]:
                    if begin2 >= end1:
                        break  # sweep frontier passed this event
                    if begin1 >= end2:
                        continue
                    if not self.co_located(place1, place2):
                        continue
                    city1, city2 = self.city_of(place1), self.city_of(place2)
                    pairs.append(IntersectionResult(id1, place1, city1, id2, place2, city2))
                    pairs.append(IntersectionResult(id2, place2, city2, id1, place1, city1))
        pairs.sort(key=lambda r: (r.event1, r.event2))
        return pairs

    def _event_records(self, scope: Optional[QueryScope], mode: str):
        window = None
        if scope and (scope.begin or scope.end):
            window = TimeSpan(
                begin=scope.begin or datetime.min, end=scope.end or datetime.max
            )
        records = []
        for event in self.views.events.values():
            if event.location is None or not event.time.has_bounds(mode):
                continue
            if scope and scope.place:
                if scope.place not in self.place_ancestors(event.location):
                    continue
            if scope and scope.city:
                if self.city_of(event.location) != scope.city:
                    continue
            if window is not None and not intervals_overlap(event.time, window, mode):
                continue
            begin, end = event.time.bound(mode)
            records.append((event.id, event.location, begin, end))
        return records

    def _group_by_component(self, records):
        """Partition events by connected component of the containment graph.

        Co-located events always share a component, so the sweep only
        compares events that could possibly pair.
        """
        edges = self._containment_edges()
        undirected: dict[str, set[str]] = {}
        for child, parents in edges.items():
            for parent in parents:
                undirected.setdefault(child, set()).add(parent)
                undirected.setdefault(parent, set()).add(child)
        component: dict[str, str] = {}

        def root_of(place: str) -> str:
            if place in component:
                return component[place]
            seen = {place}
            stack = [place]
            while stack:
                cur = stack.pop()
                for neighbor in undirected.get(cur, ()):
                    if neighbor not in seen:
                        seen.add(neighbor)
                        stack.append(neighbor)
            label = min(seen)
            for member in seen:
                component[member] = label
            return label

        groups: dict[str, list] = {}
        for record in records:
            groups.setdefault(root_of(record[1]), []).append(record)
        return groups

    # -- co-attendees -----------------------------------------------------------

    def _entity_types(self, entity: str) -> set[str]:
        rdf_type = iri(ns.RDF_TYPE)
        types = {o.value for o in self.graph.objects(iri(entity), rdf_type) if o.is_iri()}
        types.update(o.value for o in self.inferred.objects(iri(entity), rdf_type) if o.is_iri())
        return types

    def is_inferred_instance(self, entity: str, risk_class: str) -> bool:
        """Instance check by subsumption over asserted plus inferred types."""
        for t in self._entity_types(entity):
            if t in self.vocab.classes and self.vocab.is_subclass_of(t, risk_class):
                return True
        return False

    def co_attendees(self, person: str, risk_class: str) -> list[CoAttendeeRow]:
        """People sharing events with ``person`` at places whose situation
        carries the given risk class, ranked by distinct shared events.
        The queried person never appears in their own ranking.
        """
        risk_class = expand_curie(risk_class)
        if risk_class not in self.vocab.classes:
            raise UnknownEntityError(risk_class)
        known = any(person in e.agents for e in self.views.events.values())
        if not known:
            self.diagnostics.append(
                Diagnostic("unknown-person", person, "person appears in no event")
            )
            return []
        qualifying_place: dict[str, bool] = {}

        def place_qualifies(place: Optional[str]) -> bool:
            if place is None:
                return False
            if place not in qualifying_place:
                qualifying_place[place] = any(
                    self.is_inferred_instance(s.id, risk_class)
                    for s in self.views.situations_by_place.get(place, ())
                )
            return qualifying_place[place]

        counts: dict[str, set[str]] = {}
        for event in self.views.events.values():
            if person not in event.agents or not place_qualifies(event.location):
                continue
            for agent in event.agents:
                if agent != person:
                    counts.setdefault(agent, set()).add(event.id)
        rows = [CoAttendeeRow(agent, len(events)) for agent, events in counts.items()]
        rows.sort(key=lambda r: (-r.cnt, r.agent))
        return rows

    # -- neighborhood ---------------------------------------------------------

    def _badge(self, entity: str) -> Optional[str]:
        if self.classification is None:
            return None
        assignment = self.classification.assignments.get(entity)
        if assignment is None:
            return None
        badge = LOW
        for level in (assignment.closeness, assignment.crowdedness, assignment.enclosedness):
            badge = level_max(badge, level)
        return badge

    def _type_label(self, term: Term) -> str:
        if term.is_literal():
            return "literal"
        risk_classes = self.vocab.classes_of_kind("risk")
        asserted = [
            o.value
            for o in self.graph.objects(term, iri(ns.RDF_TYPE))
            if o.is_iri() and o.value not in risk_classes
        ]
        if asserted:
            return asserted[0].rsplit("/", 1)[-1].rsplit("#", 1)[-1]
        registered = self.vocab.individual_class(term.value)
        if registered:
            return registered.rsplit("/", 1)[-1]
        return "resource"

    def _known_node(self, term: Term) -> bool:
        for g in (self.graph, self.inferred):
            if next(iter(g.match_iter(term, None, None)), None) is not None:
                return True
            if next(iter(g.match_iter(None, None, term)), None) is not None:
                return True
        return False

    def neighborhood(self, center: str, depth: int, fanout_limit: int = 50) -> Neighborhood:
        """Breadth-first expansion over asserted plus inferred triples,
        following edges in both directions, truncating each node's
        frontier at ``fanout_limit`` in deterministic order.
        """
        if depth < 0:
            raise ValueError("depth must be >= 0")
        center_term = iri(center)
        if not self._known_node(center_term):
            raise UnknownEntityError(center)
        result = Neighborhood(center=center)
        seen: dict[str, Term] = {center: center_term}
        edges_seen: set[tuple[str, str, str]] = set()
        frontier = [center_term]
        for _ in range(depth):
            next_frontier: list[Term] = []
            for node in frontier:
                if node.is_literal():
                    continue
                incident = []
                for g in (self.graph, self.inferred):
                    incident.extend(g.match(node, None, None))
                    incident.extend(
                        t for t in g.match(None, None, node) if t.s != node
                    )
                incident.sort(key=lambda t: t.sort_key())
                taken = 0
                for t in incident:
                    if taken >= fanout_limit:
                        break
                    other = t.o if t.s == node else t.s
                    key = (_node_key(t.s), t.p.value, _node_key(t.o))
                    if key in edges_seen:
                        continue
                    edges_seen.add(key)
                    taken += 1
                    other_key = _node_key(other)
                    if other_key not in seen:
                        seen[other_key] = other
                        next_frontier.append(other)
            frontier = next_frontier
        for key in sorted(seen):
            term = seen[key]
            result.nodes.append(
                NeighborhoodNode(
                    id=key,
                    kind="iri" if term.is_iri() else "literal",
                    type_label=self._type_label(term),
                    badge=self._badge(key) if term.is_iri() else None,
                )
            )
        result.edges = [NeighborhoodEdge(*key) for key in sorted(edges_seen)]
        return result


def intersections_csv(rows: Iterable[IntersectionResult]) -> str:
    lines = ["event1,place1,city1,event2,place2,city2"]
    for r in rows:
        d = r.as_dict()
        lines.append(
            f"{d['event1']},{d['place1']},{d['city1']},{d['event2']},{d['place2']},{d['city2']}"
        )
    return "\n".join(lines) + "\n"


def co_attendees_csv(rows: Iterable[CoAttendeeRow]) -> str:
    lines = ["agent,cnt"]
    for r in rows:
        lines.append(f"{r.agent},{r.cnt}")
    return "\n".join(lines) + "\n"
