"""Shared operational core for the CLI and the HTTP API.

The store follows a single-writer / multi-reader contract: every write
builds a fresh graph and swaps it in atomically, so readers always hold
a complete snapshot and never observe a partial import. Reasoning is
explicit: the inference layer is dropped and rebuilt on each reason()
call, never on write.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Optional

from . import namespaces as ns
from .model import Graph, dt_literal, int_literal, literal, parse_datetime, spo
from .queries import QueryEngine
from .reasoner import ClassificationResult, classify_all
from .temporal import MODE_POSSIBLE, MODE_RELIABLE
from .turtle import parse_turtle
from .vocabulary import Vocabulary, default_vocabulary, expand_curie


@dataclass
class ApiError(Exception):
    code: str
    message: str
    detail: Optional[Any] = None
    status: int = 400

    def as_dict(self) -> dict:
        body = {"code": self.code, "message": self.message}
        if self.detail is not None:
            body["detail"] = self.detail
        return body


def resolve_instance(name: str) -> str:
    """Bare names land in the instance namespace; CURIEs and IRIs pass through."""
    if "://" in name:
        return name
    if ":" in name:
        return expand_curie(name)
    return ns.plod_id(name)


class TraceStore:
    def __init__(self, vocab: Optional[Vocabulary] = None) -> None:
        self._lock = threading.RLock()
        self._graph = Graph()
        self._vocab = vocab or default_vocabulary()
        self._classification: Optional[ClassificationResult] = None
        self._event_counter = 0

    # -- snapshots -----------------------------------------------------------

    @property
    def vocab(self) -> Vocabulary:
        return self._vocab

    def snapshot(self) -> tuple[Graph, Optional[ClassificationResult]]:
        with self._lock:
            return self._graph, self._classification

    def graph_size(self) -> int:
        return len(self._graph)

    def query_engine(self) -> QueryEngine:
        graph, classification = self.snapshot()
        return QueryEngine(graph, self._vocab, classification)

    # -- writes --------------------------------------------------------------

    def replace_graph(self, graph: Graph) -> None:
        with self._lock:
            self._graph = graph
            self._classification = None

    def import_text(self, text: str) -> int:
        """Parse and merge a Turtle document; returns the triples added."""
        incoming = parse_turtle(text)
        with self._lock:
            updated = self._graph.copy()
            added = updated.add_all(incoming)
            self._graph = updated
        return added

    def add_event(self, doc: dict) -> str:
        """Create one event (and optionally its place typing) from a
        structured document whose fields mirror the event view.
        """
        if not isinstance(doc, dict):
            raise ApiError("invalid-event", "event document must be an object")
        location = doc.get("location")
        if not location:
            raise ApiError("invalid-event", "event needs a location")
        with self._lock:
            updated = self._graph.copy()
            event_id = self._emit_event(updated, doc)
            self._graph = updated
        return event_id

    def _emit_event(self, graph: Graph, doc: dict) -> str:
        self._event_counter += 1
        event = resolve_instance(doc.get("id") or f"event_api_{self._event_counter}")
        place = resolve_instance(doc["location"])
        graph.add(spo(event, ns.RDF_TYPE, ns.C_EVENT))
        graph.add(spo(event, ns.P_LOCATION, place))
        if doc.get("location_type"):
            graph.add(spo(place, ns.RDF_TYPE, expand_curie(doc["location_type"])))
        if doc.get("location_city"):
            graph.add(spo(place, ns.P_CITY, literal(str(doc["location_city"]))))
        for agent in doc.get("agents") or []:
            graph.add(spo(event, ns.P_AGENT, resolve_instance(agent)))
        for action in doc.get("actions") or []:
            graph.add(spo(event, ns.P_ACTION, expand_curie(action)))
        for ctx in doc.get("contexts") or []:
            graph.add(spo(event, ns.P_CONTEXT, expand_curie(ctx)))
        if doc.get("following_event"):
            graph.add(spo(event, ns.P_FOLLOWING_EVENT, resolve_instance(doc["following_event"])))

        time_fields = ("begin", "end", "duration_minutes", "part_of_day")
        if any(doc.get(f) is not None for f in time_fields):
            time_node = event + "_time"
            graph.add(spo(event, ns.P_TIME, time_node))
            for key, predicate in (("begin", ns.P_HAS_BEGINNING), ("end", ns.P_HAS_END)):
                if doc.get(key) is not None:
                    try:
                        parse_datetime(str(doc[key]))
                    except ValueError:
                        raise ApiError(
                            "invalid-event", f"{key} is not an ISO-8601 date-time", doc[key]
                        ) from None
                    graph.add(spo(time_node, predicate, dt_literal(str(doc[key]))))
            if doc.get("duration_minutes") is not None:
                try:
                    minutes = int(doc["duration_minutes"])
                except (TypeError, ValueError):
                    raise ApiError(
                        "invalid-event", "duration_minutes must be an integer"
                    ) from None
                dur_node = time_node + "_d"
                graph.add(spo(time_node, ns.P_HAS_DURATION, dur_node))
                graph.add(spo(dur_node, ns.P_NUMERIC_DURATION, int_literal(minutes)))
            if doc.get("part_of_day"):
                graph.add(spo(time_node, ns.P_PART_OF_DAY, expand_curie(doc["part_of_day"])))
        return event

    # -- reasoning -------------------------------------------------------------

    def reason(self) -> dict:
        """Classify a snapshot and swap in the fresh inference layer."""
        with self._lock:
            graph = self._graph
        if len(graph) == 0:
            raise ApiError("empty-store", "reasoning requested on an empty store", status=409)
        result = classify_all(graph, self._vocab)
        with self._lock:
            self._classification = result
        return self.reason_summary(result)

    @staticmethod
    def reason_summary(result: ClassificationResult) -> dict:
        levels = {
            "closeness": {"high": 0, "medium": 0, "low": 0},
            "crowdedness": {"high": 0, "medium": 0, "low": 0},
            "enclosedness": {"high": 0, "medium": 0, "low": 0},
        }
        events = situations = 0
        for assignment in result.assignments.values():
            if assignment.kind == "situation":
                situations += 1
                levels["enclosedness"][assignment.enclosedness] += 1
            else:
                events += 1
                levels["closeness"][assignment.closeness] += 1
                levels["crowdedness"][assignment.crowdedness] += 1
        return {
            "events": events,
            "situations": situations,
            "levels": levels,
            "inferred_triples": len(result.inferred),
            "diagnostics": len(result.diagnostics),
            "persons_with_age_classes": len(result.person_age_classes),
        }

    def classification(self) -> ClassificationResult:
        with self._lock:
            if self._classification is None:
                raise ApiError(
                    "not-reasoned",
                    "no inference layer; run reasoning first",
                    status=409,
                )
            return self._classification

    def risk_of(self, entity: str) -> dict:
        result = self.classification()
        assignment = result.assignments.get(resolve_instance(entity))
        if assignment is None:
            raise ApiError("unknown-entity", f"no risk assignment for {entity}", status=404)
        return assignment.as_dict()


def overlap_mode(name: Optional[str]) -> str:
    if name in (None, "", MODE_RELIABLE):
        return MODE_RELIABLE
    if name == MODE_POSSIBLE:
        return MODE_POSSIBLE
    raise ApiError("invalid-mode", f"overlap mode must be reliable or possible, not {name!r}")


def vocabulary_summary(vocab: Vocabulary) -> dict:
    return {
        "classes": [
            {"iri": c.iri, "kind": c.kind, "parents": sorted(c.parents)}
            for c in sorted(vocab.classes.values(), key=lambda c: c.iri)
        ],
        "action_individuals": dict(sorted(vocab.action_individuals.items())),
        "context_individuals": dict(sorted(vocab.context_individuals.items())),
        "affordances": {
            place: sorted(actions) for place, actions in sorted(vocab.affordances.items())
        },
        "age_classes": [
            {
                "name": a.name,
                "lower": a.lower,
                "upper": a.upper,
                "upper_inclusive": a.upper_inclusive,
            }
            for a in vocab.age_classes
        ],
        "thresholds": {
            "duration_minutes": vocab.thresholds.duration_minutes,
            "high_droplet_count": vocab.thresholds.high_droplet_count,
            "medium_droplet_count": vocab.thresholds.medium_droplet_count,
            "high_crowding_spatial_count": vocab.thresholds.high_crowding_spatial_count,
            "medium_crowding_spatial_count": vocab.thresholds.medium_crowding_spatial_count,
            "behavioral_count": vocab.thresholds.behavioral_count,
            "close_contact_precedence": vocab.thresholds.close_contact_precedence,
            "context_pooling": vocab.thresholds.context_pooling,
        },
    }
