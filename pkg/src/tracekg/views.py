"""Typed views over the event-centric graph shape.

Extraction is tolerant: nonconforming entities produce diagnostics, not
failures, because field data arrives dirty. Each view keeps the IRIs it
was built from so reports and queries can link back into the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import namespaces as ns
from .model import DT_DATETIME, DT_DECIMAL, DT_INTEGER, Graph, Term, iri
from .temporal import TimeSpan
from .vocabulary import Diagnostic, Vocabulary

_RDF_TYPE = iri(ns.RDF_TYPE)
_EVENT = iri(ns.C_EVENT)
_SITUATION = iri(ns.C_SITUATION)
_PERSON = iri(ns.C_PERSON)
_PATIENT = iri(ns.C_PATIENT)


@dataclass
class EventView:
    id: str
    agents: frozenset[str] = frozenset()
    location: Optional[str] = None
    actions: frozenset[str] = frozenset()
    contexts: frozenset[str] = frozenset()
    time: TimeSpan = field(default_factory=TimeSpan)
    following_event: Optional[str] = None


@dataclass
class SituationView:
    id: str
    place: Optional[str] = None
    contexts: frozenset[str] = frozenset()
    time: TimeSpan = field(default_factory=TimeSpan)

    def has_time(self) -> bool:
        return not self.time.is_empty()


@dataclass
class PersonView:
    id: str
    age: Optional[int] = None
    age_node: Optional[str] = None
    health_condition: Optional[str] = None
    home_location: Optional[str] = None


@dataclass
class GraphViews:
    """Everything the reasoner and query engine need, indexed once."""

    events: dict[str, EventView]
    situations: dict[str, SituationView]
    persons: dict[str, PersonView]
    place_types: dict[str, frozenset[str]]  # place IRI -> registered place classes
    situations_by_place: dict[str, list[SituationView]]
    diagnostics: list[Diagnostic]


def _read_timespan(graph: Graph, time_node: Term, diags: list[Diagnostic]) -> TimeSpan:
    def dt(predicate: str):
        obj = graph.object(time_node, iri(predicate))
        if obj is None:
            return None
        if not (obj.is_literal() and obj.datatype == DT_DATETIME):
            diags.append(
                Diagnostic("bad-time-literal", time_node.value, f"{predicate} is not a dateTime")
            )
            return None
        return obj.as_datetime()

    duration = None
    for dur_node in graph.objects(time_node, iri(ns.P_HAS_DURATION)):
        num = graph.object(dur_node, iri(ns.P_NUMERIC_DURATION))
        if num is not None and num.is_literal() and num.datatype in (DT_INTEGER, DT_DECIMAL):
            duration = num.as_number()
        else:
            diags.append(
                Diagnostic("bad-duration", time_node.value, "duration without numeric value")
            )
    part = graph.object(time_node, iri(ns.P_PART_OF_DAY))
    span = TimeSpan(
        begin=dt(ns.P_HAS_BEGINNING),
        end=dt(ns.P_HAS_END),
        reliable_begin=dt(ns.P_RELIABLE_BEGIN),
        possible_begin=dt(ns.P_POSSIBLE_BEGIN),
        reliable_end=dt(ns.P_RELIABLE_END),
        possible_end=dt(ns.P_POSSIBLE_END),
        duration_minutes=duration,
        part_of_day=part.value if part is not None and part.is_iri() else None,
    )
    for problem in span.check():
        diags.append(Diagnostic("inconsistent-time", time_node.value, problem))
    return span


def _timespan_of(graph: Graph, subject: Term, diags: list[Diagnostic]) -> TimeSpan:
    node = graph.object(subject, iri(ns.P_TIME))
    if node is None or not node.is_iri():
        return TimeSpan()
    return _read_timespan(graph, node, diags)


def _iri_objects(graph: Graph, s: Term, p: str) -> frozenset[str]:
    return frozenset(o.value for o in graph.objects(s, iri(p)) if o.is_iri())


def extract_views(graph: Graph, vocab: Vocabulary) -> GraphViews:
    diags: list[Diagnostic] = []
    place_classes = vocab.classes_of_kind("place")

    events: dict[str, EventView] = {}
    for subject in graph.subjects(_RDF_TYPE, _EVENT):
        location = graph.object(subject, iri(ns.P_LOCATION))
        following = graph.object(subject, iri(ns.P_FOLLOWING_EVENT))
        events[subject.value] = EventView(
            id=subject.value,
            agents=_iri_objects(graph, subject, ns.P_AGENT),
            location=location.value if location is not None and location.is_iri() else None,
            actions=_iri_objects(graph, subject, ns.P_ACTION),
            contexts=_iri_objects(graph, subject, ns.P_CONTEXT),
            time=_timespan_of(graph, subject, diags),
            following_event=following.value if following is not None and following.is_iri() else None,
        )
        if events[subject.value].location is None:
            diags.append(Diagnostic("event-without-location", subject.value, "no location"))

    situations: dict[str, SituationView] = {}
    for subject in graph.subjects(_RDF_TYPE, _SITUATION):
        place = graph.object(subject, iri(ns.P_IS_SITUATION_OF))
        situations[subject.value] = SituationView(
            id=subject.value,
            place=place.value if place is not None and place.is_iri() else None,
            contexts=_iri_objects(graph, subject, ns.P_CONTEXT),
            time=_timespan_of(graph, subject, diags),
        )
        if situations[subject.value].place is None:
            diags.append(
                Diagnostic("situation-without-place", subject.value, "no isSituationOf value")
            )

    persons: dict[str, PersonView] = {}
    person_subjects = set(graph.subjects(_RDF_TYPE, _PERSON)) | set(
        graph.subjects(_RDF_TYPE, _PATIENT)
    )
    for subject in sorted(person_subjects, key=Term.sort_key):
        age = None
        age_node_iri = None
        age_node = graph.object(subject, iri(ns.P_AGE))
        if age_node is not None and age_node.is_iri():
            age_node_iri = age_node.value
            value = graph.object(age_node, iri(ns.P_VALUE))
            if value is not None and value.is_literal() and value.datatype == DT_INTEGER:
                age = int(value.value)
                if age < 0:
                    diags.append(Diagnostic("negative-age", subject.value, f"age {age}"))
                    age = None
        health = graph.object(subject, iri(ns.P_HEALTH_CONDITION))
        home = graph.object(subject, iri(ns.P_HOME_LOCATION))
        persons[subject.value] = PersonView(
            id=subject.value,
            age=age,
            age_node=age_node_iri,
            health_condition=health.value if health is not None and health.is_literal() else None,
            home_location=home.value if home is not None and home.is_iri() else None,
        )

    # Place typing: keep only classes the vocabulary registers as places.
    place_types: dict[str, frozenset[str]] = {}
    referenced = {e.location for e in events.values() if e.location} | {
        s.place for s in situations.values() if s.place
    }
    for place_iri in referenced:
        types = {
            o.value
            for o in graph.objects(iri(place_iri), _RDF_TYPE)
            if o.is_iri() and o.value in place_classes
        }
        place_types[place_iri] = frozenset(types)
        if not types:
            diags.append(Diagnostic("untyped-place", place_iri, "no registered place class"))

    situations_by_place: dict[str, list[SituationView]] = {}
    for view in situations.values():
        if view.place:
            situations_by_place.setdefault(view.place, []).append(view)
    for lst in situations_by_place.values():
        lst.sort(key=lambda v: v.id)

    return GraphViews(
        events=events,
        situations=situations,
        persons=persons,
        place_types=place_types,
        situations_by_place=situations_by_place,
        diagnostics=diags,
    )
