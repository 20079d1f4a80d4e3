"""Forward-chaining risk classifier.

Derives, for every event and spatial situation in a graph snapshot, the
three risk dimensions (closeness, crowdedness, enclosedness at the
levels low / medium / high), affordance-induced potential actions, and
age-class memberships. Inferred facts are materialized into a separate
layer; asserted triples are never touched.

Rule summary (cardinalities come from RiskThresholds):

* enclosedness, on situations: the place is an indoor facility or
  public transportation; high additionally needs at least one spatial
  risk context on the situation itself.
* crowdedness, on events: at least one behavioral and one (medium) or
  two (high) spatial risk contexts over the pooled context set.
* closeness, on events: the place affords, or the event records, one
  (medium) or two (high) droplet-reachable actions, the event lasted
  more than the duration threshold, and at least one behavioral risk
  context is present.

Context pooling unions an event's contexts with those of situations at
the same place whose time overlaps the event's (a timeless situation
matches any event there). Both pooling and the grouping of the
closeness rule's conjuncts are configurable on RiskThresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import namespaces as ns
from . import vocabulary as vo
from .model import Graph, Triple, iri
from .temporal import MODE_RELIABLE, intervals_overlap
from .vocabulary import AgeClassDef, Diagnostic, Vocabulary
from .views import EventView, GraphViews, SituationView, extract_views

LOW = "low"
MEDIUM = "medium"
HIGH = "high"
_LEVEL_ORDER = {LOW: 0, MEDIUM: 1, HIGH: 2}

_LEVEL_CLASSES = {
    "closeness": {MEDIUM: vo.MEDIUM_CLOSE_CONTACT, HIGH: vo.HIGH_CLOSE_CONTACT},
    "crowdedness": {MEDIUM: vo.MEDIUM_CROWDING, HIGH: vo.HIGH_CROWDING},
    "enclosedness": {MEDIUM: vo.MEDIUM_CLOSED_SPACE, HIGH: vo.HIGH_CLOSED_SPACE},
}


def level_max(a: str, b: str) -> str:
    return a if _LEVEL_ORDER[a] >= _LEVEL_ORDER[b] else b


def classify_age(age: int, defs: Iterable[AgeClassDef]) -> set[str]:
    """All age classes whose interval contains ``age``."""
    return {d.name for d in defs if d.contains(age)}


@dataclass
class RiskAssignment:
    entity: str
    kind: str = "event"  # "event" | "situation"
    closeness: str = LOW
    crowdedness: str = LOW
    enclosedness: str = LOW
    derived_classes: frozenset[str] = frozenset()
    potential_actions: frozenset[str] = frozenset()

    def as_dict(self) -> dict:
        return {
            "entity": self.entity,
            "kind": self.kind,
            "closeness": self.closeness,
            "crowdedness": self.crowdedness,
            "enclosedness": self.enclosedness,
            "derived_classes": sorted(self.derived_classes),
            "potential_actions": sorted(self.potential_actions),
        }


@dataclass
class ClassificationResult:
    assignments: dict[str, RiskAssignment]
    person_age_classes: dict[str, frozenset[str]]
    inferred: Graph
    diagnostics: list[Diagnostic] = field(default_factory=list)


class Reasoner:
    """Classifies one immutable graph snapshot against one vocabulary."""

    def __init__(self, graph: Graph, vocab: Vocabulary) -> None:
        self.graph = graph
        self.vocab = vocab
        self.views: GraphViews = extract_views(graph, vocab)
        self.diagnostics: list[Diagnostic] = list(self.views.diagnostics)
        self._pooled: dict[str, tuple[frozenset[str], frozenset[str]]] = {}
        self._matched: dict[str, list[SituationView]] = {}
        self._afford: dict[str, frozenset[str]] = {}

    # -- building blocks ----------------------------------------------------

    def derive_affordances(self, place_iri: Optional[str]) -> frozenset[str]:
        """Afforded actions of a place instance: class table plus explicit triples."""
        if place_iri is None:
            return frozenset()
        cached = self._afford.get(place_iri)
        if cached is not None:
            return cached
        actions: set[str] = set()
        for place_class in self.views.place_types.get(place_iri, ()):
            actions.update(self.vocab.affordances_of(place_class))
        for obj in self.graph.objects(iri(place_iri), iri(ns.P_AFFORD)):
            if obj.is_iri():
                actions.add(obj.value)
        result = frozenset(actions)
        self._afford[place_iri] = result
        return result

    def matched_situations(self, event: EventView) -> list[SituationView]:
        """Situations at the event's place whose time matches the event's.

        A situation without time information matches any event at its
        place; otherwise both sides need usable reliable bounds that
        strictly overlap.
        """
        cached = self._matched.get(event.id)
        if cached is not None:
            return cached
        matched: list[SituationView] = []
        if event.location:
            for situation in self.views.situations_by_place.get(event.location, ()):
                if not situation.has_time():
                    matched.append(situation)
                    continue
                if not (
                    situation.time.has_bounds(MODE_RELIABLE)
                    and event.time.has_bounds(MODE_RELIABLE)
                ):
                    continue
                if intervals_overlap(event.time, situation.time, MODE_RELIABLE):
                    matched.append(situation)
        self._matched[event.id] = matched
        return matched

    def pooled_contexts(self, event: EventView) -> tuple[frozenset[str], frozenset[str]]:
        """(behavioral, spatial) context individuals visible to the event."""
        cached = self._pooled.get(event.id)
        if cached is not None:
            return cached
        pool = set(event.contexts)
        if self.vocab.thresholds.context_pooling:
            for situation in self.matched_situations(event):
                pool.update(situation.contexts)
        behavioral, spatial = self._partition_contexts(pool, event.id)
        result = (behavioral, spatial)
        self._pooled[event.id] = result
        return result

    def _partition_contexts(
        self, contexts: Iterable[str], owner: str
    ) -> tuple[frozenset[str], frozenset[str]]:
        behavioral: set[str] = set()
        spatial: set[str] = set()
        for c in contexts:
            if self.vocab.is_behavioral_context(c):
                behavioral.add(c)
            elif self.vocab.is_spatial_context(c):
                spatial.add(c)
            else:
                self.diagnostics.append(
                    Diagnostic("unregistered-context", owner, f"ignoring unknown context {c}")
                )
        return frozenset(behavioral), frozenset(spatial)

    def _is_enclosed_place(self, place_iri: Optional[str]) -> bool:
        if place_iri is None:
            return False
        for place_class in self.views.place_types.get(place_iri, ()):
            if self.vocab.is_subclass_of(place_class, vo.INDOOR_FACILITY) or (
                self.vocab.is_subclass_of(place_class, vo.PUBLIC_TRANSPORT)
            ):
                return True
        return False

    # -- per-dimension rules --------------------------------------------------

    def classify_closed_space(self, situation: SituationView) -> str:
        _, spatial = self._partition_contexts(situation.contexts, situation.id)
        if not self._is_enclosed_place(situation.place):
            return LOW
        return HIGH if len(spatial) >= 1 else MEDIUM

    def classify_crowding(self, event: EventView) -> str:
        t = self.vocab.thresholds
        behavioral, spatial = self.pooled_contexts(event)
        if len(behavioral) >= t.behavioral_count:
            if len(spatial) >= t.high_crowding_spatial_count:
                return HIGH
            if len(spatial) >= t.medium_crowding_spatial_count:
                return MEDIUM
        return LOW

    def classify_close_contact(self, event: EventView) -> str:
        t = self.vocab.thresholds
        afforded = self.derive_affordances(event.location)
        a = sum(1 for x in afforded if self.vocab.is_droplet_action(x))
        b = sum(1 for x in event.actions if self.vocab.is_droplet_action(x))
        behavioral, _ = self.pooled_contexts(event)
        c_ok = len(behavioral) >= t.behavioral_count
        duration = event.time.effective_duration()
        if duration is None:
            # Unknown duration blocks the duration conjunct (conservative).
            self.diagnostics.append(
                Diagnostic("unknown-duration", event.id, "no usable duration; closeness capped")
            )
            d_ok = False
        else:
            d_ok = duration > t.duration_minutes
        if t.close_contact_precedence == vo.PRECEDENCE_DL_STANDARD:
            if a >= t.high_droplet_count or (b >= t.high_droplet_count and d_ok and c_ok):
                return HIGH
            if a >= t.medium_droplet_count or (b >= t.medium_droplet_count and d_ok and c_ok):
                return MEDIUM
            return LOW
        if (a >= t.high_droplet_count or b >= t.high_droplet_count) and d_ok and c_ok:
            return HIGH
        if (a >= t.medium_droplet_count or b >= t.medium_droplet_count) and d_ok and c_ok:
            return MEDIUM
        return LOW

    # -- whole-graph classification -------------------------------------------

    def classify_all(self) -> ClassificationResult:
        assignments: dict[str, RiskAssignment] = {}
        inferred = Graph()
        rdf_type = iri(ns.RDF_TYPE)
        potential_action = iri(ns.P_POTENTIAL_ACTION)

        def level_classes(dimension: str, level: str) -> set[str]:
            classes = _LEVEL_CLASSES[dimension]
            if level == HIGH:
                return {classes[HIGH], classes[MEDIUM]}
            if level == MEDIUM:
                return {classes[MEDIUM]}
            return set()

        for sit_id in sorted(self.views.situations):
            situation = self.views.situations[sit_id]
            level = self.classify_closed_space(situation)
            derived = level_classes("enclosedness", level)
            for cls in derived:
                inferred.add(Triple(iri(sit_id), rdf_type, iri(cls)))
            assignments[sit_id] = RiskAssignment(
                entity=sit_id,
                kind="situation",
                enclosedness=level,
                derived_classes=frozenset(derived),
            )

        for event_id in sorted(self.views.events):
            event = self.views.events[event_id]
            closeness = self.classify_close_contact(event)
            crowdedness = self.classify_crowding(event)
            enclosedness = LOW
            for situation in self.matched_situations(event):
                enclosedness = level_max(enclosedness, assignments[situation.id].enclosedness)
            derived = level_classes("closeness", closeness) | level_classes(
                "crowdedness", crowdedness
            )
            for cls in sorted(derived):
                inferred.add(Triple(iri(event_id), rdf_type, iri(cls)))
            potential = self.derive_affordances(event.location)
            for action in sorted(potential):
                inferred.add(Triple(iri(event_id), potential_action, iri(action)))
            assignments[event_id] = RiskAssignment(
                entity=event_id,
                kind="event",
                closeness=closeness,
                crowdedness=crowdedness,
                enclosedness=enclosedness,
                derived_classes=frozenset(derived),
                potential_actions=potential,
            )

        person_ages: dict[str, frozenset[str]] = {}
        for person_id in sorted(self.views.persons):
            person = self.views.persons[person_id]
            if person.age is None:
                continue
            classes = classify_age(person.age, self.vocab.age_classes)
            person_ages[person_id] = frozenset(classes)
            target = person.age_node or person_id
            for cls in sorted(classes):
                inferred.add(Triple(iri(target), rdf_type, iri(cls)))

        return ClassificationResult(
            assignments=assignments,
            person_age_classes=person_ages,
            inferred=inferred,
            diagnostics=self.diagnostics,
        )


def classify_all(graph: Graph, vocab: Vocabulary) -> ClassificationResult:
    """Pure function of (graph, vocab); repeated runs are identical."""
    return Reasoner(graph, vocab).classify_all()


def report_rows(result: ClassificationResult) -> list[dict]:
    """Stable, JSON/CSV-ready projection of a classification result."""
    return [result.assignments[key].as_dict() for key in sorted(result.assignments)]


def report_csv(result: ClassificationResult) -> str:
    lines = ["entity,closeness,crowdedness,enclosedness,derived_classes,potential_actions"]
    for row in report_rows(result):
        derived = ";".join(row["derived_classes"])
        potential = ";".join(row["potential_actions"])
        lines.append(
            f"{row['entity']},{row['closeness']},{row['crowdedness']},"
            f"{row['enclosedness']},{derived},{potential}"
        )
    return "\n".join(lines) + "\n"
