"""Typed registry of the risk vocabulary.

Holds the class hierarchy, named action/context individuals, the
place-affordance table, age classes, and the tunable thresholds of the
risk rules. The core entries are fixed in code; everything else is
data, loaded from a YAML document, so new places, actions, and contexts
can be added without touching the reasoner.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, replace
from typing import Any, Optional

import yaml

from . import namespaces as ns
from .model import Graph, int_literal, iri, literal, spo

# Class kinds.
KIND_PLACE = "place"
KIND_ACTION = "action"
KIND_CONTEXT = "context"
KIND_RISK = "risk"
KIND_AGE = "age"
KIND_EVENT = "event"
KIND_SITUATION = "situation"
KIND_PERSON = "person"
KIND_TIME = "time"

_KINDS = {
    KIND_PLACE,
    KIND_ACTION,
    KIND_CONTEXT,
    KIND_RISK,
    KIND_AGE,
    KIND_EVENT,
    KIND_SITUATION,
    KIND_PERSON,
    KIND_TIME,
}

# Frequently referenced class IRIs.
INDOOR_FACILITY = ns.plod("IndoorFacility")
OUTDOOR_FACILITY = ns.plod("OutdoorFacility")
PUBLIC_TRANSPORT = ns.plod("Public_transportation")
RESTAURANT = ns.plod("Restaurant")
GYM = ns.plod("Gym")
BAR = ns.plod("Bar")
BUS = ns.plod("Bus")

ACTION = ns.plod("Action")
RISK_ACTION = ns.plod("RiskAction")
INDIRECT_CONTACT = ns.plod("IndirectContact")
DROPLET_REACHABLE = ns.plod("DropletReachableAction")

CONTEXT = ns.plod("Context")
RISK_CONTEXT = ns.plod("RiskContext")
SPATIAL_CONTEXT = ns.plod("SpatialRiskContext")
BEHAVIORAL_CONTEXT = ns.plod("BehavioralRiskContext")

CLOSE_CONTACT = ns.plod("CloseContact")
CLOSED_SPACE = ns.plod("ClosedSpace")
CROWDING = ns.plod("Crowding")
MEDIUM_CLOSE_CONTACT = ns.plod("MediumLevelCloseContact")
HIGH_CLOSE_CONTACT = ns.plod("HighLevelCloseContact")
MEDIUM_CLOSED_SPACE = ns.plod("MediumLevelClosedSpace")
HIGH_CLOSED_SPACE = ns.plod("HighLevelClosedSpace")
MEDIUM_CROWDING = ns.plod("MediumLevelCrowding")
HIGH_CROWDING = ns.plod("HighLevelCrowding")

PART_OF_DAY = ns.plod("PartOfDay")

# Named individuals fixed by the core vocabulary.
TALK = ns.plod("talk")
REMOVE_MASK = ns.plod("removeMask")
SHARE_THING = ns.plod("shareThing")
CROWDED = ns.plod("crowded")
SMALL_SPACE = ns.plod("smallSpace")
FACE_TO_FACE = ns.plod("facetoface")
RELAX = ns.plod("relax")

PRECEDENCE_GROUPED = "grouped"
PRECEDENCE_DL_STANDARD = "dl-standard"


class VocabularyError(ValueError):
    """Raised when a vocabulary document violates a registry invariant."""


@dataclass(frozen=True)
class ClassDef:
    iri: str
    kind: str
    parents: tuple[str, ...] = ()


@dataclass(frozen=True)
class AgeClassDef:
    """A named age interval; ``upper_inclusive`` selects <= vs < on the upper bound."""

    name: str
    lower: Optional[int] = None
    upper: Optional[int] = None
    upper_inclusive: bool = True

    def contains(self, age: int) -> bool:
        if self.lower is not None and age < self.lower:
            return False
        if self.upper is not None:
            return age <= self.upper if self.upper_inclusive else age < self.upper
        return True


@dataclass(frozen=True)
class RiskThresholds:
    """Tunable cardinalities of the risk rules.

    The high thresholds must stay >= the medium ones; that ordering is
    what guarantees every high classification implies the medium one.
    """

    duration_minutes: int = 15
    high_droplet_count: int = 2
    medium_droplet_count: int = 1
    high_crowding_spatial_count: int = 2
    medium_crowding_spatial_count: int = 1
    behavioral_count: int = 1
    close_contact_precedence: str = PRECEDENCE_GROUPED
    context_pooling: bool = True


@dataclass
class Diagnostic:
    code: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.subject}: {self.message}"


def _core_classes() -> dict[str, ClassDef]:
    defs = [
        # events / persons / situations / time
        ClassDef(ns.C_EVENT, KIND_EVENT),
        ClassDef(ns.C_PERSON, KIND_PERSON),
        ClassDef(ns.C_PATIENT, KIND_PERSON, (ns.C_PERSON,)),
        ClassDef(ns.C_SITUATION, KIND_SITUATION),
        ClassDef(ns.C_TIME, KIND_TIME),
        ClassDef(ns.time_ns("TemporalEntity"), KIND_TIME, (ns.C_TIME,)),
        ClassDef(ns.time_ns("TemporalDuration"), KIND_TIME, (ns.C_TIME,)),
        ClassDef(PART_OF_DAY, KIND_TIME, (ns.C_TIME,)),
        ClassDef(ns.plod("Morning"), KIND_TIME, (PART_OF_DAY,)),
        ClassDef(ns.plod("Afternoon"), KIND_TIME, (PART_OF_DAY,)),
        ClassDef(ns.plod("Evening"), KIND_TIME, (PART_OF_DAY,)),
        ClassDef(ns.plod("Night"), KIND_TIME, (PART_OF_DAY,)),
        # places
        ClassDef(ns.C_PLACE, KIND_PLACE),
        ClassDef(INDOOR_FACILITY, KIND_PLACE, (ns.C_PLACE,)),
        ClassDef(OUTDOOR_FACILITY, KIND_PLACE, (ns.C_PLACE,)),
        ClassDef(PUBLIC_TRANSPORT, KIND_PLACE, (ns.C_PLACE,)),
        ClassDef(RESTAURANT, KIND_PLACE, (INDOOR_FACILITY,)),
        ClassDef(GYM, KIND_PLACE, (INDOOR_FACILITY,)),
        ClassDef(BAR, KIND_PLACE, (INDOOR_FACILITY,)),
        ClassDef(BUS, KIND_PLACE, (PUBLIC_TRANSPORT,)),
        # actions
        ClassDef(ACTION, KIND_ACTION),
        ClassDef(RISK_ACTION, KIND_ACTION, (ACTION,)),
        ClassDef(INDIRECT_CONTACT, KIND_ACTION, (RISK_ACTION,)),
        ClassDef(DROPLET_REACHABLE, KIND_ACTION, (RISK_ACTION,)),
        # contexts
        ClassDef(CONTEXT, KIND_CONTEXT),
        ClassDef(RISK_CONTEXT, KIND_CONTEXT, (CONTEXT,)),
        ClassDef(SPATIAL_CONTEXT, KIND_CONTEXT, (RISK_CONTEXT,)),
        ClassDef(BEHAVIORAL_CONTEXT, KIND_CONTEXT, (RISK_CONTEXT,)),
        # risk levels; high is a subclass of medium so high implies medium
        ClassDef(CLOSE_CONTACT, KIND_RISK, (BEHAVIORAL_CONTEXT,)),
        ClassDef(CLOSED_SPACE, KIND_RISK, (SPATIAL_CONTEXT,)),
        ClassDef(CROWDING, KIND_RISK, (SPATIAL_CONTEXT,)),
        ClassDef(MEDIUM_CLOSE_CONTACT, KIND_RISK, (CLOSE_CONTACT,)),
        ClassDef(HIGH_CLOSE_CONTACT, KIND_RISK, (MEDIUM_CLOSE_CONTACT,)),
        ClassDef(MEDIUM_CLOSED_SPACE, KIND_RISK, (CLOSED_SPACE,)),
        ClassDef(HIGH_CLOSED_SPACE, KIND_RISK, (MEDIUM_CLOSED_SPACE,)),
        ClassDef(MEDIUM_CROWDING, KIND_RISK, (CROWDING,)),
        ClassDef(HIGH_CROWDING, KIND_RISK, (MEDIUM_CROWDING,)),
        # ages
        ClassDef(ns.C_AGE, KIND_AGE),
        ClassDef(ns.plod("AgeOf30s"), KIND_AGE, (ns.C_AGE,)),
        ClassDef(ns.plod("AgeOfUnder60s"), KIND_AGE, (ns.C_AGE,)),
    ]
    return {d.iri: d for d in defs}


_CORE_ACTION_INDIVIDUALS = {
    TALK: DROPLET_REACHABLE,
    REMOVE_MASK: DROPLET_REACHABLE,
    SHARE_THING: INDIRECT_CONTACT,
}

_CORE_CONTEXT_INDIVIDUALS = {
    CROWDED: SPATIAL_CONTEXT,
    SMALL_SPACE: SPATIAL_CONTEXT,
    FACE_TO_FACE: BEHAVIORAL_CONTEXT,
    RELAX: BEHAVIORAL_CONTEXT,
}

_CORE_AFFORDANCES = {
    RESTAURANT: frozenset({REMOVE_MASK, TALK}),
    GYM: frozenset({SHARE_THING}),
}

# The 30s interval is closed; under-60 uses a strict upper bound.
_CORE_AGE_CLASSES = (
    AgeClassDef(ns.plod("AgeOf30s"), lower=30, upper=39, upper_inclusive=True),
    AgeClassDef(ns.plod("AgeOfUnder60s"), upper=60, upper_inclusive=False),
)


def expand_curie(name: str) -> str:
    """Expand 'plod:Restaurant' style names against the built-in prefixes."""
    if "://" in name:
        return name
    if ":" in name:
        prefix, local = name.split(":", 1)
        base = ns.BUILTIN_PREFIXES.get(prefix)
        if base is None:
            raise VocabularyError(f"unknown prefix '{prefix}:' in '{name}'")
        return base + local
    # Bare names live in the vocabulary namespace.
    return ns.plod(name)


class Vocabulary:
    """Immutable after load; freely shareable across threads."""

    def __init__(
        self,
        classes: dict[str, ClassDef],
        action_individuals: dict[str, str],
        context_individuals: dict[str, str],
        affordances: dict[str, frozenset[str]],
        age_classes: tuple[AgeClassDef, ...],
        thresholds: RiskThresholds,
    ) -> None:
        self.classes = classes
        self.action_individuals = action_individuals
        self.context_individuals = context_individuals
        self.affordances = affordances
        self.age_classes = age_classes
        self.thresholds = thresholds
        self._ancestors: dict[str, frozenset[str]] = {}
        self._afford_cache: dict[str, frozenset[str]] = {}
        self._branch_cache: dict[str, tuple[bool, bool, bool]] = {}

    # -- hierarchy ---------------------------------------------------------

    def ancestors(self, class_iri: str) -> frozenset[str]:
        """Reflexive-transitive superclass closure."""
        cached = self._ancestors.get(class_iri)
        if cached is not None:
            return cached
        if class_iri not in self.classes:
            raise VocabularyError(f"unknown class: {class_iri}")
        seen: set[str] = set()
        stack = [class_iri]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            cdef = self.classes.get(cur)
            if cdef:
                stack.extend(cdef.parents)
        result = frozenset(seen)
        self._ancestors[class_iri] = result
        return result

    def is_subclass_of(self, a: str, b: str) -> bool:
        if b not in self.classes:
            raise VocabularyError(f"unknown class: {b}")
        return b in self.ancestors(a)

    def classes_of_kind(self, kind: str) -> set[str]:
        return {c.iri for c in self.classes.values() if c.kind == kind}

    # -- individuals -------------------------------------------------------

    def individual_class(self, individual: str) -> Optional[str]:
        return self.action_individuals.get(individual) or self.context_individuals.get(
            individual
        )

    def _branches(self, individual: str) -> tuple[bool, bool, bool]:
        """(behavioral-context, spatial-context, droplet-action) membership, memoized."""
        cached = self._branch_cache.get(individual)
        if cached is not None:
            return cached
        ctx_cls = self.context_individuals.get(individual)
        act_cls = self.action_individuals.get(individual)
        result = (
            ctx_cls is not None and self.is_subclass_of(ctx_cls, BEHAVIORAL_CONTEXT),
            ctx_cls is not None and self.is_subclass_of(ctx_cls, SPATIAL_CONTEXT),
            act_cls is not None and self.is_subclass_of(act_cls, DROPLET_REACHABLE),
        )
        self._branch_cache[individual] = result
        return result

    def is_behavioral_context(self, individual: str) -> bool:
        return self._branches(individual)[0]

    def is_spatial_context(self, individual: str) -> bool:
        return self._branches(individual)[1]

    def is_droplet_action(self, individual: str) -> bool:
        return self._branches(individual)[2]

    # -- affordances -------------------------------------------------------

    def affordances_of(self, place_class: str) -> frozenset[str]:
        """Afforded actions, inherited from every superclass of the place type."""
        cached = self._afford_cache.get(place_class)
        if cached is not None:
            return cached
        actions: set[str] = set()
        for ancestor in self.ancestors(place_class):
            actions.update(self.affordances.get(ancestor, ()))
        result = frozenset(actions)
        self._afford_cache[place_class] = result
        return result

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        """Raise VocabularyError on the first hard invariant violation."""
        problems = self.lint()
        if problems:
            raise VocabularyError("; ".join(str(p) for p in problems))

    def lint(self) -> list[Diagnostic]:
        """Check every registry invariant; empty list means a clean vocabulary."""
        out: list[Diagnostic] = []
        out.extend(self._lint_hierarchy())
        out.extend(self._lint_individuals())
        out.extend(self._lint_affordances())
        out.extend(self._lint_thresholds())
        out.extend(self._lint_age_classes())
        return out

    def _lint_hierarchy(self) -> list[Diagnostic]:
        out = []
        for cdef in self.classes.values():
            for parent in cdef.parents:
                if parent not in self.classes:
                    out.append(
                        Diagnostic("unknown-parent", cdef.iri, f"parent {parent} is not registered")
                    )
        # Cycle detection via iterative DFS with colors.
        color: dict[str, int] = {}  # 1 in progress, 2 done
        for root in self.classes:
            if color.get(root):
                continue
            stack: list[tuple[str, int]] = [(root, 0)]
            while stack:
                node, idx = stack.pop()
                if idx == 0:
                    if color.get(node) == 2:
                        continue
                    color[node] = 1
                parents = [p for p in self.classes[node].parents if p in self.classes]
                if idx < len(parents):
                    stack.append((node, idx + 1))
                    nxt = parents[idx]
                    state = color.get(nxt)
                    if state == 1:
                        out.append(
                            Diagnostic(
                                "hierarchy-cycle",
                                nxt,
                                "class participates in a superclass cycle",
                            )
                        )
                        color[nxt] = 2
                    elif state != 2:
                        stack.append((nxt, 0))
                else:
                    color[node] = 2
        return out

    def _safe_ancestors(self, class_iri: str) -> set[str]:
        # Cycle-tolerant, for use inside lint.
        seen: set[str] = set()
        stack = [class_iri]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            cdef = self.classes.get(cur)
            if cdef:
                stack.extend(cdef.parents)
        return seen

    def _lint_individuals(self) -> list[Diagnostic]:
        out = []
        both = set(self.action_individuals) & set(self.context_individuals)
        for ind in sorted(both):
            out.append(
                Diagnostic(
                    "disjoint-individual",
                    ind,
                    "individual is registered both as an action and as a context",
                )
            )
        for ind, cls in sorted(self.context_individuals.items()):
            if cls not in self.classes:
                out.append(Diagnostic("unknown-class", ind, f"context class {cls} not registered"))
                continue
            anc = self._safe_ancestors(cls)
            spatial, behavioral = SPATIAL_CONTEXT in anc, BEHAVIORAL_CONTEXT in anc
            if spatial and behavioral:
                out.append(
                    Diagnostic(
                        "disjoint-individual",
                        ind,
                        "context individual reaches both the spatial and behavioral branches",
                    )
                )
            elif not (spatial or behavioral):
                out.append(
                    Diagnostic(
                        "misfiled-individual",
                        ind,
                        f"context class {cls} is outside the risk-context branches",
                    )
                )
        for ind, cls in sorted(self.action_individuals.items()):
            if cls not in self.classes:
                out.append(Diagnostic("unknown-class", ind, f"action class {cls} not registered"))
                continue
            anc = self._safe_ancestors(cls)
            indirect, droplet = INDIRECT_CONTACT in anc, DROPLET_REACHABLE in anc
            if indirect and droplet:
                out.append(
                    Diagnostic(
                        "disjoint-individual",
                        ind,
                        "action individual reaches both the indirect and droplet branches",
                    )
                )
            elif not self._safe_ancestors(cls) & {RISK_ACTION}:
                out.append(
                    Diagnostic(
                        "misfiled-individual",
                        ind,
                        f"action class {cls} is outside the risk-action branch",
                    )
                )
        return out

    def _lint_affordances(self) -> list[Diagnostic]:
        out = []
        for place_cls, actions in sorted(self.affordances.items()):
            if place_cls not in self.classes or self.classes[place_cls].kind != KIND_PLACE:
                out.append(
                    Diagnostic(
                        "affordance-unknown-place",
                        place_cls,
                        "affordance entry names an unregistered place class",
                    )
                )
            for act in sorted(actions):
                if act not in self.action_individuals:
                    out.append(
                        Diagnostic(
                            "affordance-unknown-action",
                            place_cls,
                            f"afforded action {act} is not a registered action individual",
                        )
                    )
        return out

    def _lint_thresholds(self) -> list[Diagnostic]:
        t = self.thresholds
        out = []
        if t.high_droplet_count < t.medium_droplet_count:
            out.append(
                Diagnostic(
                    "threshold-order",
                    "droplet-count",
                    f"high threshold {t.high_droplet_count} below medium {t.medium_droplet_count}",
                )
            )
        if t.high_crowding_spatial_count < t.medium_crowding_spatial_count:
            out.append(
                Diagnostic(
                    "threshold-order",
                    "crowding-spatial-count",
                    f"high threshold {t.high_crowding_spatial_count} below medium "
                    f"{t.medium_crowding_spatial_count}",
                )
            )
        if t.duration_minutes < 0:
            out.append(Diagnostic("threshold-order", "duration", "negative duration threshold"))
        if t.close_contact_precedence not in (PRECEDENCE_GROUPED, PRECEDENCE_DL_STANDARD):
            out.append(
                Diagnostic(
                    "bad-option",
                    "close-contact-precedence",
                    f"unknown precedence mode {t.close_contact_precedence!r}",
                )
            )
        return out

    def _lint_age_classes(self) -> list[Diagnostic]:
        out = []
        for a in self.age_classes:
            if a.lower is not None and a.upper is not None and a.lower > a.upper:
                out.append(
                    Diagnostic("age-bounds", a.name, f"lower {a.lower} exceeds upper {a.upper}")
                )
        return out

    # -- rendering ---------------------------------------------------------

    def to_graph(self) -> Graph:
        """Turtle-ready rendering of the registry for interchange."""
        g = Graph()
        rdfs_class = iri(ns.RDFS + "Class")
        for cdef in self.classes.values():
            g.add(spo(cdef.iri, ns.RDF_TYPE, rdfs_class))
            for parent in cdef.parents:
                g.add(spo(cdef.iri, ns.RDFS_SUBCLASSOF, parent))
        for ind, cls in self.action_individuals.items():
            g.add(spo(ind, ns.RDF_TYPE, cls))
        for ind, cls in self.context_individuals.items():
            g.add(spo(ind, ns.RDF_TYPE, cls))
        for place_cls, actions in self.affordances.items():
            for act in actions:
                g.add(spo(place_cls, ns.P_AFFORD, act))
        for a in self.age_classes:
            if a.name not in self.classes:
                g.add(spo(a.name, ns.RDFS_SUBCLASSOF, ns.C_AGE))
            if a.lower is not None:
                g.add(spo(a.name, ns.P_MIN_YEARS, int_literal(a.lower)))
            if a.upper is not None:
                g.add(spo(a.name, ns.P_MAX_YEARS, int_literal(a.upper)))
                g.add(
                    spo(
                        a.name,
                        ns.P_MAX_YEARS_INCLUSIVE,
                        literal("true" if a.upper_inclusive else "false"),
                    )
                )
        return g


# ---------------------------------------------------------------------------
# Loading


def core_vocabulary() -> Vocabulary:
    """The fixed core registry (what an empty document loads to)."""
    return Vocabulary(
        classes=_core_classes(),
        action_individuals=dict(_CORE_ACTION_INDIVIDUALS),
        context_individuals=dict(_CORE_CONTEXT_INDIVIDUALS),
        affordances=dict(_CORE_AFFORDANCES),
        age_classes=_CORE_AGE_CLASSES,
        thresholds=RiskThresholds(),
    )


def load_vocabulary(document: Optional[dict[str, Any]] = None) -> Vocabulary:
    """Build a vocabulary: the core plus the entries of ``document``.

    Raises VocabularyError on hierarchy cycles, disjointness violations,
    or inverted thresholds.
    """
    vocab = core_vocabulary()
    if document:
        _apply_document(vocab, document)
    vocab.validate()
    return vocab


def _apply_document(vocab: Vocabulary, doc: dict[str, Any]) -> None:
    for entry in doc.get("classes", []) or []:
        class_iri = expand_curie(entry["iri"])
        kind = entry.get("kind", "")
        if kind not in _KINDS:
            raise VocabularyError(f"class {class_iri} has unknown kind {kind!r}")
        parents = tuple(expand_curie(p) for p in entry.get("parents", []) or [])
        vocab.classes[class_iri] = ClassDef(class_iri, kind, parents)

    individuals = doc.get("individuals", {}) or {}
    for name, cls_name in (individuals.get("actions", {}) or {}).items():
        ind, cls = expand_curie(name), expand_curie(cls_name)
        _check_reassignment(vocab, ind, cls, KIND_ACTION)
        vocab.action_individuals[ind] = cls
    for name, cls_name in (individuals.get("contexts", {}) or {}).items():
        ind, cls = expand_curie(name), expand_curie(cls_name)
        _check_reassignment(vocab, ind, cls, KIND_CONTEXT)
        vocab.context_individuals[ind] = cls

    for place_name, actions in (doc.get("affordances", {}) or {}).items():
        place_cls = expand_curie(place_name)
        new = frozenset(expand_curie(a) for a in actions or [])
        vocab.affordances[place_cls] = vocab.affordances.get(place_cls, frozenset()) | new

    extra_ages = []
    for entry in doc.get("age_classes", []) or []:
        definition = AgeClassDef(
            name=expand_curie(entry["name"]),
            lower=entry.get("lower"),
            upper=entry.get("upper"),
            upper_inclusive=bool(entry.get("upper_inclusive", True)),
        )
        extra_ages.append(definition)
        if definition.name not in vocab.classes:
            vocab.classes[definition.name] = ClassDef(definition.name, KIND_AGE, (ns.C_AGE,))
    vocab.age_classes = vocab.age_classes + tuple(extra_ages)

    thresholds = doc.get("thresholds", {}) or {}
    options = doc.get("options", {}) or {}
    known = {f: getattr(vocab.thresholds, f) for f in RiskThresholds.__dataclass_fields__}
    for key, value in {**thresholds, **options}.items():
        attr = key.replace("-", "_")
        if attr not in known:
            raise VocabularyError(f"unknown threshold/option '{key}'")
        known[attr] = value
    vocab.thresholds = RiskThresholds(**known)


def _check_reassignment(vocab: Vocabulary, ind: str, cls: str, kind: str) -> None:
    """Refuse moving an existing individual across a disjoint pair."""
    if kind == KIND_CONTEXT:
        existing = vocab.context_individuals.get(ind)
        pairs = (SPATIAL_CONTEXT, BEHAVIORAL_CONTEXT)
        if ind in vocab.action_individuals:
            raise VocabularyError(f"{ind} is already registered as an action individual")
    else:
        existing = vocab.action_individuals.get(ind)
        pairs = (INDIRECT_CONTACT, DROPLET_REACHABLE)
        if ind in vocab.context_individuals:
            raise VocabularyError(f"{ind} is already registered as a context individual")
    if existing is None or cls not in vocab.classes or existing not in vocab.classes:
        return
    old_anc = vocab._safe_ancestors(existing)
    new_anc = vocab._safe_ancestors(cls)
    for a, b in ((pairs[0], pairs[1]), (pairs[1], pairs[0])):
        if a in old_anc and b in new_anc and a not in new_anc:
            raise VocabularyError(
                f"disjointness violation: {ind} cannot move from the "
                f"{a.rsplit('/', 1)[-1]} branch to the {b.rsplit('/', 1)[-1]} branch"
            )


def load_vocabulary_file(path) -> Vocabulary:
    with open(path, "r", encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    return load_vocabulary(doc)


def default_vocabulary() -> Vocabulary:
    """Core plus the shipped extension entries (see data/vocabulary_defaults.yaml)."""
    text = (
        importlib.resources.files("tracekg")
        .joinpath("data/vocabulary_defaults.yaml")
        .read_text(encoding="utf-8")
    )
    return load_vocabulary(yaml.safe_load(text))


def with_thresholds(vocab: Vocabulary, **overrides) -> Vocabulary:
    """Copy of ``vocab`` with threshold/option fields replaced."""
    clone = Vocabulary(
        classes=dict(vocab.classes),
        action_individuals=dict(vocab.action_individuals),
        context_individuals=dict(vocab.context_individuals),
        affordances=dict(vocab.affordances),
        age_classes=vocab.age_classes,
        thresholds=replace(vocab.thresholds, **overrides),
    )
    return clone
