"""Synthetic evaluation corpus with known ground-truth labels.

The canonical suite enumerates 27 case combinations (3 varied dimensions
x 9 fixed-level pairs) x 9 proportion patterns = 243 parameterized
datasets per size. Every record is one event plus one situation at the
event's own place, realized so its most-specific (closeness,
crowdedness, enclosedness) levels are known by construction; running
the classifier must reproduce them exactly.

Realization has to resolve cross-dimension interference, because
behavioral contexts feed both crowdedness and closeness, and a matched
situation's spatial contexts feed both enclosedness and crowdedness:

* crowdedness low with closeness medium/high forces at least one
  behavioral context, so the pooled spatial count must be zero. With
  enclosedness high the situation must carry a spatial context, so the
  situation gets a time window disjoint from the event's and stays out
  of the pool (its own enclosedness level is unaffected).
* enclosedness medium forbids spatial contexts on the situation, so a
  crowdedness target is fed by spatial contexts on the event itself.
* closeness medium needs a place whose afforded droplet-action count
  stays below the high threshold; closeness low uses a duration at or
  below the threshold, which blocks the rule regardless of actions.

Each record keeps to its own place instance so no contexts leak between
records through situation pooling.
"""

from __future__ import annotations

import json
import random
import zlib
from dataclasses import dataclass
from datetime import datetime, timedelta
from pathlib import Path
from typing import Iterable, Iterator, Optional

from . import namespaces as ns
from . import vocabulary as vo
from .model import Graph, dt_literal, int_literal, literal, spo
from .reasoner import HIGH, LOW, MEDIUM
from .turtle import parse_turtle, serialize_turtle
from .vocabulary import Vocabulary, default_vocabulary

DIMENSIONS = ("closeness", "crowdedness", "enclosedness")
LEVELS = (HIGH, MEDIUM, LOW)
_LEVEL_LETTER = {HIGH: "h", MEDIUM: "m", LOW: "l"}

CANONICAL_P_HIGH = (10, 20, 30)
CANONICAL_P_MEDIUM = (20, 40, 60)
CANONICAL_SIZES = (100, 500, 1000)

_BASE_DAY = datetime(2020, 4, 1)


class InfeasibleCombinationError(ValueError):
    """The requested level triple cannot be realized under the vocabulary."""


@dataclass(frozen=True)
class DatasetSpec:
    """One parameterization of the synthetic corpus.

    ``fixed_levels`` holds the levels of the two non-varied dimensions in
    canonical dimension order (closeness, crowdedness, enclosedness).
    """

    varied_dimension: str
    fixed_levels: tuple[str, str]
    p_high: int
    p_medium: int
    size: int
    seed: int

    def validate(self) -> None:
        if self.varied_dimension not in DIMENSIONS:
            raise ValueError(f"unknown dimension {self.varied_dimension!r}")
        if any(lv not in LEVELS for lv in self.fixed_levels):
            raise ValueError(f"bad fixed levels {self.fixed_levels!r}")
        if self.p_high + self.p_medium > 100:
            raise ValueError("p_high + p_medium exceeds 100%")
        if self.size < 0:
            raise ValueError("negative size")

    def case_name(self) -> str:
        letters = "".join(_LEVEL_LETTER[lv] for lv in self.fixed_levels)
        return f"{self.varied_dimension}_{letters}"

    def label(self) -> str:
        return f"{self.case_name()}_p{self.p_high}m{self.p_medium}"

    def level_triple(self, varied_level: str) -> tuple[str, str, str]:
        """Assemble (closeness, crowdedness, enclosedness) with the varied slot filled."""
        others = iter(self.fixed_levels)
        return tuple(
            varied_level if dim == self.varied_dimension else next(others)
            for dim in DIMENSIONS
        )

    def as_dict(self) -> dict:
        return {
            "varied_dimension": self.varied_dimension,
            "fixed_levels": list(self.fixed_levels),
            "p_high": self.p_high,
            "p_medium": self.p_medium,
            "size": self.size,
            "seed": self.seed,
        }

    @staticmethod
    def from_dict(d: dict) -> "DatasetSpec":
        return DatasetSpec(
            varied_dimension=d["varied_dimension"],
            fixed_levels=tuple(d["fixed_levels"]),
            p_high=int(d["p_high"]),
            p_medium=int(d["p_medium"]),
            size=int(d["size"]),
            seed=int(d["seed"]),
        )


@dataclass(frozen=True)
class EventRecord:
    """Ground truth for one generated event/situation pair."""

    event: str
    situation: str
    levels: tuple[str, str, str]

    def as_dict(self) -> dict:
        return {
            "event": self.event,
            "situation": self.situation,
            **dict(zip(DIMENSIONS, self.levels)),
        }


@dataclass
class ExpectedCounts:
    """Most-specific level counts, 3 dimensions x 3 levels."""

    counts: dict[tuple[str, str], int]

    @staticmethod
    def from_records(records: Iterable[EventRecord]) -> "ExpectedCounts":
        counts = {(dim, lv): 0 for dim in DIMENSIONS for lv in LEVELS}
        for record in records:
            for dim, lv in zip(DIMENSIONS, record.levels):
                counts[(dim, lv)] += 1
        return ExpectedCounts(counts)

    def get(self, dimension: str, level: str) -> int:
        return self.counts[(dimension, level)]

    def as_dict(self) -> dict:
        return {
            dim: {lv: self.counts[(dim, lv)] for lv in LEVELS} for dim in DIMENSIONS
        }

    @staticmethod
    def from_dict(d: dict) -> "ExpectedCounts":
        return ExpectedCounts(
            {(dim, lv): int(d[dim][lv]) for dim in DIMENSIONS for lv in LEVELS}
        )


@dataclass
class GeneratedDataset:
    spec: DatasetSpec
    graph: Graph
    records: list[EventRecord]
    expected: ExpectedCounts


# ---------------------------------------------------------------------------
# Realization plan


@dataclass
class _Plan:
    place_class: str
    droplet_actions: int
    duration_minutes: int
    behavioral_on_event: int
    spatial_on_event: int
    spatial_on_situation: int
    situation_matched: bool


# Concrete place choice pools; droplet affordance counts are verified
# against the active vocabulary before use.
_HIGH_AFFORD_INDOOR = (vo.RESTAURANT, vo.BAR)
_NEUTRAL_INDOOR = (vo.GYM, vo.BUS, ns.plod("Train"))
_OUTDOOR = (ns.plod("Park"),)

_BEHAVIORAL_POOL = (vo.FACE_TO_FACE, vo.RELAX)
_SPATIAL_POOL = (vo.CROWDED, vo.SMALL_SPACE, ns.plod("poorVentilation"))
_DROPLET_POOL = (vo.TALK, vo.REMOVE_MASK, ns.plod("eat"), ns.plod("sing"), ns.plod("shout"))
_INDIRECT_POOL = (vo.SHARE_THING, ns.plod("touchSurface"))


def _check_pools(vocab: Vocabulary) -> None:
    problems = []
    for ind in _BEHAVIORAL_POOL:
        if not vocab.is_behavioral_context(ind):
            problems.append(f"{ind} is not a behavioral context")
    for ind in _SPATIAL_POOL:
        if not vocab.is_spatial_context(ind):
            problems.append(f"{ind} is not a spatial context")
    for ind in _DROPLET_POOL:
        if not vocab.is_droplet_action(ind):
            problems.append(f"{ind} is not a droplet-reachable action")
    for cls in _HIGH_AFFORD_INDOOR + _NEUTRAL_INDOOR:
        if cls not in vocab.classes:
            problems.append(f"{cls} is not a registered place class")
        elif not (
            vocab.is_subclass_of(cls, vo.INDOOR_FACILITY)
            or vocab.is_subclass_of(cls, vo.PUBLIC_TRANSPORT)
        ):
            problems.append(f"{cls} is not an enclosed place class")
    if problems:
        raise InfeasibleCombinationError(
            "generator pools do not fit the vocabulary: " + "; ".join(problems)
        )


def _droplet_afford_count(vocab: Vocabulary, place_class: str) -> int:
    return sum(1 for a in vocab.affordances_of(place_class) if vocab.is_droplet_action(a))


def plan_record(
    levels: tuple[str, str, str], rng: random.Random, vocab: Vocabulary
) -> _Plan:
    """Pick place, contexts, actions, duration, and situation matching for
    one record so classification lands exactly on ``levels``.
    """
    closeness, crowdedness, enclosedness = levels
    t = vocab.thresholds

    if closeness == MEDIUM and t.medium_droplet_count >= t.high_droplet_count:
        raise InfeasibleCombinationError(
            "medium closeness needs medium droplet threshold below the high one"
        )
    if crowdedness == MEDIUM and (
        t.medium_crowding_spatial_count >= t.high_crowding_spatial_count
    ):
        raise InfeasibleCombinationError(
            "medium crowdedness needs medium spatial threshold below the high one"
        )

    # Place: enclosedness picks indoor vs outdoor; closeness constrains
    # how many droplet actions the place may afford.
    strict_low = t.close_contact_precedence == vo.PRECEDENCE_DL_STANDARD
    if enclosedness == LOW:
        pool = _OUTDOOR
    elif closeness == MEDIUM or (closeness == LOW and strict_low):
        pool = _NEUTRAL_INDOOR
    else:
        pool = _HIGH_AFFORD_INDOOR + _NEUTRAL_INDOOR
    place_class = rng.choice(pool)
    afford = _droplet_afford_count(vocab, place_class)
    if closeness == MEDIUM and afford >= t.high_droplet_count:
        raise InfeasibleCombinationError(
            f"no place class with droplet affordances below {t.high_droplet_count}"
        )

    # Context budget. Pooled spatial = event's own + matched situation's.
    need_spatial = {
        HIGH: t.high_crowding_spatial_count,
        MEDIUM: t.medium_crowding_spatial_count,
        LOW: 0,
    }[crowdedness]
    behavioral = t.behavioral_count if (crowdedness != LOW or closeness != LOW) else 0
    matched = True
    spatial_on_event = 0
    if crowdedness == LOW:
        if closeness != LOW:
            # Behavioral contexts are forced by the closeness rule, so the
            # pooled spatial count must stay zero.
            if enclosedness == HIGH:
                spatial_on_situation = 1
                matched = False
            else:
                spatial_on_situation = 0
        else:
            behavioral = 0
            spatial_on_situation = 1 if enclosedness == HIGH else 0
    else:
        if enclosedness == MEDIUM:
            spatial_on_situation = 0
            spatial_on_event = need_spatial
        else:
            spatial_on_situation = max(need_spatial, 1 if enclosedness == HIGH else 0)
    if spatial_on_situation + spatial_on_event > len(_SPATIAL_POOL):
        raise InfeasibleCombinationError(
            f"spatial context demand exceeds the {len(_SPATIAL_POOL)} registered individuals"
        )
    if behavioral > len(_BEHAVIORAL_POOL):
        raise InfeasibleCombinationError("behavioral context demand exceeds the registry")

    if closeness == HIGH:
        droplet = t.high_droplet_count
        duration = t.duration_minutes + rng.randrange(15, 106)
    elif closeness == MEDIUM:
        droplet = t.medium_droplet_count
        duration = t.duration_minutes + rng.randrange(15, 106)
    else:
        droplet = 0
        duration = max(1, t.duration_minutes - rng.randrange(5, 11))
    if droplet > len(_DROPLET_POOL):
        raise InfeasibleCombinationError("droplet action demand exceeds the registry")

    return _Plan(
        place_class=place_class,
        droplet_actions=droplet,
        duration_minutes=duration,
        behavioral_on_event=behavioral,
        spatial_on_event=spatial_on_event,
        spatial_on_situation=spatial_on_situation,
        situation_matched=matched,
    )


# ---------------------------------------------------------------------------
# Triple emission


def _emit_time(
    graph: Graph,
    node: str,
    begin: datetime,
    end: datetime,
    duration: Optional[int],
    rng: Optional[random.Random] = None,
) -> None:
    graph.add(spo(node, ns.P_HAS_BEGINNING, dt_literal(begin)))
    graph.add(spo(node, ns.P_HAS_END, dt_literal(end)))
    if duration is not None:
        dur_node = node + "_d"
        graph.add(spo(node, ns.P_HAS_DURATION, dur_node))
        graph.add(spo(dur_node, ns.P_NUMERIC_DURATION, int_literal(duration)))
    if rng is not None and rng.random() < 0.1:
        # Occasional uncertain bounds; they widen the possible-mode interval only.
        graph.add(spo(node, ns.P_POSSIBLE_BEGIN, dt_literal(begin - timedelta(minutes=30))))
        graph.add(spo(node, ns.P_POSSIBLE_END, dt_literal(end + timedelta(minutes=30))))


def realize_record(
    levels: tuple[str, str, str],
    index: int,
    tag: str,
    rng: random.Random,
    graph: Graph,
    person_pool: list[str],
    vocab: Vocabulary,
    previous_event: Optional[str] = None,
) -> EventRecord:
    """Emit one event, its place, and its situation; returns the ground truth."""
    plan = plan_record(levels, rng, vocab)
    event = ns.plod_id(f"event_{tag}_{index}")
    place = ns.plod_id(f"place_{tag}_{index}")
    situation = ns.plod_id(f"situation_{tag}_{index}")
    time_node = ns.plod_id(f"time_{tag}_{index}")

    graph.add(spo(place, ns.RDF_TYPE, plan.place_class))
    graph.add(spo(place, ns.P_CITY, literal(f"city_{rng.randrange(5)}")))

    graph.add(spo(event, ns.RDF_TYPE, ns.C_EVENT))
    graph.add(spo(event, ns.P_LOCATION, place))
    for agent in rng.sample(person_pool, k=min(len(person_pool), rng.randrange(1, 4))):
        graph.add(spo(event, ns.P_AGENT, agent))
    for action in rng.sample(_DROPLET_POOL, k=plan.droplet_actions):
        graph.add(spo(event, ns.P_ACTION, action))
    if rng.random() < 0.15:
        graph.add(spo(event, ns.P_ACTION, rng.choice(_INDIRECT_POOL)))
    for ctx in rng.sample(_BEHAVIORAL_POOL, k=plan.behavioral_on_event):
        graph.add(spo(event, ns.P_CONTEXT, ctx))
    spatial = rng.sample(_SPATIAL_POOL, k=plan.spatial_on_event + plan.spatial_on_situation)
    for ctx in spatial[: plan.spatial_on_event]:
        graph.add(spo(event, ns.P_CONTEXT, ctx))
    if previous_event is not None and rng.random() < 0.2:
        graph.add(spo(event, ns.P_FOLLOWING_EVENT, previous_event))

    begin = _BASE_DAY + timedelta(
        days=rng.randrange(28), minutes=rng.randrange(6 * 60, 22 * 60)
    )
    end = begin + timedelta(minutes=plan.duration_minutes)
    graph.add(spo(event, ns.P_TIME, time_node))
    _emit_time(graph, time_node, begin, end, plan.duration_minutes, rng)

    graph.add(spo(situation, ns.RDF_TYPE, ns.C_SITUATION))
    graph.add(spo(situation, ns.P_IS_SITUATION_OF, place))
    for ctx in spatial[plan.spatial_on_event :]:
        graph.add(spo(situation, ns.P_CONTEXT, ctx))
    if not plan.situation_matched:
        # Disjoint window: the situation keeps its own enclosedness but
        # stays out of the event's context pool.
        sit_time = ns.plod_id(f"sittime_{tag}_{index}")
        graph.add(spo(situation, ns.P_TIME, sit_time))
        _emit_time(graph, sit_time, end + timedelta(minutes=60), end + timedelta(minutes=120), None)

    return EventRecord(event=event, situation=situation, levels=levels)


def realize_event(
    levels: tuple[str, str, str], id_seed: int, vocab: Optional[Vocabulary] = None
) -> tuple[Graph, EventRecord]:
    """Standalone single-record graph for a level triple (testing hook)."""
    vocab = vocab or default_vocabulary()
    _check_pools(vocab)
    rng = random.Random(id_seed)
    graph = Graph()
    persons = _emit_persons(graph, rng, f"x{id_seed}", 3)
    record = realize_record(levels, 0, f"x{id_seed}", rng, graph, persons, vocab)
    return graph, record


def _emit_persons(graph: Graph, rng: random.Random, tag: str, count: int) -> list[str]:
    persons = []
    for k in range(count):
        person = ns.plod_id(f"person_{tag}_{k}")
        graph.add(spo(person, ns.RDF_TYPE, ns.C_PERSON))
        age_node = ns.plod_id(f"age_{tag}_{k}")
        graph.add(spo(person, ns.P_AGE, age_node))
        graph.add(spo(age_node, ns.RDF_TYPE, ns.C_AGE))
        graph.add(spo(age_node, ns.P_VALUE, int_literal(rng.randrange(5, 90))))
        persons.append(person)
    return persons


# ---------------------------------------------------------------------------
# Dataset and suite generation


def _dataset_tag(spec: DatasetSpec) -> str:
    key = f"{spec.label()}|{spec.size}|{spec.seed}"
    return format(zlib.crc32(key.encode()), "08x")


def generate_dataset(
    spec: DatasetSpec, vocab: Optional[Vocabulary] = None
) -> GeneratedDataset:
    """Generate ``spec.size`` events: round(p_high*size) at high,
    round(p_medium*size) at medium, remainder low on the varied
    dimension; the other two dimensions fixed for every event.
    """
    spec.validate()
    vocab = vocab or default_vocabulary()
    _check_pools(vocab)
    rng = random.Random(spec.seed)
    tag = _dataset_tag(spec)
    graph = Graph()
    n_high = round(spec.p_high * spec.size / 100)
    n_medium = round(spec.p_medium * spec.size / 100)
    n_low = spec.size - n_high - n_medium
    labels = [HIGH] * n_high + [MEDIUM] * n_medium + [LOW] * n_low

    persons = _emit_persons(graph, rng, tag, max(3, spec.size // 10))
    records: list[EventRecord] = []
    previous = None
    for index, varied_level in enumerate(labels):
        levels = spec.level_triple(varied_level)
        record = realize_record(levels, index, tag, rng, graph, persons, vocab, previous)
        records.append(record)
        previous = record.event
    return GeneratedDataset(
        spec=spec,
        graph=graph,
        records=records,
        expected=ExpectedCounts.from_records(records),
    )


def generate_mixed_dataset(
    size: int, seed: int = 1, vocab: Optional[Vocabulary] = None
) -> GeneratedDataset:
    """One dataset cycling through all 27 level combinations (stress/test use)."""
    vocab = vocab or default_vocabulary()
    _check_pools(vocab)
    combos = [(c, r, e) for c in LEVELS for r in LEVELS for e in LEVELS]
    rng = random.Random(seed)
    tag = f"mix{format(zlib.crc32(f'{size}|{seed}'.encode()), '08x')}"
    graph = Graph()
    persons = _emit_persons(graph, rng, tag, max(3, size // 10))
    records = []
    previous = None
    for index in range(size):
        record = realize_record(
            combos[index % len(combos)], index, tag, rng, graph, persons, vocab, previous
        )
        records.append(record)
        previous = record.event
    spec = DatasetSpec("closeness", (HIGH, HIGH), 0, 0, size, seed)
    return GeneratedDataset(
        spec=spec, graph=graph, records=records, expected=ExpectedCounts.from_records(records)
    )


def enumerate_suite_specs(size: int, base_seed: int = 0) -> list[DatasetSpec]:
    """The canonical 243 specs for one size, in enumeration order:
    varied dimension, fixed-level pair, p_high, p_medium. The first spec
    varies closeness with the other dimensions fixed high at 10%/20%.
    """
    specs = []
    for varied in DIMENSIONS:
        for f1 in LEVELS:
            for f2 in LEVELS:
                for p_high in CANONICAL_P_HIGH:
                    for p_medium in CANONICAL_P_MEDIUM:
                        key = f"{varied}|{f1}{f2}|{p_high}|{p_medium}|{size}|{base_seed}"
                        seed = zlib.crc32(key.encode())
                        specs.append(
                            DatasetSpec(varied, (f1, f2), p_high, p_medium, size, seed)
                        )
    return specs


def generate_suite(
    sizes: Iterable[int],
    base_seed: int = 0,
    vocab: Optional[Vocabulary] = None,
) -> Iterator[GeneratedDataset]:
    """All canonical datasets for the given sizes (243 per size)."""
    vocab = vocab or default_vocabulary()
    for size in sizes:
        for spec in enumerate_suite_specs(size, base_seed):
            yield generate_dataset(spec, vocab)


# ---------------------------------------------------------------------------
# Suite persistence


def write_dataset(dataset: GeneratedDataset, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "data.ttl").write_text(serialize_turtle(dataset.graph), encoding="utf-8")
    manifest = {
        "spec": dataset.spec.as_dict(),
        "expected_counts": dataset.expected.as_dict(),
        "records": [r.as_dict() for r in dataset.records],
    }
    (directory / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def dataset_directory(root: str | Path, spec: DatasetSpec) -> Path:
    return Path(root) / str(spec.size) / spec.label()


def write_suite(root: str | Path, sizes: Iterable[int], base_seed: int = 0) -> int:
    vocab = default_vocabulary()
    written = 0
    for dataset in generate_suite(sizes, base_seed, vocab):
        write_dataset(dataset, dataset_directory(root, dataset.spec))
        written += 1
    return written


def load_dataset(directory: str | Path) -> GeneratedDataset:
    directory = Path(directory)
    manifest = json.loads((directory / "manifest.json").read_text(encoding="utf-8"))
    graph = parse_turtle((directory / "data.ttl").read_text(encoding="utf-8"))
    records = [
        EventRecord(
            event=r["event"],
            situation=r["situation"],
            levels=tuple(r[dim] for dim in DIMENSIONS),
        )
        for r in manifest["records"]
    ]
    return GeneratedDataset(
        spec=DatasetSpec.from_dict(manifest["spec"]),
        graph=graph,
        records=records,
        expected=ExpectedCounts.from_dict(manifest["expected_counts"]),
    )


# ---------------------------------------------------------------------------
# Demo dataset


def _add_person(graph: Graph, local: str, age: int, patient: bool = False) -> str:
    person = ns.plod_id(local)
    graph.add(spo(person, ns.RDF_TYPE, ns.C_PATIENT if patient else ns.C_PERSON))
    age_node = ns.plod_id(f"age_{local}")
    graph.add(spo(person, ns.P_AGE, age_node))
    graph.add(spo(age_node, ns.RDF_TYPE, ns.C_AGE))
    graph.add(spo(age_node, ns.P_VALUE, int_literal(age)))
    return person


def _add_place(graph: Graph, local: str, place_class: str, city: Optional[str]) -> str:
    place = ns.plod_id(local)
    graph.add(spo(place, ns.RDF_TYPE, place_class))
    if city:
        graph.add(spo(place, ns.P_CITY, literal(city)))
    return place


def _add_situation(
    graph: Graph, local: str, place: str, contexts: Iterable[str]
) -> str:
    situation = ns.plod_id(local)
    graph.add(spo(situation, ns.RDF_TYPE, ns.C_SITUATION))
    graph.add(spo(situation, ns.P_IS_SITUATION_OF, place))
    for ctx in contexts:
        graph.add(spo(situation, ns.P_CONTEXT, ctx))
    return situation


def _add_event(
    graph: Graph,
    local: str,
    place: str,
    agents: Iterable[str],
    actions: Iterable[str],
    contexts: Iterable[str],
    begin: datetime,
    minutes: int,
) -> str:
    event = ns.plod_id(local)
    graph.add(spo(event, ns.RDF_TYPE, ns.C_EVENT))
    graph.add(spo(event, ns.P_LOCATION, place))
    for agent in agents:
        graph.add(spo(event, ns.P_AGENT, agent))
    for action in actions:
        graph.add(spo(event, ns.P_ACTION, action))
    for ctx in contexts:
        graph.add(spo(event, ns.P_CONTEXT, ctx))
    time_node = ns.plod_id(f"time_{local}")
    graph.add(spo(event, ns.P_TIME, time_node))
    _emit_time(graph, time_node, begin, begin + timedelta(minutes=minutes), minutes)
    return event


def build_demo_dataset() -> Graph:
    """Small hand-authored dataset: the restaurant dinner, the crowded
    bus ride, the intersecting bar pair in minato-ku, and seeded filler
    events for the co-attendee and neighborhood demos.
    """
    graph = Graph()
    rng = random.Random(42)
    ages = {"A": 34, "B": 58, "C": 67, "D": 29, "E": 41, "F": 23, "G": 35, "H": 52, "I": 8, "J": 73}
    people = {
        letter: _add_person(graph, f"person_a_{letter}", age, patient=(letter == "A"))
        for letter, age in ages.items()
    }
    graph.add(spo(people["A"], ns.P_HEALTH_CONDITION, literal("fever")))
    graph.add(spo(people["B"], ns.P_HOME_LOCATION, ns.plod_id("home_b")))

    # Crowded bus ride: event_0 on Bus_0 with a timeless situation.
    bus_0 = _add_place(graph, "Bus_0", vo.BUS, None)
    _add_situation(graph, "situation_0", bus_0, [vo.CROWDED, vo.SMALL_SPACE])
    _add_event(
        graph,
        "event_0",
        bus_0,
        [people["A"], people["B"]],
        [vo.TALK],
        [vo.FACE_TO_FACE, vo.RELAX],
        datetime(2020, 4, 2, 8, 30),
        30,
    )

    # Restaurant dinner, noon to one o'clock: persons A, B, C.
    restaurant_1 = _add_place(graph, "restaurant_1", vo.RESTAURANT, "chiyoda-ku")
    _add_situation(graph, "situation_restaurant_1", restaurant_1, [vo.SMALL_SPACE])
    dinner = _add_event(
        graph,
        "event_dinner",
        restaurant_1,
        [people["A"], people["B"], people["C"]],
        [ns.plod("eat")],
        [vo.RELAX],
        datetime(2020, 4, 1, 12, 0),
        60,
    )
    graph.add(spo(ns.plod_id("event_0"), ns.P_FOLLOWING_EVENT, dinner))

    # Two events intersecting in time at bar_a3.
    bar_a3 = _add_place(graph, "bar_a3", vo.BAR, "minato-ku")
    _add_situation(graph, "situation_bar_a3", bar_a3, [vo.CROWDED])
    _add_event(
        graph,
        "event_c16",
        bar_a3,
        [people["C"], people["D"]],
        [vo.TALK],
        [vo.FACE_TO_FACE],
        datetime(2020, 4, 5, 19, 0),
        120,
    )
    _add_event(
        graph,
        "event_a21",
        bar_a3,
        [people["A"], people["E"]],
        [vo.TALK],
        [vo.RELAX],
        datetime(2020, 4, 5, 20, 0),
        120,
    )

    # A room contained in a venue, for place-containment queries: the two
    # events below overlap in time across the containment link.
    restaurant_2 = _add_place(graph, "restaurant_2", vo.RESTAURANT, "shibuya-ku")
    room_r2 = _add_place(graph, "room_r2", vo.RESTAURANT, "shibuya-ku")
    graph.add(spo(room_r2, ns.P_LOCATION, restaurant_2))
    _add_situation(graph, "situation_restaurant_2", restaurant_2, [vo.CROWDED, vo.SMALL_SPACE])
    _add_event(
        graph,
        "event_room",
        room_r2,
        [people["F"], people["G"]],
        [vo.TALK],
        [vo.FACE_TO_FACE],
        datetime(2020, 4, 9, 18, 0),
        90,
    )
    _add_event(
        graph,
        "event_venue",
        restaurant_2,
        [people["H"]],
        [ns.plod("eat")],
        [vo.RELAX],
        datetime(2020, 4, 9, 18, 30),
        60,
    )

    filler_places = [
        restaurant_1,
        restaurant_2,
        room_r2,
        bar_a3,
        bus_0,
        _add_place(graph, "bar_b7", vo.BAR, "minato-ku"),
        _add_place(graph, "gym_1", vo.GYM, "chiyoda-ku"),
        _add_place(graph, "bus_7", vo.BUS, None),
        _add_place(graph, "park_1", ns.plod("Park"), "setagaya-ku"),
        _add_place(graph, "karaoke_1", ns.plod("Karaoke"), "shibuya-ku"),
    ]
    _add_situation(graph, "situation_gym_1", filler_places[6], [])
    _add_situation(graph, "situation_karaoke_1", filler_places[9], [vo.SMALL_SPACE])

    letters = sorted(people)
    previous = None
    for k in range(40):
        place = filler_places[rng.randrange(len(filler_places))]
        agents = [people[x] for x in rng.sample(letters, k=rng.randrange(1, 4))]
        actions = list(rng.sample(_DROPLET_POOL, k=rng.randrange(0, 3)))
        contexts = list(rng.sample(_BEHAVIORAL_POOL + _SPATIAL_POOL, k=rng.randrange(0, 3)))
        begin = datetime(2020, 4, 1) + timedelta(
            days=rng.randrange(5), minutes=rng.randrange(8 * 60, 22 * 60)
        )
        event = _add_event(
            graph, f"event_f{k}", place, agents, actions, contexts, begin, rng.randrange(10, 150)
        )
        if previous is not None and rng.random() < 0.25:
            graph.add(spo(event, ns.P_FOLLOWING_EVENT, previous))
        previous = event

    # One event with uncertain bounds and a part-of-day hint.
    evening_walk = _add_event(
        graph,
        "event_walk",
        filler_places[8],
        [people["F"]],
        [],
        [],
        datetime(2020, 4, 8, 18, 0),
        45,
    )
    walk_time = ns.plod_id("time_event_walk")
    graph.add(spo(walk_time, ns.P_POSSIBLE_BEGIN, dt_literal(datetime(2020, 4, 8, 17, 30))))
    graph.add(spo(walk_time, ns.P_POSSIBLE_END, dt_literal(datetime(2020, 4, 8, 19, 15))))
    graph.add(spo(walk_time, ns.P_PART_OF_DAY, ns.plod("Evening")))
    graph.add(spo(evening_walk, ns.P_FOLLOWING_EVENT, ns.plod_id("event_f39")))
    return graph


# ---------------------------------------------------------------------------
# Random contact graph (shared places; for query testing, no label bookkeeping)


def generate_contact_graph(n_events: int, seed: int = 7) -> Graph:
    """Events across a shared pool of persons and venues (with rooms
    contained in venues), dense enough in time that intersections,
    co-attendance, and pooling actually occur. Labels are not tracked.
    """
    rng = random.Random(seed)
    graph = Graph()
    tag = f"cg{seed}"
    persons = _emit_persons(graph, rng, tag, max(4, n_events // 10))
    place_classes = _HIGH_AFFORD_INDOOR + _NEUTRAL_INDOOR + _OUTDOOR
    places: list[str] = []
    for v in range(max(2, n_events // 20)):
        venue = ns.plod_id(f"venue_{tag}_{v}")
        graph.add(spo(venue, ns.RDF_TYPE, rng.choice(place_classes)))
        graph.add(spo(venue, ns.P_CITY, literal(f"city_{v % 3}")))
        places.append(venue)
        for r in range(rng.randrange(0, 3)):
            room = ns.plod_id(f"room_{tag}_{v}_{r}")
            graph.add(spo(room, ns.RDF_TYPE, rng.choice(place_classes)))
            graph.add(spo(room, ns.P_LOCATION, venue))
            places.append(room)
        if rng.random() < 0.6:
            situation = ns.plod_id(f"vsit_{tag}_{v}")
            graph.add(spo(situation, ns.RDF_TYPE, ns.C_SITUATION))
            graph.add(spo(situation, ns.P_IS_SITUATION_OF, venue))
            for ctx in rng.sample(_SPATIAL_POOL, k=rng.randrange(0, 3)):
                graph.add(spo(situation, ns.P_CONTEXT, ctx))
            if rng.random() < 0.5:
                sit_time = ns.plod_id(f"vsittime_{tag}_{v}")
                begin = _BASE_DAY + timedelta(minutes=rng.randrange(0, 3 * 24 * 60))
                graph.add(spo(situation, ns.P_TIME, sit_time))
                _emit_time(graph, sit_time, begin, begin + timedelta(minutes=180), None)
    for index in range(n_events):
        event = ns.plod_id(f"event_{tag}_{index}")
        graph.add(spo(event, ns.RDF_TYPE, ns.C_EVENT))
        graph.add(spo(event, ns.P_LOCATION, rng.choice(places)))
        for agent in rng.sample(persons, k=rng.randrange(1, 4)):
            graph.add(spo(event, ns.P_AGENT, agent))
        for action in rng.sample(_DROPLET_POOL, k=rng.randrange(0, 3)):
            graph.add(spo(event, ns.P_ACTION, action))
        for ctx in rng.sample(_BEHAVIORAL_POOL + _SPATIAL_POOL, k=rng.randrange(0, 3)):
            graph.add(spo(event, ns.P_CONTEXT, ctx))
        time_node = ns.plod_id(f"etime_{tag}_{index}")
        begin = _BASE_DAY + timedelta(minutes=rng.randrange(0, 3 * 24 * 60))
        duration = rng.randrange(5, 181)
        graph.add(spo(event, ns.P_TIME, time_node))
        _emit_time(
            graph, time_node, begin, begin + timedelta(minutes=duration), duration, rng
        )
    return graph
