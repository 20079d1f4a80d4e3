"""Labeled corpus generation: soundness, determinism, enumeration, demo content."""

import itertools

import pytest

from tracekg import namespaces as ns
from tracekg.datagen import (
    CANONICAL_SIZES,
    DatasetSpec,
    build_demo_dataset,
    dataset_directory,
    enumerate_suite_specs,
    generate_dataset,
    load_dataset,
    realize_event,
    write_dataset,
)
from tracekg.model import iri
from tracekg.queries import QueryEngine
from tracekg.reasoner import HIGH, LOW, MEDIUM, classify_all
from tracekg.turtle import serialize_turtle
from tracekg.vocabulary import default_vocabulary

from oracles import naive_co_attendees

VOCAB = default_vocabulary()
ALL_LEVELS = (HIGH, MEDIUM, LOW)


def test_spec_validation():
    with pytest.raises(ValueError):
        DatasetSpec("closeness", (HIGH, HIGH), 60, 50, 10, 1).validate()
    with pytest.raises(ValueError):
        DatasetSpec("sideways", (HIGH, HIGH), 10, 20, 10, 1).validate()


def test_level_triple_assembly():
    spec = DatasetSpec("crowdedness", (MEDIUM, LOW), 10, 20, 10, 1)
    assert spec.level_triple(HIGH) == (MEDIUM, HIGH, LOW)
    spec = DatasetSpec("enclosedness", (HIGH, LOW), 10, 20, 10, 1)
    assert spec.level_triple(MEDIUM) == (HIGH, LOW, MEDIUM)


def test_all_27_combinations_realizable_and_sound():
    for combo in itertools.product(ALL_LEVELS, repeat=3):
        graph, record = realize_event(combo, id_seed=5, vocab=VOCAB)
        result = classify_all(graph, VOCAB)
        got = (
            result.assignments[record.event].closeness,
            result.assignments[record.event].crowdedness,
            result.assignments[record.situation].enclosedness,
        )
        assert got == combo, combo


def test_all_low_event_is_outdoors_without_risk_features():
    graph, record = realize_event((LOW, LOW, LOW), id_seed=2, vocab=VOCAB)
    place = next(iter(graph.objects(iri(record.event), iri(ns.P_LOCATION))))
    types = {o.value for o in graph.objects(place, iri(ns.RDF_TYPE))}
    assert ns.plod("Park") in types
    contexts = graph.objects(iri(record.event), iri(ns.P_CONTEXT))
    assert contexts == []


def test_case_one_expected_counts():
    spec = DatasetSpec("closeness", (HIGH, HIGH), 10, 20, 100, 77)
    ds = generate_dataset(spec, VOCAB)
    counts = ds.expected
    assert counts.get("closeness", HIGH) == 10
    assert counts.get("closeness", MEDIUM) == 20
    assert counts.get("closeness", LOW) == 70
    assert counts.get("crowdedness", HIGH) == 100
    assert counts.get("enclosedness", HIGH) == 100
    assert counts.get("crowdedness", MEDIUM) == 0
    assert counts.get("enclosedness", MEDIUM) == 0
    assert counts.get("crowdedness", LOW) == 0
    assert counts.get("enclosedness", LOW) == 0


def test_counts_scale_with_size():
    big = generate_dataset(DatasetSpec("closeness", (HIGH, HIGH), 10, 20, 1000, 77), VOCAB)
    assert big.expected.get("closeness", HIGH) == 100
    assert big.expected.get("closeness", MEDIUM) == 200
    assert big.expected.get("closeness", LOW) == 700


def test_per_dimension_counts_sum_to_size():
    spec = DatasetSpec("enclosedness", (MEDIUM, LOW), 30, 60, 50, 3)
    ds = generate_dataset(spec, VOCAB)
    for dim in ("closeness", "crowdedness", "enclosedness"):
        assert sum(ds.expected.get(dim, lv) for lv in ALL_LEVELS) == 50


def test_same_seed_is_byte_identical():
    spec = DatasetSpec("crowdedness", (LOW, HIGH), 20, 40, 40, 11)
    a = serialize_turtle(generate_dataset(spec, VOCAB).graph)
    b = serialize_turtle(generate_dataset(spec, VOCAB).graph)
    assert a == b


def test_different_seed_changes_iris_not_counts():
    base = DatasetSpec("crowdedness", (LOW, HIGH), 20, 40, 40, 11)
    other = DatasetSpec("crowdedness", (LOW, HIGH), 20, 40, 40, 12)
    a = generate_dataset(base, VOCAB)
    b = generate_dataset(other, VOCAB)
    assert a.expected.as_dict() == b.expected.as_dict()
    assert {r.event for r in a.records}.isdisjoint({r.event for r in b.records})


def test_suite_enumeration_shape():
    specs = enumerate_suite_specs(100)
    assert len(specs) == 243
    assert len({s.label() for s in specs}) == 243
    first = specs[0]
    assert first.varied_dimension == "closeness"
    assert first.fixed_levels == (HIGH, HIGH)
    assert first.p_high == 10 and first.p_medium == 20
    assert len(CANONICAL_SIZES) * len(specs) == 729


def test_write_and_load_round_trip(tmp_path):
    spec = DatasetSpec("closeness", (MEDIUM, MEDIUM), 10, 20, 20, 8)
    ds = generate_dataset(spec, VOCAB)
    target = dataset_directory(tmp_path, spec)
    write_dataset(ds, target)
    assert target == tmp_path / "20" / "closeness_mm_p10m20"
    assert (target / "data.ttl").exists() and (target / "manifest.json").exists()
    loaded = load_dataset(target)
    assert loaded.spec == spec
    assert loaded.expected.as_dict() == ds.expected.as_dict()
    assert loaded.records == ds.records
    assert loaded.graph == ds.graph


# -- demo dataset -----------------------------------------------------------------


def test_demo_contains_the_dinner_event():
    graph = build_demo_dataset()
    dinner = iri(ns.plod_id("event_dinner"))
    agents = {o.value.rsplit("_", 1)[-1] for o in graph.objects(dinner, iri(ns.P_AGENT))}
    assert agents == {"A", "B", "C"}
    place = graph.object(dinner, iri(ns.P_LOCATION))
    types = {o.value for o in graph.objects(place, iri(ns.RDF_TYPE))}
    assert ns.plod("Restaurant") in types
    time_node = graph.object(dinner, iri(ns.P_TIME))
    begin = graph.object(time_node, iri(ns.P_HAS_BEGINNING)).as_datetime()
    end = graph.object(time_node, iri(ns.P_HAS_END)).as_datetime()
    assert begin.isoformat() == "2020-04-01T12:00:00"
    assert end.isoformat() == "2020-04-01T13:00:00"


def test_demo_intersections_return_bar_pair():
    graph = build_demo_dataset()
    rows = QueryEngine(graph, VOCAB).find_intersections()
    pairs = {(r.event1, r.event2) for r in rows}
    assert (ns.plod_id("event_c16"), ns.plod_id("event_a21")) in pairs


def test_demo_co_attendees_nonempty_and_oracle_consistent():
    graph = build_demo_dataset()
    classification = classify_all(graph, VOCAB)
    engine = QueryEngine(graph, VOCAB, classification)
    person = ns.plod_id("person_a_A")
    rows = engine.co_attendees(person, "ClosedSpace")
    assert rows
    expected = naive_co_attendees(
        graph, classification.inferred, VOCAB, person, ns.plod("ClosedSpace")
    )
    assert {r.agent: r.cnt for r in rows} == expected
