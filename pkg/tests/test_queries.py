"""Spatiotemporal intersections, co-attendee ranking, neighborhood expansion."""

import random
from datetime import datetime

import pytest

from tracekg import namespaces as ns
from tracekg import vocabulary as vo
from tracekg.datagen import build_demo_dataset, generate_contact_graph
from tracekg.model import Graph, spo
from tracekg.queries import QueryEngine, QueryScope, UnknownEntityError
from tracekg.reasoner import classify_all
from tracekg.vocabulary import default_vocabulary

from oracles import naive_bfs_nodes, naive_co_attendees, naive_intersections

VOCAB = default_vocabulary()


def demo_engine():
    graph = build_demo_dataset()
    return QueryEngine(graph, VOCAB, classify_all(graph, VOCAB))


def contact_engine(n, seed):
    graph = generate_contact_graph(n, seed=seed)
    return QueryEngine(graph, VOCAB, classify_all(graph, VOCAB))


# -- intersections -------------------------------------------------------------


def test_demo_contains_bar_pair_in_both_orders():
    rows = demo_engine().find_intersections()
    pairs = {(r.event1, r.event2): r for r in rows}
    c16 = ns.plod_id("event_c16")
    a21 = ns.plod_id("event_a21")
    assert (c16, a21) in pairs and (a21, c16) in pairs
    row = pairs[(c16, a21)]
    assert row.place1 == row.place2 == ns.plod_id("bar_a3")
    assert row.city1 == row.city2 == "minato-ku"


def test_containment_pair_found():
    rows = demo_engine().find_intersections()
    pairs = {(r.event1, r.event2) for r in rows}
    assert (ns.plod_id("event_room"), ns.plod_id("event_venue")) in pairs


def test_single_event_graph_has_no_intersections():
    graph = Graph()
    place = ns.plod_id("p")
    graph.add(spo(place, ns.RDF_TYPE, vo.BAR))
    event = ns.plod_id("e")
    graph.add(spo(event, ns.RDF_TYPE, ns.C_EVENT))
    graph.add(spo(event, ns.P_LOCATION, place))
    assert QueryEngine(graph, VOCAB).find_intersections() == []


def test_intersections_match_quadratic_oracle_on_1000_events():
    graph = generate_contact_graph(1000, seed=31)
    engine = QueryEngine(graph, VOCAB)
    got = {
        (r.event1, r.place1, r.city1 or "", r.event2, r.place2, r.city2 or "")
        for r in engine.find_intersections()
    }
    assert got == naive_intersections(graph)


def test_intersection_symmetry_and_no_self_pairs():
    engine = contact_engine(300, seed=5)
    rows = engine.find_intersections()
    pairs = {(r.event1, r.event2) for r in rows}
    assert pairs, "expected a dense graph to intersect"
    for e1, e2 in pairs:
        assert e1 != e2
        assert (e2, e1) in pairs


def test_scope_filters():
    engine = demo_engine()
    bar = ns.plod_id("bar_a3")
    in_bar = engine.find_intersections(QueryScope(place=bar))
    assert in_bar and all(r.place1 == bar or r.place2 == bar for r in in_bar)
    in_city = engine.find_intersections(QueryScope(city="minato-ku"))
    assert {r.city1 for r in in_city} == {"minato-ku"}
    nothing = engine.find_intersections(
        QueryScope(begin=datetime(2021, 1, 1), end=datetime(2021, 1, 2))
    )
    assert nothing == []


# -- co-attendees ----------------------------------------------------------------


def test_person_with_no_events_yields_empty_plus_diagnostic():
    engine = demo_engine()
    rows = engine.co_attendees(ns.plod_id("person_nobody"), "ClosedSpace")
    assert rows == []
    assert any(d.code == "unknown-person" for d in engine.diagnostics)


def test_querying_person_never_in_own_result():
    engine = demo_engine()
    person = ns.plod_id("person_a_A")
    rows = engine.co_attendees(person, "ClosedSpace")
    assert rows
    assert person not in {r.agent for r in rows}


def test_rows_sorted_by_count_then_agent():
    rows = demo_engine().co_attendees(ns.plod_id("person_a_A"), "ClosedSpace")
    assert rows == sorted(rows, key=lambda r: (-r.cnt, r.agent))


def test_unknown_risk_class_raises():
    with pytest.raises(UnknownEntityError):
        demo_engine().co_attendees(ns.plod_id("person_a_A"), "NotARiskClass")


def test_co_attendees_match_nested_loop_oracle():
    graph = generate_contact_graph(500, seed=23)
    classification = classify_all(graph, VOCAB)
    engine = QueryEngine(graph, VOCAB, classification)
    persons = sorted({p for e in engine.views.events.values() for p in e.agents})
    rng = random.Random(1)
    for person in rng.sample(persons, k=min(10, len(persons))):
        got = {r.agent: r.cnt for r in engine.co_attendees(person, "ClosedSpace")}
        expected = naive_co_attendees(
            graph, classification.inferred, VOCAB, person, vo.CLOSED_SPACE
        )
        assert got == expected, person


def test_counts_invariant_under_insertion_order():
    graph = build_demo_dataset()
    triples = list(graph)
    rng = random.Random(9)
    person = ns.plod_id("person_a_A")
    baseline = None
    for _ in range(3):
        rng.shuffle(triples)
        shuffled = Graph(triples)
        engine = QueryEngine(shuffled, VOCAB, classify_all(shuffled, VOCAB))
        rows = [(r.agent, r.cnt) for r in engine.co_attendees(person, "ClosedSpace")]
        if baseline is None:
            baseline = rows
        assert rows == baseline


def test_subsumption_matching_includes_high_and_medium():
    engine = demo_engine()
    person = ns.plod_id("person_a_A")
    base = {r.agent: r.cnt for r in engine.co_attendees(person, "ClosedSpace")}
    medium_only = {r.agent: r.cnt for r in engine.co_attendees(person, "MediumLevelClosedSpace")}
    assert base == medium_only  # every non-low situation is at least medium


# -- neighborhood ------------------------------------------------------------------


def test_depth_zero_is_center_only():
    engine = demo_engine()
    result = engine.neighborhood(ns.plod_id("event_0"), depth=0)
    assert result.node_ids() == {ns.plod_id("event_0")}
    assert result.edges == []


def test_depth_one_from_bus_event():
    engine = demo_engine()
    result = engine.neighborhood(ns.plod_id("event_0"), depth=1, fanout_limit=100)
    ids = result.node_ids()
    assert ns.plod_id("Bus_0") in ids
    assert vo.TALK in ids
    assert vo.FACE_TO_FACE in ids
    assert vo.RELAX in ids


def test_edge_endpoints_are_nodes_and_center_present():
    engine = demo_engine()
    result = engine.neighborhood(ns.plod_id("event_dinner"), depth=2, fanout_limit=10)
    ids = result.node_ids()
    assert result.center in ids
    for edge in result.edges:
        assert edge.source in ids and edge.target in ids


def test_nodes_equal_bfs_oracle_when_fanout_unbounded():
    graph = generate_contact_graph(120, seed=8)
    classification = classify_all(graph, VOCAB)
    engine = QueryEngine(graph, VOCAB, classification)
    center = sorted(engine.views.events)[0]
    for depth in (1, 2, 3):
        result = engine.neighborhood(center, depth=depth, fanout_limit=10**9)
        assert result.node_ids() == naive_bfs_nodes(
            graph, classification.inferred, center, depth
        ), depth


def test_monotone_in_depth_when_unbounded():
    engine = demo_engine()
    center = ns.plod_id("person_a_A")
    previous = set()
    for depth in range(4):
        ids = engine.neighborhood(center, depth=depth, fanout_limit=10**9).node_ids()
        assert previous <= ids
        previous = ids


def test_fanout_truncation_is_deterministic():
    engine = demo_engine()
    first = engine.neighborhood(ns.plod_id("person_a_A"), depth=2, fanout_limit=3)
    second = engine.neighborhood(ns.plod_id("person_a_A"), depth=2, fanout_limit=3)
    assert first.as_dict() == second.as_dict()


def test_risk_badge_on_classified_nodes():
    engine = demo_engine()
    result = engine.neighborhood(ns.plod_id("event_dinner"), depth=1, fanout_limit=100)
    badge = {n.id: n.badge for n in result.nodes}[ns.plod_id("event_dinner")]
    assert badge == "high"


def test_unknown_center_raises():
    with pytest.raises(UnknownEntityError):
        demo_engine().neighborhood(ns.plod_id("ghost"), depth=1)
