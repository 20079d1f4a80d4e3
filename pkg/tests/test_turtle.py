"""Turtle subset parser and serializer."""

import random

import pytest

from tracekg import namespaces as ns
from tracekg.datagen import build_demo_dataset, generate_dataset, DatasetSpec
from tracekg.model import DT_DATETIME, DT_INTEGER, Graph, iri, literal, spo
from tracekg.turtle import (
    TurtleSyntaxError,
    UnknownPrefixError,
    parse_turtle,
    serialize_ntriples,
    serialize_turtle,
)

BUS_EVENT_LISTING = """\
@prefix : <http://plod.info/rdf/> .
<http://plod.info/rdf/id/event_0>
  a schema:Event ;
  :action :talk ;
  schema:location <http://plod.info/rdf/id/Bus_0> ;
  :context :facetoface, :relax .
"""

SITUATION_LISTING = """\
@prefix : <http://plod.info/rdf/> .
<http://plod.info/rdf/id/situation_0>
  a :Situation ;
  :isSituationOf <http://plod.info/rdf/id/Bus_0> ;
  :context :crowded, :smallSpace .
"""


def test_bus_event_listing_parses_to_five_triples():
    g = parse_turtle(BUS_EVENT_LISTING)
    assert len(g) == 5
    event = iri("http://plod.info/rdf/id/event_0")
    assert g.objects(event, iri(ns.RDF_TYPE)) == [iri("http://schema.org/Event")]
    assert g.objects(event, iri(ns.P_ACTION)) == [iri("http://plod.info/rdf/talk")]
    assert g.objects(event, iri(ns.P_LOCATION)) == [iri("http://plod.info/rdf/id/Bus_0")]
    contexts = {o.value for o in g.objects(event, iri(ns.P_CONTEXT))}
    assert contexts == {"http://plod.info/rdf/facetoface", "http://plod.info/rdf/relax"}


def test_situation_listing_parses():
    g = parse_turtle(SITUATION_LISTING)
    assert len(g) == 4
    situation = iri("http://plod.info/rdf/id/situation_0")
    contexts = {o.value.rsplit("/", 1)[-1] for o in g.objects(situation, iri(ns.P_CONTEXT))}
    assert contexts == {"crowded", "smallSpace"}


def test_empty_input():
    assert len(parse_turtle("")) == 0
    assert len(parse_turtle("# just a comment\n")) == 0


def test_empty_graph_serializes_to_prefix_header_only():
    text = serialize_turtle(Graph())
    lines = [l for l in text.splitlines() if l.strip()]
    assert lines
    assert all(l.startswith("@prefix") for l in lines)


def test_single_triple_statement():
    g = Graph()
    g.add(spo(ns.plod_id("a"), ns.P_CITY, literal("minato-ku")))
    text = serialize_turtle(g)
    assert 'id:a plod:city "minato-ku" .' in text
    assert parse_turtle(text) == g


def test_statement_order_is_irrelevant():
    doc_a = "id:x plod:city \"a\" .\nid:y plod:city \"b\" .\n"
    doc_b = "id:y plod:city \"b\" .\nid:x plod:city \"a\" .\n"
    assert parse_turtle(doc_a) == parse_turtle(doc_b)


def test_demo_round_trip_and_fixed_point():
    demo = build_demo_dataset()
    once = serialize_turtle(demo)
    reparsed = parse_turtle(once)
    assert reparsed == demo
    assert serialize_turtle(reparsed) == once  # byte-identical second pass


def test_generated_dataset_round_trip():
    ds = generate_dataset(DatasetSpec("crowdedness", ("medium", "low"), 20, 40, 30, 99))
    text = serialize_turtle(ds.graph)
    assert parse_turtle(text) == ds.graph


def test_ntriples_round_trip():
    demo = build_demo_dataset()
    text = serialize_ntriples(demo)
    assert parse_turtle(text) == demo


def test_typed_literals():
    g = parse_turtle(
        'id:t time:hasBeginning "2020-04-01T12:00:00"^^xsd:dateTime ; '
        "time:numericDuration 60 ; plod:score 1.5 .\n"
    )
    begin = g.object(iri(ns.plod_id("t")), iri(ns.P_HAS_BEGINNING))
    assert begin.datatype == DT_DATETIME
    assert begin.as_datetime().hour == 12
    num = g.object(iri(ns.plod_id("t")), iri(ns.P_NUMERIC_DURATION))
    assert num.datatype == DT_INTEGER and num.as_number() == 60


def test_string_escapes_round_trip():
    g = Graph()
    g.add(spo(ns.plod_id("n"), ns.P_CITY, literal('says "hi"\nback\\slash\ttab')))
    assert parse_turtle(serialize_turtle(g)) == g


def test_full_datatype_iri_accepted():
    g = parse_turtle(
        '<http://x/s> <http://x/p> "2020-04-01T00:00:00"'
        "^^<http://www.w3.org/2001/XMLSchema#dateTime> .\n"
    )
    assert next(iter(g)).o.datatype == DT_DATETIME


def test_unknown_prefix_error_names_prefix():
    with pytest.raises(UnknownPrefixError) as err:
        parse_turtle("foo:a plod:city \"x\" .\n")
    assert err.value.prefix == "foo"
    assert "foo" in str(err.value)


@pytest.mark.parametrize(
    "doc",
    [
        "<http://x/s <http://x/p> <http://x/o> .",  # unterminated IRI
        "<http://x/s> <http://x/p> \"unterminated .",
        "<http://x/s> <http://x/p> .",  # missing object
        "<relative> <http://x/p> <http://x/o> .",  # relative IRI
        "<http://x/s> <http://x/p> <http://x/o>",  # missing dot
        '<http://x/s> <http://x/p> "x"^^<http://x/unknownType> .',
        '<http://x/s> <http://x/p> "nope"^^xsd:dateTime .',
        "@base <http://x/> .",
        '"literal" <http://x/p> <http://x/o> .',
    ],
)
def test_syntax_errors(doc):
    with pytest.raises(TurtleSyntaxError):
        parse_turtle(doc)


def test_error_carries_line_and_column():
    doc = "id:a plod:city \"ok\" .\nid:b plod:city @bogus .\n"
    with pytest.raises(TurtleSyntaxError) as err:
        parse_turtle(doc)
    assert err.value.line == 2
    assert "line 2" in str(err.value)


def test_random_graph_round_trips():
    rng = random.Random(7)
    g = Graph()
    for k in range(300):
        s = ns.plod_id(f"s{rng.randrange(40)}")
        p = ns.plod(f"p{rng.randrange(10)}")
        roll = rng.random()
        if roll < 0.4:
            o = iri(ns.plod_id(f"o{rng.randrange(40)}"))
        elif roll < 0.6:
            o = literal(f"text {rng.randrange(100)}")
        elif roll < 0.8:
            o = literal(str(rng.randrange(1000)), DT_INTEGER)
        else:
            o = literal(f"2020-04-{1 + rng.randrange(28):02d}T10:00:00", DT_DATETIME)
        g.add(spo(s, p, o))
    assert parse_turtle(serialize_turtle(g)) == g
