// Frozen responses of the live service over the shipped demo dataset.
// Regenerate by running the service on `tracekg gen demo` output and
// saving the four payloads below.

import type { CoAttendeeRow, IntersectionRow, NeighborhoodResponse, RiskAssignment } from "../src/types.js";

export const dinnerNeighborhood: NeighborhoodResponse = {
  "center": "http://plod.info/rdf/id/event_dinner",
  "nodes": [
    {
      "id": "http://plod.info/rdf/HighLevelCloseContact",
      "kind": "iri",
      "type": "resource",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/MediumLevelCloseContact",
      "kind": "iri",
      "type": "resource",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/MediumLevelCrowding",
      "kind": "iri",
      "type": "resource",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/eat",
      "kind": "iri",
      "type": "DropletReachableAction",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/id/event_0",
      "kind": "iri",
      "type": "Event",
      "badge": "high"
    },
    {
      "id": "http://plod.info/rdf/id/event_dinner",
      "kind": "iri",
      "type": "Event",
      "badge": "high"
    },
    {
      "id": "http://plod.info/rdf/id/person_a_A",
      "kind": "iri",
      "type": "Patient",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/id/person_a_B",
      "kind": "iri",
      "type": "Person",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/id/person_a_C",
      "kind": "iri",
      "type": "Person",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/id/restaurant_1",
      "kind": "iri",
      "type": "Restaurant",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/id/time_event_dinner",
      "kind": "iri",
      "type": "resource",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/relax",
      "kind": "iri",
      "type": "BehavioralRiskContext",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/removeMask",
      "kind": "iri",
      "type": "DropletReachableAction",
      "badge": null
    },
    {
      "id": "http://plod.info/rdf/talk",
      "kind": "iri",
      "type": "DropletReachableAction",
      "badge": null
    },
    {
      "id": "http://schema.org/Event",
      "kind": "iri",
      "type": "resource",
      "badge": null
    }
  ],
  "edges": [
    {
      "source": "http://plod.info/rdf/id/event_0",
      "predicate": "http://plod.info/rdf/followingEvent",
      "target": "http://plod.info/rdf/id/event_dinner"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/action",
      "target": "http://plod.info/rdf/eat"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/agent",
      "target": "http://plod.info/rdf/id/person_a_A"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/agent",
      "target": "http://plod.info/rdf/id/person_a_B"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/agent",
      "target": "http://plod.info/rdf/id/person_a_C"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/context",
      "target": "http://plod.info/rdf/relax"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://plod.info/rdf/time",
      "target": "http://plod.info/rdf/id/time_event_dinner"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://schema.org/location",
      "target": "http://plod.info/rdf/id/restaurant_1"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://schema.org/potentialAction",
      "target": "http://plod.info/rdf/removeMask"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://schema.org/potentialAction",
      "target": "http://plod.info/rdf/talk"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
      "target": "http://plod.info/rdf/HighLevelCloseContact"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
      "target": "http://plod.info/rdf/MediumLevelCloseContact"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
      "target": "http://plod.info/rdf/MediumLevelCrowding"
    },
    {
      "source": "http://plod.info/rdf/id/event_dinner",
      "predicate": "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
      "target": "http://schema.org/Event"
    }
  ]
};

export const personACoAttendees: CoAttendeeRow[] = [
  {
    "agent": "http://plod.info/rdf/id/person_a_B",
    "cnt": 3
  },
  {
    "agent": "http://plod.info/rdf/id/person_a_C",
    "cnt": 2
  },
  {
    "agent": "http://plod.info/rdf/id/person_a_E",
    "cnt": 1
  },
  {
    "agent": "http://plod.info/rdf/id/person_a_H",
    "cnt": 1
  }
];

export const demoIntersections: IntersectionRow[] = [
  {
    "event1": "http://plod.info/rdf/id/event_a21",
    "place1": "http://plod.info/rdf/id/bar_a3",
    "city1": "minato-ku",
    "event2": "http://plod.info/rdf/id/event_c16",
    "place2": "http://plod.info/rdf/id/bar_a3",
    "city2": "minato-ku"
  },
  {
    "event1": "http://plod.info/rdf/id/event_c16",
    "place1": "http://plod.info/rdf/id/bar_a3",
    "city1": "minato-ku",
    "event2": "http://plod.info/rdf/id/event_a21",
    "place2": "http://plod.info/rdf/id/bar_a3",
    "city2": "minato-ku"
  },
  {
    "event1": "http://plod.info/rdf/id/event_room",
    "place1": "http://plod.info/rdf/id/room_r2",
    "city1": "shibuya-ku",
    "event2": "http://plod.info/rdf/id/event_venue",
    "place2": "http://plod.info/rdf/id/restaurant_2",
    "city2": "shibuya-ku"
  },
  {
    "event1": "http://plod.info/rdf/id/event_venue",
    "place1": "http://plod.info/rdf/id/restaurant_2",
    "city1": "shibuya-ku",
    "event2": "http://plod.info/rdf/id/event_room",
    "place2": "http://plod.info/rdf/id/room_r2",
    "city2": "shibuya-ku"
  }
];

export const dinnerRisk: RiskAssignment = {
  "entity": "http://plod.info/rdf/id/event_dinner",
  "kind": "event",
  "closeness": "high",
  "crowdedness": "medium",
  "enclosedness": "high",
  "derived_classes": [
    "http://plod.info/rdf/HighLevelCloseContact",
    "http://plod.info/rdf/MediumLevelCloseContact",
    "http://plod.info/rdf/MediumLevelCrowding"
  ],
  "potential_actions": [
    "http://plod.info/rdf/removeMask",
    "http://plod.info/rdf/talk"
  ]
};
