"""IRI namespaces and the built-in prefix table."""

PLOD = "http://plod.info/rdf/"
PLOD_ID = "http://plod.info/rdf/id/"
SCHEMA = "http://schema.org/"
TIME = "http://www.w3.org/2006/time#"
XSD = "http://www.w3.org/2001/XMLSchema#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"

# Prefixes every parser instance knows without a @prefix directive.
# The vocabulary namespace (plod:) holds classes and predicates; the
# id: namespace holds instance data.
BUILTIN_PREFIXES = {
    "plod": PLOD,
    "id": PLOD_ID,
    "schema": SCHEMA,
    "time": TIME,
    "xsd": XSD,
    "rdf": RDF,
    "rdfs": RDFS,
}


def plod(local: str) -> str:
    return PLOD + local


def plod_id(local: str) -> str:
    return PLOD_ID + local


def schema(local: str) -> str:
    return SCHEMA + local


def time_ns(local: str) -> str:
    return TIME + local


# rdf:type
RDF_TYPE = RDF + "type"
RDFS_SUBCLASSOF = RDFS + "subClassOf"

# Predicates used by the event-centric data model.
P_ACTION = plod("action")
P_CONTEXT = plod("context")
P_AGENT = plod("agent")
P_TIME = plod("time")
P_IS_SITUATION_OF = plod("isSituationOf")
P_CITY = plod("city")
P_FOLLOWING_EVENT = plod("followingEvent")
P_AFFORD = plod("afford")
P_AGE = plod("age")
P_VALUE = plod("value")
P_PART_OF_DAY = plod("partOfDay")
P_RELIABLE_BEGIN = plod("hasReliableBeginning")
P_POSSIBLE_BEGIN = plod("hasPossibleBeginning")
P_RELIABLE_END = plod("hasReliableEnd")
P_POSSIBLE_END = plod("hasPossibleEnd")
P_MIN_YEARS = plod("minYears")
P_MAX_YEARS = plod("maxYears")
P_MAX_YEARS_INCLUSIVE = plod("maxYearsInclusive")

P_LOCATION = schema("location")
P_POTENTIAL_ACTION = schema("potentialAction")
P_HEALTH_CONDITION = schema("healthCondition")
P_HOME_LOCATION = schema("homeLocation")

P_HAS_BEGINNING = time_ns("hasBeginning")
P_HAS_END = time_ns("hasEnd")
P_HAS_DURATION = time_ns("hasDuration")
P_NUMERIC_DURATION = time_ns("numericDuration")

# Core classes.
C_EVENT = schema("Event")
C_PERSON = schema("Person")
C_PLACE = schema("Place")
C_PATIENT = plod("Patient")
C_SITUATION = plod("Situation")
C_TIME = plod("Time")
C_AGE = plod("Age")
