"""tracekg: in-memory knowledge-graph engine for contact tracing.

Parses event-centric records into an indexed RDF store, classifies
every event and spatial situation into three risk dimensions
(closeness, crowdedness, enclosedness at low/medium/high), answers
spatiotemporal contact queries, and ships a synthetic evaluation suite
with ground-truth labels plus a timing harness.
"""

from .model import Graph, Term, Triple, iri, literal
from .turtle import (
    TurtleSyntaxError,
    UnknownPrefixError,
    load_graph,
    parse_ntriples,
    parse_turtle,
    save_graph,
    serialize_ntriples,
    serialize_turtle,
)
from .vocabulary import (
    Diagnostic,
    RiskThresholds,
    Vocabulary,
    VocabularyError,
    core_vocabulary,
    default_vocabulary,
    load_vocabulary,
    load_vocabulary_file,
)
from .temporal import MissingBoundError, TimeSpan, intervals_overlap
from .reasoner import (
    HIGH,
    LOW,
    MEDIUM,
    ClassificationResult,
    Reasoner,
    RiskAssignment,
    classify_age,
    classify_all,
)
from .queries import (
    CoAttendeeRow,
    IntersectionResult,
    Neighborhood,
    QueryEngine,
    QueryScope,
    UnknownEntityError,
)
from .datagen import (
    DatasetSpec,
    EventRecord,
    ExpectedCounts,
    GeneratedDataset,
    build_demo_dataset,
    enumerate_suite_specs,
    generate_contact_graph,
    generate_dataset,
    generate_mixed_dataset,
    generate_suite,
    realize_event,
)
from .bench import BenchReport, StressResult, Verdict, run_benchmark, stress, verify

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Term",
    "Triple",
    "iri",
    "literal",
    "TurtleSyntaxError",
    "UnknownPrefixError",
    "parse_turtle",
    "parse_ntriples",
    "serialize_turtle",
    "serialize_ntriples",
    "load_graph",
    "save_graph",
    "Vocabulary",
    "VocabularyError",
    "Diagnostic",
    "RiskThresholds",
    "core_vocabulary",
    "default_vocabulary",
    "load_vocabulary",
    "load_vocabulary_file",
    "TimeSpan",
    "MissingBoundError",
    "intervals_overlap",
    "LOW",
    "MEDIUM",
    "HIGH",
    "Reasoner",
    "RiskAssignment",
    "ClassificationResult",
    "classify_age",
    "classify_all",
    "QueryEngine",
    "QueryScope",
    "IntersectionResult",
    "CoAttendeeRow",
    "Neighborhood",
    "UnknownEntityError",
    "DatasetSpec",
    "EventRecord",
    "ExpectedCounts",
    "GeneratedDataset",
    "build_demo_dataset",
    "generate_contact_graph",
    "generate_dataset",
    "generate_mixed_dataset",
    "generate_suite",
    "enumerate_suite_specs",
    "realize_event",
    "verify",
    "run_benchmark",
    "stress",
    "BenchReport",
    "StressResult",
    "Verdict",
]
