"""Verification and timing harness over the generated suites.

Correctness comes before speed: a benchmark run aborts with a failure
report when any dataset's inferred labels disagree with its ground
truth. Timing covers classification only (parsing and generation are
excluded), measured on the monotonic clock, with the verification pass
doubling as the discarded warm-up run.
"""

from __future__ import annotations

import resource
import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .datagen import (
    DIMENSIONS,
    GeneratedDataset,
    enumerate_suite_specs,
    generate_dataset,
    generate_mixed_dataset,
)
from .reasoner import classify_all
from .vocabulary import Vocabulary, default_vocabulary

# Published timings (seconds) of a tableau OWL 2 DL reasoner over a
# same-shaped 243-dataset corpus, per data size. Reported next to our
# numbers for context; they are a different engine on unknown hardware
# and are never asserted as targets.
DL_REASONER_BASELINE = {
    100: {"average": 2.95, "min": 0.91, "max": 9.76, "median": 2.06},
    500: {"average": 76.82, "min": 2.17, "max": 399.63, "median": 32.75},
    1000: {"average": 417.70, "min": 5.33, "max": 2110.31, "median": 215.00},
}


@dataclass
class Mismatch:
    entity: str
    dimension: str
    expected: str
    got: str

    def as_dict(self) -> dict:
        return {
            "entity": self.entity,
            "dimension": self.dimension,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class Verdict:
    dataset: str
    size: int
    events: int
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "size": self.size,
            "events": self.events,
            "passed": self.passed,
            "mismatches": [m.as_dict() for m in self.mismatches],
        }


class BenchmarkCorrectnessError(RuntimeError):
    def __init__(self, verdicts: list[Verdict]) -> None:
        failing = [v for v in verdicts if not v.passed]
        total = sum(len(v.mismatches) for v in failing)
        super().__init__(
            f"{len(failing)} dataset(s) failed verification with {total} mismatched labels"
        )
        self.verdicts = verdicts


def verify(dataset: GeneratedDataset, vocab: Optional[Vocabulary] = None) -> Verdict:
    """Classify the dataset and compare every record's most-specific
    levels against its stored ground truth. Closeness and crowdedness
    are read off the event, enclosedness off the record's situation.
    """
    vocab = vocab or default_vocabulary()
    result = classify_all(dataset.graph, vocab)
    verdict = Verdict(
        dataset=dataset.spec.label(), size=dataset.spec.size, events=len(dataset.records)
    )
    for record in dataset.records:
        expected = dict(zip(DIMENSIONS, record.levels))
        event_assignment = result.assignments.get(record.event)
        situation_assignment = result.assignments.get(record.situation)
        got = {
            "closeness": event_assignment.closeness if event_assignment else "missing",
            "crowdedness": event_assignment.crowdedness if event_assignment else "missing",
            "enclosedness": situation_assignment.enclosedness
            if situation_assignment
            else "missing",
        }
        for dimension in DIMENSIONS:
            entity = record.event if dimension != "enclosedness" else record.situation
            if got[dimension] != expected[dimension]:
                verdict.mismatches.append(
                    Mismatch(entity, dimension, expected[dimension], got[dimension])
                )
    return verdict


@dataclass
class SizeStats:
    size: int
    datasets: int
    average: float
    minimum: float
    maximum: float
    median: float

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "datasets": self.datasets,
            "average": self.average,
            "min": self.minimum,
            "max": self.maximum,
            "median": self.median,
        }


@dataclass
class BenchReport:
    rows: list[SizeStats] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)
    timings: dict[int, list[float]] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "rows": [r.as_dict() for r in self.rows],
            "verified_datasets": len(self.verdicts),
            "all_passed": all(v.passed for v in self.verdicts),
        }

    def csv(self) -> str:
        lines = ["size,datasets,average,min,max,median"]
        for r in self.rows:
            lines.append(
                f"{r.size},{r.datasets},{r.average:.6f},{r.minimum:.6f},"
                f"{r.maximum:.6f},{r.median:.6f}"
            )
        return "\n".join(lines) + "\n"

    def table_text(self) -> str:
        header = f"{'Data size':>10}  {'Average':>10}  {'Min':>10}  {'Max':>10}  {'Median':>10}"
        lines = ["Inference time per dataset (seconds)", header]
        for r in self.rows:
            lines.append(
                f"{r.size:>10}  {r.average:>10.4f}  {r.minimum:>10.4f}  "
                f"{r.maximum:>10.4f}  {r.median:>10.4f}"
            )
            baseline = DL_REASONER_BASELINE.get(r.size)
            if baseline:
                lines.append(
                    f"{'(DL ref)':>10}  {baseline['average']:>10.2f}  {baseline['min']:>10.2f}  "
                    f"{baseline['max']:>10.2f}  {baseline['median']:>10.2f}"
                )
        lines.append("(DL ref) rows are published tableau-reasoner timings, for context only.")
        return "\n".join(lines)


def run_benchmark(
    sizes: Iterable[int],
    repetitions: int = 1,
    base_seed: int = 0,
    vocab: Optional[Vocabulary] = None,
) -> BenchReport:
    """Generate, verify, and time the canonical suite for each size."""
    vocab = vocab or default_vocabulary()
    report = BenchReport()
    if repetitions <= 0:
        return report
    for size in sizes:
        times: list[float] = []
        for spec in enumerate_suite_specs(size, base_seed):
            dataset = generate_dataset(spec, vocab)
            verdict = verify(dataset, vocab)  # also serves as the warm-up run
            report.verdicts.append(verdict)
            if not verdict.passed:
                raise BenchmarkCorrectnessError(report.verdicts)
            samples = []
            for _ in range(repetitions):
                start = time.perf_counter()
                classify_all(dataset.graph, vocab)
                samples.append(time.perf_counter() - start)
            times.append(sum(samples) / len(samples))
        report.timings[size] = times
        report.rows.append(
            SizeStats(
                size=size,
                datasets=len(times),
                average=sum(times) / len(times),
                minimum=min(times),
                maximum=max(times),
                median=statistics.median(times),
            )
        )
    return report


@dataclass
class StressResult:
    size: int
    events: int
    triples: int
    seconds: float
    peak_rss_kb: int
    error: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "events": self.events,
            "triples": self.triples,
            "seconds": self.seconds,
            "peak_rss_kb": self.peak_rss_kb,
            "error": self.error,
        }


def stress(size: int, seed: int = 1, vocab: Optional[Vocabulary] = None) -> StressResult:
    """Classify one mixed-level dataset of ``size`` events and report
    wall-clock time and peak memory. Out-of-memory is reported, not raised.
    """
    vocab = vocab or default_vocabulary()
    try:
        dataset = generate_mixed_dataset(size, seed, vocab)
        classify_all(dataset.graph, vocab)  # warm-up
        start = time.perf_counter()
        classify_all(dataset.graph, vocab)
        elapsed = time.perf_counter() - start
        peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        return StressResult(
            size=size,
            events=len(dataset.records),
            triples=len(dataset.graph),
            seconds=elapsed,
            peak_rss_kb=peak,
        )
    except MemoryError:
        peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        return StressResult(
            size=size, events=0, triples=0, seconds=0.0, peak_rss_kb=peak, error="out of memory"
        )
