"""Verification harness and timing statistics."""

import pytest

from tracekg import namespaces as ns
from tracekg.bench import (
    BenchmarkCorrectnessError,
    Verdict,
    run_benchmark,
    stress,
    verify,
)
from tracekg.datagen import DatasetSpec, generate_dataset
from tracekg.model import DT_INTEGER, dt_literal, int_literal, iri, spo
from tracekg.reasoner import HIGH, MEDIUM
from tracekg.vocabulary import default_vocabulary

import tracekg.bench as bench_mod

VOCAB = default_vocabulary()


def test_canonical_dataset_verifies_clean():
    ds = generate_dataset(DatasetSpec("enclosedness", (HIGH, MEDIUM), 30, 20, 60, 5), VOCAB)
    verdict = verify(ds, VOCAB)
    assert verdict.passed
    assert verdict.events == 60


def test_empty_dataset_passes_vacuously():
    ds = generate_dataset(DatasetSpec("closeness", (HIGH, HIGH), 10, 20, 0, 5), VOCAB)
    assert verify(ds, VOCAB).passed


def test_hand_edited_duration_breaks_exactly_that_closeness():
    ds = generate_dataset(DatasetSpec("closeness", (HIGH, HIGH), 10, 20, 30, 5), VOCAB)
    target = next(r for r in ds.records if r.levels[0] == HIGH)
    time_node = ds.graph.object(iri(target.event), iri(ns.P_TIME))
    dur_node = ds.graph.object(time_node, iri(ns.P_HAS_DURATION))
    old_value = ds.graph.object(dur_node, iri(ns.P_NUMERIC_DURATION))
    assert old_value.datatype == DT_INTEGER
    # Shrink the stay to ten minutes: drop the old duration and end instant.
    for t in ds.graph.match(dur_node, iri(ns.P_NUMERIC_DURATION), None):
        ds.graph.discard(t)
    ds.graph.add(spo(dur_node.value, ns.P_NUMERIC_DURATION, int_literal(10)))
    begin = ds.graph.object(time_node, iri(ns.P_HAS_BEGINNING)).as_datetime()
    for t in ds.graph.match(time_node, iri(ns.P_HAS_END), None):
        ds.graph.discard(t)
    from datetime import timedelta

    ds.graph.add(spo(time_node.value, ns.P_HAS_END, dt_literal(begin + timedelta(minutes=10))))

    verdict = verify(ds, VOCAB)
    assert not verdict.passed
    assert len(verdict.mismatches) == 1
    mismatch = verdict.mismatches[0]
    assert mismatch.entity == target.event
    assert mismatch.dimension == "closeness"
    assert mismatch.expected == HIGH and mismatch.got == "low"


def test_run_benchmark_stats_invariants():
    report = run_benchmark([4], repetitions=1, vocab=VOCAB)
    assert len(report.verdicts) == 243
    assert all(v.passed for v in report.verdicts)
    (row,) = report.rows
    assert row.datasets == 243
    assert row.minimum <= row.median <= row.maximum
    assert row.minimum <= row.average <= row.maximum


def test_zero_repetitions_yield_empty_report():
    report = run_benchmark([4], repetitions=0, vocab=VOCAB)
    assert report.rows == [] and report.verdicts == []


def test_report_columns():
    report = run_benchmark([2], repetitions=1, vocab=VOCAB)
    assert report.csv().splitlines()[0] == "size,datasets,average,min,max,median"
    text = report.table_text()
    for column in ("Average", "Min", "Max", "Median"):
        assert column in text


def test_benchmark_aborts_on_verification_failure(monkeypatch):
    def broken_verify(dataset, vocab=None):
        verdict = Verdict(dataset=dataset.spec.label(), size=dataset.spec.size, events=0)
        verdict.mismatches.append(
            bench_mod.Mismatch("x", "closeness", "high", "low")
        )
        return verdict

    monkeypatch.setattr(bench_mod, "verify", broken_verify)
    with pytest.raises(BenchmarkCorrectnessError):
        bench_mod.run_benchmark([2], repetitions=1, vocab=VOCAB)


def test_stress_small():
    result = stress(54, vocab=VOCAB)
    assert result.error is None
    assert result.events == 54
    assert result.seconds >= 0
    assert result.peak_rss_kb > 0


def test_stress_zero_size():
    result = stress(0, vocab=VOCAB)
    assert result.error is None
    assert result.seconds < 0.5
