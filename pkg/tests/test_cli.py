"""Command-line interface flows (driven in-process through main)."""

import json

import pytest

from tracekg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def demo_store(tmp_path, capsys):
    demo = tmp_path / "demo.ttl"
    store = tmp_path / "store.ttl"
    assert main(["gen", "demo", "--out", str(demo)]) == 0
    assert main(["--store", str(store), "import", str(demo)]) == 0
    capsys.readouterr()
    return store


def test_gen_demo_and_import(tmp_path, capsys):
    demo = tmp_path / "demo.ttl"
    code, out, _ = run(capsys, "gen", "demo", "--out", str(demo))
    assert code == 0 and demo.exists()
    store = tmp_path / "store.ttl"
    code, out, _ = run(capsys, "--store", str(store), "import", str(demo))
    assert code == 0 and store.exists()
    assert "imported" in out


def test_reason_writes_layer_and_report(demo_store, tmp_path, capsys):
    csv_path = tmp_path / "risk.csv"
    code, out, _ = run(capsys, "--store", str(demo_store), "reason", "--csv", str(csv_path))
    assert code == 0
    assert demo_store.with_suffix(".ttl.inferred.ttl").exists()
    report = json.loads(demo_store.with_suffix(".ttl.report.json").read_text())
    assert report["summary"]["events"] > 0
    assert csv_path.read_text().startswith("entity,closeness")


def test_query_intersect_finds_bar_pair(demo_store, capsys):
    code, out, _ = run(capsys, "--store", str(demo_store), "query", "intersect")
    assert code == 0
    rows = json.loads(out)
    pairs = {(r["event1"].rsplit("/", 1)[-1], r["event2"].rsplit("/", 1)[-1]) for r in rows}
    assert ("event_c16", "event_a21") in pairs
    assert ("event_a21", "event_c16") in pairs


def test_query_contacts_csv(demo_store, capsys):
    assert main(["--store", str(demo_store), "reason"]) == 0
    capsys.readouterr()
    code, out, _ = run(
        capsys,
        "--store",
        str(demo_store),
        "query",
        "contacts",
        "--person",
        "person_a_A",
        "--format",
        "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "agent,cnt"
    assert len(out.splitlines()) > 1


def test_query_neighborhood(demo_store, capsys):
    code, out, _ = run(
        capsys,
        "--store",
        str(demo_store),
        "query",
        "neighborhood",
        "--center",
        "event_0",
        "--depth",
        "1",
    )
    assert code == 0
    body = json.loads(out)
    assert any(n["id"].endswith("Bus_0") for n in body["nodes"])


def test_gen_suite_writes_manifests(tmp_path, capsys):
    out_dir = tmp_path / "suite"
    code, out, _ = run(capsys, "gen", "suite", "--sizes", "2", "--out", str(out_dir))
    assert code == 0
    assert "wrote 243 datasets" in out
    case_dirs = list((out_dir / "2").iterdir())
    assert len(case_dirs) == 243
    sample = case_dirs[0]
    assert (sample / "data.ttl").exists() and (sample / "manifest.json").exists()


def test_bench_small(tmp_path, capsys):
    out_dir = tmp_path / "reports"
    code, out, _ = run(
        capsys, "bench", "--sizes", "3", "--repetitions", "1", "--out-dir", str(out_dir)
    )
    assert code == 0
    assert "verified 243 datasets" in out
    assert "Median" in out
    assert (out_dir / "bench.csv").exists()
    assert (out_dir / "bench.json").exists()


def test_stress_small(capsys):
    code, out, _ = run(capsys, "stress", "--size", "30")
    assert code == 0
    body = json.loads(out)
    assert body["events"] == 30 and body["error"] is None


def test_lint_default_is_clean(capsys):
    code, out, _ = run(capsys, "lint")
    assert code == 0
    assert "0 diagnostics" in out


def test_lint_export_turtle(tmp_path, capsys):
    target = tmp_path / "vocab.ttl"
    code, out, _ = run(capsys, "lint", "--export", str(target))
    assert code == 0 and target.exists()
    assert "subClassOf" in target.read_text()


def test_missing_store_errors_with_api_error_shape(tmp_path, capsys):
    code, out, err = run(capsys, "--store", str(tmp_path / "none.ttl"), "reason")
    assert code == 1
    body = json.loads(err)
    assert body["error"]["code"] == "no-store"


def test_unknown_subcommand_exits_nonzero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
