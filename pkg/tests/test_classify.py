import json
import subprocess
import sys
from dataclasses import replace

import pytest

from crossratio.classify import (
    ClassRecord,
    Report,
    RunConfig,
    bundled_golden_path,
    compute_record,
    emit_tables,
    format_report,
    parse_sections,
    run_classification,
    verify_against_golden,
)

FIVE_PROFILE = (5, 5, 5, 1, 1, 1, 1, 1)


@pytest.fixture(scope="module")
def small_report(tmp_path_factory) -> Report:
    cfg = RunConfig(n_vertices=7, n_edges=4, trials=3, seed=5, matrix_degrees=(1, 2))
    return run_classification(cfg)


def test_single_class_run():
    cfg = RunConfig(n_vertices=4, n_edges=1, trials=3, seed=1)
    report = run_classification(cfg)
    assert len(report.records) == 1
    assert report.max_degree == 1
    rec = report.records[0]
    assert rec.degree == 1
    assert rec.provenance == "solver"
    assert rec.consensus


def test_seven_four_run_against_golden(small_report):
    assert len(small_report.records) == 29
    assert small_report.max_degree == 2
    diffs = verify_against_golden(small_report, bundled_golden_path(7, 4))
    assert diffs == []


def test_tables_consistent(small_report):
    assert sum(small_report.degree_table.values()) == 29
    assert sum(small_report.colsum_table.values()) == 29
    for rec in small_report.records:
        assert rec.degree <= small_report.max_degree


def test_filter_colsum():
    cfg = RunConfig(trials=3, seed=5, filter_colsum=FIVE_PROFILE)
    report = run_classification(cfg)
    assert len(report.records) == 1
    assert report.records[0].degree <= 1
    assert report.records[0].bound == 1


def test_filter_hard_profile_has_all_degrees():
    cfg = RunConfig(trials=3, seed=5, filter_colsum=(3, 3, 3, 3, 2, 2, 2, 2))
    report = run_classification(cfg)
    assert len(report.records) == 38
    assert sorted(report.degree_table) == [0, 1, 2, 3, 4]
    assert report.max_degree == 4


def test_record_json_roundtrip(small_report):
    for rec in small_report.records:
        assert ClassRecord.from_json(json.loads(json.dumps(rec.to_json()))) == rec


def test_cache_resume(tmp_path):
    cfg = RunConfig(
        n_vertices=6,
        n_edges=3,
        trials=3,
        seed=5,
        cache_dir=str(tmp_path),
        resume=True,
    )
    first = run_classification(cfg)
    cache_files = list(tmp_path.glob("run_*.jsonl"))
    assert len(cache_files) == 1
    lines = [ln for ln in cache_files[0].read_text().splitlines() if ln.strip()]
    assert len(lines) == len(first.records)
    # resumed run returns identical records without growing the cache
    second = run_classification(cfg)
    assert second.records == first.records
    lines_after = [ln for ln in cache_files[0].read_text().splitlines() if ln.strip()]
    assert len(lines_after) == len(lines)


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("CROSSRATIO_CACHE_DIR", str(tmp_path / "envcache"))
    cfg = RunConfig(n_vertices=4, n_edges=1, trials=3, seed=1, resume=True)
    run_classification(cfg)
    assert list((tmp_path / "envcache").glob("run_*.jsonl"))


def test_seed_changes_transcripts_not_degrees():
    cfg_a = RunConfig(trials=3, seed=101, filter_colsum=FIVE_PROFILE)
    cfg_b = RunConfig(trials=3, seed=202, filter_colsum=FIVE_PROFILE)
    rep_a = run_classification(cfg_a)
    rep_b = run_classification(cfg_b)
    degrees_a = {r.key.bits: r.degree for r in rep_a.records}
    degrees_b = {r.key.bits: r.degree for r in rep_b.records}
    assert degrees_a == degrees_b
    transcripts_a = [r.trials for r in rep_a.records]
    transcripts_b = [r.trials for r in rep_b.records]
    assert transcripts_a != transcripts_b


def test_report_text_deterministic(small_report):
    cfg = RunConfig(n_vertices=7, n_edges=4, trials=3, seed=5, matrix_degrees=(1, 2))
    again = run_classification(cfg)
    assert format_report(again) == format_report(small_report)


def test_emit_tables_csv(tmp_path, small_report):
    report = Report(replace(small_report.config, output_format="csv"), small_report.records)
    paths = emit_tables(report, tmp_path)
    assert paths["report"].exists()
    assert paths["records"].exists()
    assert paths["tables"].exists()
    header = paths["records"].read_text().splitlines()[0]
    assert header == "key,profile,degree,provenance,matchings,consensus"
    assert len(paths["records"].read_text().splitlines()) == 1 + 29


def test_report_roundtrip_through_text(tmp_path, small_report):
    # a report diffs clean against a golden written from itself
    golden = tmp_path / "self.golden"
    golden.write_text(format_report(small_report))
    assert verify_against_golden(small_report, golden) == []


def test_fault_injection_names_offender(tmp_path, small_report):
    golden = tmp_path / "self.golden"
    golden.write_text(format_report(small_report))
    records = list(small_report.records)
    victim = next(r for r in records if r.degree == 2)
    records[records.index(victim)] = replace(victim, degree=1)
    perturbed = Report(small_report.config, records)
    diffs = verify_against_golden(perturbed, golden)
    assert diffs
    assert any("degree-table" in d for d in diffs)
    assert any(victim.key.bits in d for d in diffs)


def test_parse_sections_roundtrip(small_report):
    headers, sections = parse_sections(format_report(small_report))
    assert headers["classes"] == "29"
    assert headers["max-degree"] == "2"
    assert "degree-table" in sections
    assert "column-sum-table" in sections
    assert "records" in sections


def test_missing_golden_raises(small_report):
    with pytest.raises(FileNotFoundError):
        verify_against_golden(small_report, "/nonexistent/golden.txt")


def test_use_reduction_mode():
    # zero certificates and degree-1 stripping decide without solving
    cfg = RunConfig(n_vertices=7, n_edges=4, trials=3, seed=5, use_reduction=True)
    report = run_classification(cfg)
    default = run_classification(replace(cfg, use_reduction=False))
    assert {r.key.bits: r.degree for r in report.records} == {
        r.key.bits: r.degree for r in default.records
    }
    provs = {r.provenance for r in report.records}
    assert "reduced:deg1" in provs


def test_parallel_jobs_match_serial():
    cfg = RunConfig(n_vertices=6, n_edges=3, trials=3, seed=5)
    serial = run_classification(cfg)
    parallel = run_classification(replace(cfg, jobs=2))
    assert serial.records == parallel.records


def test_compute_record_consistency(worked_example):
    rec = compute_record(worked_example, trials=3, seed=5, field_kind="prime")
    assert rec.degree == 2
    assert rec.bound == 2
    assert rec.provenance == "solver"
    assert rec.matchings >= 1
    assert rec.profile == (4, 3, 3, 2, 2, 2, 2, 2)


def test_dump_chains(tmp_path):
    cfg = RunConfig(
        trials=3,
        seed=5,
        filter_colsum=FIVE_PROFILE,
        dump_chains=str(tmp_path / "chains"),
    )
    report = run_classification(cfg)
    dumps = list((tmp_path / "chains").glob("*.txt"))
    assert len(dumps) == len(report.records) == 1
    text = dumps[0].read_text()
    assert "eliminant" in text or "inconsistent" in text
    assert f"count: {report.records[0].degree}" in text


def test_describe_class_matches_solver(worked_example):
    from crossratio.solver import describe_class

    text = describe_class(worked_example, seed=5)
    assert "count: 2" in text
    assert "eliminant[" in text


def test_cli_end_to_end(tmp_path):
    out = tmp_path / "run"
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "crossratio.cli",
            "--vertices",
            "8",
            "--edges",
            "5",
            "--trials",
            "3",
            "--seed",
            "5",
            "--filter-colsum",
            "5,5,5,1,1,1,1,1",
            "--out",
            str(out),
            "--format",
            "csv",
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    assert (out / "report.txt").exists()
    assert (out / "records.csv").exists()


def test_cli_golden_mismatch_exit_code(tmp_path):
    bad_golden = tmp_path / "bad.golden"
    bad_golden.write_text("classes: 2\nmax-degree: 1\n")
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "crossratio.cli",
            "--vertices",
            "8",
            "--edges",
            "5",
            "--trials",
            "3",
            "--seed",
            "5",
            "--filter-colsum",
            "5,5,5,1,1,1,1,1",
            "--out",
            str(tmp_path / "run"),
            "--golden",
            str(bad_golden),
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 3
    assert "golden diff" in result.stderr
