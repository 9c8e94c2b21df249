"""End-to-end classification pipeline with reports, caching and goldens.

Enumerates the isomorphism classes, runs the structural rules and the
solver on each, and assembles a report containing the per-class records,
the column-sum table, the degree distribution and matrix listings.  Runs
are deterministic given (seed, field); per-class records are appended to a
JSONL cache keyed by canonical key and config hash so interrupted runs can
resume.  The report text format is line oriented and diffed structurally
against bundled golden files, with matrix listings compared up to
isomorphism via canonical keys.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .enumeration import enumerate_classes
from .hypergraph import (
    CanonicalKey,
    ColumnSumProfile,
    Hypergraph,
    canonical_form,
    column_sums,
    format_matrix,
    parse_matrix,
)
from .reduce import apply_rules
from .solver import FIELD_KINDS, cross_ratio_degree, describe_class

DEFAULT_SEED = 2024
CACHE_DIR_ENV = "CROSSRATIO_CACHE_DIR"


class NonConsensusError(RuntimeError):
    """Some classes failed to reach trial consensus."""

    def __init__(self, keys: list[str]) -> None:
        super().__init__(f"no consensus for {len(keys)} classes: {', '.join(keys[:5])}")
        self.keys = keys


class ConsistencyError(RuntimeError):
    """A solved degree contradicts a structural rule."""


@dataclass(frozen=True)
class RunConfig:
    n_vertices: int = 8
    n_edges: int = 5
    trials: int = 5
    seed: int = DEFAULT_SEED
    field_kind: str = "prime"
    filter_colsum: Optional[ColumnSumProfile] = None
    out_dir: Optional[str] = None
    output_format: str = "text"
    golden: Optional[str] = None
    resume: bool = False
    cache_dir: Optional[str] = None
    jobs: int = 1
    use_reduction: bool = False
    matrix_degrees: tuple[int, ...] = (3, 4)
    dump_chains: Optional[str] = None

    def __post_init__(self) -> None:
        if self.field_kind not in FIELD_KINDS:
            raise ValueError(f"field must be one of {FIELD_KINDS}")
        if self.output_format not in ("text", "csv"):
            raise ValueError("format must be text or csv")

    def config_hash(self) -> str:
        payload = json.dumps(
            [
                self.n_vertices,
                self.n_edges,
                self.trials,
                self.seed,
                self.field_kind,
                list(self.filter_colsum) if self.filter_colsum else None,
                self.use_reduction,
            ]
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def resolve_cache_dir(self) -> Optional[Path]:
        env = os.environ.get(CACHE_DIR_ENV)
        if env:
            return Path(env)
        if self.cache_dir:
            return Path(self.cache_dir)
        if self.out_dir:
            return Path(self.out_dir) / "cache"
        return None


@dataclass(frozen=True)
class ClassRecord:
    key: CanonicalKey
    profile: ColumnSumProfile
    degree: int
    provenance: str
    trials: tuple[tuple[int, int], ...]
    consensus: bool
    matchings: int
    bound: Optional[int]
    strip_applies: bool

    def to_json(self) -> dict:
        return {
            "key": self.key.bits,
            "n_vertices": self.key.n_vertices,
            "n_edges": self.key.n_edges,
            "profile": list(self.profile),
            "degree": self.degree,
            "provenance": self.provenance,
            "trials": [list(t) for t in self.trials],
            "consensus": self.consensus,
            "matchings": self.matchings,
            "bound": self.bound,
            "strip_applies": self.strip_applies,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassRecord":
        return cls(
            key=CanonicalKey(data["n_vertices"], data["n_edges"], data["key"]),
            profile=tuple(data["profile"]),
            degree=data["degree"],
            provenance=data["provenance"],
            trials=tuple((int(a), int(b)) for a, b in data["trials"]),
            consensus=data["consensus"],
            matchings=data["matchings"],
            bound=data["bound"],
            strip_applies=data["strip_applies"],
        )


@dataclass
class Report:
    config: RunConfig
    records: list[ClassRecord]
    degree_table: dict[int, int] = field(init=False)
    colsum_table: dict[ColumnSumProfile, int] = field(init=False)
    max_degree: int = field(init=False)

    def __post_init__(self) -> None:
        self.records = sorted(self.records, key=lambda r: r.key)
        degree_table: dict[int, int] = {}
        colsum_table: dict[ColumnSumProfile, int] = {}
        for r in self.records:
            degree_table[r.degree] = degree_table.get(r.degree, 0) + 1
            colsum_table[r.profile] = colsum_table.get(r.profile, 0) + 1
        self.degree_table = dict(sorted(degree_table.items()))
        self.colsum_table = dict(sorted(colsum_table.items(), key=lambda kv: (-kv[1], kv[0])))
        self.max_degree = max((r.degree for r in self.records), default=0)
        assert sum(self.degree_table.values()) == len(self.records)
        assert sum(self.colsum_table.values()) == len(self.records)

    def non_consensus_keys(self) -> list[str]:
        return [r.key.bits for r in self.records if not r.consensus]

    def matrices_of_degree(self, degree: int) -> list[Hypergraph]:
        return [r.key.hypergraph() for r in self.records if r.degree == degree]


def compute_record(
    h: Hypergraph, trials: int, seed: int, field_kind: str, use_reduction: bool = False
) -> ClassRecord:
    """Rules plus solver for one class, with consistency enforced."""
    key = canonical_form(h)
    hc = key.hypergraph()
    rules = apply_rules(hc)
    if use_reduction and rules.zero is not None:
        degree = 0
        provenance = rules.zero.note
        transcript: tuple[tuple[int, int], ...] = ()
        consensus = True
    elif use_reduction and rules.strip is not None:
        inner = cross_ratio_degree(rules.strip.reduced, trials, seed, field_kind)
        degree, transcript, consensus = inner.degree, inner.trials, inner.consensus
        provenance = "reduced:deg1"
    else:
        result = cross_ratio_degree(hc, trials, seed, field_kind)
        degree, transcript, consensus = result.degree, result.trials, result.consensus
        provenance = rules.provenance or "solver"
        if rules.zero is not None and degree != 0:
            raise ConsistencyError(
                f"zero certificate {rules.zero.note} but solver found {degree} ({key.bits})"
            )
    if rules.bound is not None and degree > rules.bound:
        raise ConsistencyError(
            f"degree {degree} exceeds bound {rules.bound} from {rules.bound_note} ({key.bits})"
        )
    return ClassRecord(
        key=key,
        profile=column_sums(hc),
        degree=degree,
        provenance=provenance,
        trials=transcript,
        consensus=consensus,
        matchings=rules.matchings,
        bound=rules.bound,
        strip_applies=rules.strip is not None,
    )


def _worker(args: tuple) -> dict:
    n_vertices, edges, trials, seed, field_kind, use_reduction = args
    h = Hypergraph(n_vertices, tuple(tuple(e) for e in edges))
    return compute_record(h, trials, seed, field_kind, use_reduction).to_json()


def run_classification(cfg: RunConfig) -> Report:
    """Enumerate, classify and assemble the report.

    Raises NonConsensusError after completing (and caching) every class if
    any record failed consensus.
    """
    classes = enumerate_classes(cfg.n_vertices, cfg.n_edges)
    if cfg.filter_colsum is not None:
        classes = [h for h in classes if column_sums(h) == cfg.filter_colsum]

    cache_path = None
    cached: dict[str, ClassRecord] = {}
    cache_dir = cfg.resolve_cache_dir()
    if cache_dir is not None:
        cache_dir.mkdir(parents=True, exist_ok=True)
        cache_path = cache_dir / f"run_{cfg.config_hash()}.jsonl"
        if cfg.resume and cache_path.exists():
            for line in cache_path.read_text().splitlines():
                if line.strip():
                    rec = ClassRecord.from_json(json.loads(line))
                    cached[rec.key.bits] = rec

    records: list[ClassRecord] = []
    pending: list[Hypergraph] = []
    for h in classes:
        key = canonical_form(h)
        if key.bits in cached:
            records.append(cached[key.bits])
        else:
            pending.append(h)

    new_records: list[ClassRecord] = []
    if pending:
        if cfg.jobs > 1:
            args = [
                (cfg.n_vertices, h.edges, cfg.trials, cfg.seed, cfg.field_kind, cfg.use_reduction)
                for h in pending
            ]
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                for data in pool.map(_worker, args, chunksize=8):
                    new_records.append(ClassRecord.from_json(data))
                    _append_cache(cache_path, new_records[-1])
        else:
            for h in pending:
                rec = compute_record(
                    h, cfg.trials, cfg.seed, cfg.field_kind, cfg.use_reduction
                )
                new_records.append(rec)
                _append_cache(cache_path, rec)
    records.extend(new_records)

    if cfg.dump_chains:
        dump_dir = Path(cfg.dump_chains)
        dump_dir.mkdir(parents=True, exist_ok=True)
        for h in classes:
            key = canonical_form(h)
            (dump_dir / f"{key.bits}.txt").write_text(
                describe_class(h, cfg.seed, cfg.field_kind)
            )

    report = Report(cfg, records)
    bad = report.non_consensus_keys()
    if bad:
        raise NonConsensusError(bad)
    return report


def _append_cache(cache_path: Optional[Path], rec: ClassRecord) -> None:
    if cache_path is None:
        return
    with cache_path.open("a") as fh:
        fh.write(json.dumps(rec.to_json()) + "\n")


# ---------------------------------------------------------------------------
# report text format
# ---------------------------------------------------------------------------


def format_report(report: Report) -> str:
    cfg = report.config
    lines = [
        "# cross-ratio degree classification",
        f"vertices: {cfg.n_vertices}",
        f"edges: {cfg.n_edges}",
        f"field: {cfg.field_kind}",
        f"trials: {cfg.trials}",
        f"seed: {cfg.seed}",
        f"filter: {_profile_str(cfg.filter_colsum) if cfg.filter_colsum else '-'}",
        f"classes: {len(report.records)}",
        f"max-degree: {report.max_degree}",
        "",
        "[degree-table]",
    ]
    for d, c in report.degree_table.items():
        lines.append(f"{d} {c}")
    lines.append("")
    lines.append("[column-sum-table]")
    for profile, c in report.colsum_table.items():
        lines.append(f"{_profile_str(profile)} {c}")
    lines.append("")
    lines.append("[records]")
    lines.append("# key profile degree provenance bound matchings consensus trials")
    for r in report.records:
        trials = ";".join(f"{s}:{c}" for s, c in r.trials) or "-"
        bound = str(r.bound) if r.bound is not None else "-"
        lines.append(
            f"{r.key.bits} {_profile_str(r.profile)} {r.degree} {r.provenance} "
            f"{bound} {r.matchings} {'yes' if r.consensus else 'NO'} {trials}"
        )
    for degree in report.config.matrix_degrees:
        mats = report.matrices_of_degree(degree)
        if not mats:
            continue
        lines.append("")
        lines.append(f"[matrices degree={degree}]")
        for h in mats:
            lines.append(format_matrix(h))
            lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def _profile_str(profile: ColumnSumProfile) -> str:
    return ",".join(str(x) for x in profile)


def emit_tables(report: Report, out_dir: str | Path) -> dict[str, Path]:
    """Write the report (and CSV exports when configured); returns paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths: dict[str, Path] = {}
    report_path = out / "report.txt"
    report_path.write_text(format_report(report))
    paths["report"] = report_path
    if report.config.output_format == "csv":
        records_path = out / "records.csv"
        with records_path.open("w") as fh:
            fh.write("key,profile,degree,provenance,matchings,consensus\n")
            for r in report.records:
                fh.write(
                    f"{r.key.bits},{'-'.join(map(str, r.profile))},{r.degree},"
                    f"{r.provenance},{r.matchings},{int(r.consensus)}\n"
                )
        paths["records"] = records_path
        tables_path = out / "tables.csv"
        with tables_path.open("w") as fh:
            fh.write("table,label,count\n")
            for d, c in report.degree_table.items():
                fh.write(f"degree,{d},{c}\n")
            for profile, c in report.colsum_table.items():
                fh.write(f"colsum,{'-'.join(map(str, profile))},{c}\n")
        paths["tables"] = tables_path
    return paths


# ---------------------------------------------------------------------------
# golden comparison
# ---------------------------------------------------------------------------


def parse_sections(text: str) -> tuple[dict[str, str], dict[str, list[str]]]:
    """Split the line-oriented format into header fields and sections."""
    headers: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current: Optional[str] = None
    for raw in text.splitlines():
        line = raw.rstrip()
        if not line or line.startswith("#"):
            if current is not None and not line:
                sections[current].append("")
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
            continue
        if current is None:
            if ":" in line:
                k, v = line.split(":", 1)
                headers[k.strip()] = v.strip()
        else:
            sections[current].append(line)
    return headers, sections


def _section_matrices(lines: list[str]) -> list[Hypergraph]:
    blocks: list[list[str]] = [[]]
    for line in lines:
        if not line.strip():
            if blocks[-1]:
                blocks.append([])
        else:
            blocks[-1].append(line)
    return [parse_matrix("\n".join(b)) for b in blocks if b]


def verify_against_golden(report: Report, golden_path: str | Path) -> list[str]:
    """Structural diff against a golden file; empty list means success.

    Only sections present in the golden are compared; matrix listings are
    compared as canonical key sets (isomorphism classes, not layouts).
    """
    path = Path(golden_path)
    if not path.exists():
        raise FileNotFoundError(f"golden file not found: {path}")
    headers, sections = parse_sections(path.read_text())
    diffs: list[str] = []

    if "classes" in headers and int(headers["classes"]) != len(report.records):
        diffs.append(f"classes: got {len(report.records)}, golden {headers['classes']}")
    if "max-degree" in headers and int(headers["max-degree"]) != report.max_degree:
        diffs.append(f"max-degree: got {report.max_degree}, golden {headers['max-degree']}")

    if "degree-table" in sections:
        golden_table = {}
        for line in sections["degree-table"]:
            if line.strip():
                d, c = line.split()
                golden_table[int(d)] = int(c)
        if golden_table != report.degree_table:
            diffs.append(f"degree-table: got {report.degree_table}, golden {golden_table}")

    if "column-sum-table" in sections:
        golden_colsum = {}
        for line in sections["column-sum-table"]:
            if line.strip():
                profile, c = line.split()
                golden_colsum[tuple(int(x) for x in profile.split(","))] = int(c)
        if golden_colsum != report.colsum_table:
            missing = set(golden_colsum) - set(report.colsum_table)
            extra = set(report.colsum_table) - set(golden_colsum)
            changed = {
                p
                for p in set(golden_colsum) & set(report.colsum_table)
                if golden_colsum[p] != report.colsum_table[p]
            }
            diffs.append(
                f"column-sum-table: missing {sorted(missing)}, extra {sorted(extra)}, "
                f"changed {sorted(changed)}"
            )

    for name, lines in sections.items():
        if not name.startswith("matrices degree="):
            continue
        degree = int(name.split("=", 1)[1])
        golden_keys = {canonical_form(h).bits for h in _section_matrices(lines)}
        got_keys = {canonical_form(h).bits for h in report.matrices_of_degree(degree)}
        if golden_keys != got_keys:
            only_golden = sorted(golden_keys - got_keys)
            only_got = sorted(got_keys - golden_keys)
            diffs.append(
                f"matrices degree={degree}: golden-only keys {only_golden}, "
                f"report-only keys {only_got}"
            )
    return diffs


def bundled_golden_path(n_vertices: int, n_edges: int) -> Path:
    """Path of the packaged golden file for the given sizes."""
    return Path(__file__).parent / "data" / f"golden_{n_vertices}_{n_edges}.txt"
