"""Command-line entry point for batch classification.

Exit status: 0 on full consensus (and an empty golden diff when a golden
file is given), 2 on non-consensus, 3 on a golden mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import kernels
from .classify import (
    DEFAULT_SEED,
    NonConsensusError,
    RunConfig,
    emit_tables,
    format_report,
    run_classification,
    verify_against_golden,
)
from .solver import FIELD_KINDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="classify",
        description="Classify cross-ratio degrees of 4-uniform hypergraphs.",
    )
    parser.add_argument("--vertices", type=int, default=8)
    parser.add_argument("--edges", type=int, default=5)
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--field", choices=FIELD_KINDS, default="prime")
    parser.add_argument(
        "--filter-colsum",
        type=str,
        default=None,
        help="only classes with this column-sum profile, e.g. 3,3,3,3,2,2,2,2",
    )
    parser.add_argument("--out", type=str, default=None, help="output directory")
    parser.add_argument("--format", choices=("text", "csv"), default="text")
    parser.add_argument("--golden", type=str, default=None, help="golden file to diff against")
    parser.add_argument("--resume", action="store_true", help="reuse cached per-class records")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument(
        "--use-reduction",
        action="store_true",
        help="let zero certificates and degree-1 stripping decide degrees",
    )
    parser.add_argument(
        "--kernels",
        choices=("numba", "numpy"),
        default=None,
        help="force a kernel backend (default: numba when available)",
    )
    parser.add_argument(
        "--dump-chains",
        type=str,
        default=None,
        metavar="DIR",
        help="write each class's triangular chain and eliminant as text",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.kernels:
        kernels.set_backend(args.kernels)
    filter_profile = None
    if args.filter_colsum:
        filter_profile = tuple(int(x) for x in args.filter_colsum.split(","))
    cfg = RunConfig(
        n_vertices=args.vertices,
        n_edges=args.edges,
        trials=args.trials,
        seed=args.seed,
        field_kind=args.field,
        filter_colsum=filter_profile,
        out_dir=args.out,
        output_format=args.format,
        golden=args.golden,
        resume=args.resume,
        jobs=args.jobs,
        use_reduction=args.use_reduction,
        dump_chains=args.dump_chains,
    )
    started = time.time()
    try:
        report = run_classification(cfg)
    except NonConsensusError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    print(f"classes: {len(report.records)}")
    print(f"max degree: {report.max_degree}")
    print("degree table:")
    for d, c in report.degree_table.items():
        print(f"  {d}: {c}")
    print(f"kernel backend: {kernels.active_backend()}")
    print(f"elapsed: {time.time() - started:.1f}s")

    if args.out:
        paths = emit_tables(report, args.out)
        for name, path in paths.items():
            print(f"wrote {name}: {path}")
    else:
        sys.stdout.write(format_report(report))

    if args.golden:
        diffs = verify_against_golden(report, Path(args.golden))
        if diffs:
            print("golden diff:", file=sys.stderr)
            for d in diffs:
                print(f"  {d}", file=sys.stderr)
            return 3
        print("golden diff: empty (match)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
