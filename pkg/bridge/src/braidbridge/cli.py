"""Command line: `bridge run --jobs-file jobs.json --out volumes.csv`.

Exit codes: 0 on success, 1 when a job fails an expectation, 2 on usage
errors or a missing geometry engine.
"""

from __future__ import annotations

import argparse
import sys

from .engine import (
    EngineUnavailable,
    GeometryError,
    engine_available,
    isometric_to_census,
    volume,
)
from .jobs import JobError, load_jobs
from .sweep import write_sweep


def cmd_run(args) -> int:
    jobs = load_jobs(args.jobs_file)
    if not engine_available():
        print("error: geometry engine (snappy) is not installed", file=sys.stderr)
        return 2
    failed = 0
    for i, job in enumerate(jobs):
        name = job.name or f"job{i}"
        try:
            result = volume(job)
        except (GeometryError, JobError) as exc:
            print(f"{name}: error: {exc}", file=sys.stderr)
            failed += 1
            continue
        if not result.hyperbolic:
            print(f"{name}: degenerate solution ({result.solution})", file=sys.stderr)
            failed += 1
            continue
        if job.expected_volume is not None:
            if abs(result.volume - job.expected_volume) > args.vol_tol:
                print(
                    f"{name}: volume {result.volume:.6f} != expected "
                    f"{job.expected_volume:.6f}",
                    file=sys.stderr,
                )
                failed += 1
        if job.expected_census is not None:
            verdict = isometric_to_census(job, job.expected_census)
            if verdict is None:
                print(f"{name}: isometry to {job.expected_census} inconclusive",
                      file=sys.stderr)
                failed += 1
            elif not verdict:
                print(f"{name}: not isometric to {job.expected_census}",
                      file=sys.stderr)
                failed += 1
    write_sweep(jobs, args.out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridge", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("run", help="run jobs and write a volume CSV")
    p.add_argument("--jobs-file", required=True)
    p.add_argument("--out")
    p.add_argument("--vol-tol", type=float, default=1e-4)
    p.set_defaults(func=cmd_run)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (JobError, EngineUnavailable, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
