"""Volume sweeps: run a list of jobs and emit (name, volume, quality) CSV
rows for the plot-data merge step of the producing toolkit."""

from __future__ import annotations

import csv
import sys

from .engine import EngineUnavailable, GeometryError, volume
from .jobs import JobError, ManifoldJob

HEADER = ["param", "volume", "solution"]


def sweep_rows(jobs: list[ManifoldJob]) -> list[list[str]]:
    """One row per job; degeneracies become per-row flags, not crashes."""
    rows = []
    for i, job in enumerate(jobs):
        name = job.name or f"job{i}"
        try:
            result = volume(job)
        except (GeometryError, JobError) as exc:
            rows.append([name, "", f"error: {exc}"])
            continue
        value = f"{result.volume:.9f}" if result.hyperbolic else ""
        rows.append([name, value, result.solution])
    return rows


def write_sweep(jobs: list[ManifoldJob], out_path: str | None) -> None:
    out = open(out_path, "w", newline="") if out_path else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(HEADER)
        for row in sweep_rows(jobs):
            writer.writerow(row)
    finally:
        if out_path:
            out.close()
