"""Geometry bridge: cusped manifolds, Dehn fillings, volumes, and isometry
checks for links exported as JSON by the braid toolkit."""

from .engine import (
    EngineUnavailable,
    GeometryError,
    VolumeResult,
    augmented_letters,
    closure_cycles,
    cusp_index,
    engine_available,
    isometric,
    isometric_to_census,
    volume,
)
from .jobs import JobError, LinkData, ManifoldJob, link_from_dict, load_jobs, load_link
from .sweep import sweep_rows, write_sweep

__all__ = [
    "EngineUnavailable",
    "GeometryError",
    "JobError",
    "LinkData",
    "ManifoldJob",
    "VolumeResult",
    "augmented_letters",
    "closure_cycles",
    "cusp_index",
    "engine_available",
    "isometric",
    "isometric_to_census",
    "link_from_dict",
    "load_jobs",
    "load_link",
    "sweep_rows",
    "volume",
    "write_sweep",
]
