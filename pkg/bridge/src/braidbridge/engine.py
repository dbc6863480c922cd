"""Thin wrapper around the hyperbolic geometry engine (snappy).

The engine is optional: everything here degrades to an EngineUnavailable
error so the job/CSV layer stays importable and testable without it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .jobs import JobError, LinkData, ManifoldJob

try:
    import snappy
except ImportError:  # geometry engine not installed
    snappy = None

GOOD_SOLUTIONS = ("all tetrahedra positively oriented",)
ACCEPTABLE_SOLUTIONS = GOOD_SOLUTIONS + (
    "contains negatively oriented tetrahedra",
)


class EngineUnavailable(RuntimeError):
    pass


class GeometryError(RuntimeError):
    pass


def engine_available() -> bool:
    return snappy is not None


def _require_engine() -> None:
    if snappy is None:
        raise EngineUnavailable("snappy is not installed")


def augmented_letters(link: LinkData) -> list[int]:
    """Letters of the closed braid realizing closure plus axis: one extra
    strand encircling all the others once."""
    n = link.strands
    if not link.axis:
        return list(link.letters)
    loop = list(range(n, 0, -1)) + list(range(1, n + 1))
    return list(link.letters) + loop


def closure_cycles(link: LinkData) -> list[tuple[int, ...]]:
    """Cycles of the augmented closed braid, ordered by smallest strand.
    Each cycle is one link component; the axis is the cycle of strand n+1."""
    letters = augmented_letters(link)
    n = link.strands + (1 if link.axis else 0)
    images = list(range(1, n + 1))
    for letter in letters:
        i = abs(letter)
        images[i - 1], images[i] = images[i], images[i - 1]
    perm = {i + 1: images[i] for i in range(n)}
    seen: set[int] = set()
    cycles = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        cur = perm[start]
        while cur != start:
            cycle.append(cur)
            seen.add(cur)
            cur = perm[cur]
        cycles.append(tuple(cycle))
    return cycles


def cusp_index(link: LinkData, component: str) -> int:
    """Cusp number of a named component, assuming the engine orders the
    closed-braid components by smallest participating strand."""
    cycles = closure_cycles(link)
    comps = dict(link.components)
    if component not in comps:
        raise JobError(f"unknown component {component!r}")
    strands = comps[component]
    if not strands:  # the axis: the extra strand
        if not link.axis:
            raise JobError("link has no axis component")
        target = link.strands + 1
    else:
        target = min(strands)
    for idx, cycle in enumerate(cycles):
        if target in cycle:
            return idx
    raise JobError(f"component {component!r} not found in the closure")


@dataclass(frozen=True)
class VolumeResult:
    volume: float
    solution: str
    hyperbolic: bool


def build_manifold(job: ManifoldJob):
    """Cusped manifold for the job's link with its fillings applied."""
    _require_engine()
    link = job.resolve()
    spl = snappy.Link(braid_closure=augmented_letters(link))
    mfd = spl.exterior()
    expected_cusps = len(closure_cycles(link))
    if mfd.num_cusps() != expected_cusps:
        raise GeometryError(
            f"cusp count {mfd.num_cusps()} != predicted {expected_cusps}"
        )
    for name, filling in link.fillings.items():
        if filling is not None:
            mfd.dehn_fill(filling, cusp_index(link, name))
    for name, (b, a) in job.fillings:
        mfd.dehn_fill((b, a), cusp_index(link, name))
    return mfd


def volume(job: ManifoldJob) -> VolumeResult:
    """Hyperbolic volume with the engine's solution quality; degenerate or
    non-hyperbolic solutions are flagged, never silently accepted."""
    mfd = build_manifold(job)
    solution = mfd.solution_type()
    hyperbolic = solution in ACCEPTABLE_SOLUTIONS
    vol = float(mfd.volume()) if hyperbolic else float("nan")
    return VolumeResult(vol, solution, hyperbolic)


def isometric(a: ManifoldJob, b: ManifoldJob, retries: int = 6) -> bool | None:
    """Engine isometry verdict with randomized retriangulation retries.
    Returns None when every attempt is inconclusive — never False."""
    ma, mb = build_manifold(a), build_manifold(b)
    for attempt in range(retries):
        try:
            return bool(ma.is_isometric_to(mb))
        except RuntimeError:
            ma.randomize()
            mb.randomize()
    return None


def census_manifold(name: str):
    _require_engine()
    return snappy.Manifold(name)


def isometric_to_census(job: ManifoldJob, name: str, retries: int = 6) -> bool | None:
    mfd = build_manifold(job)
    target = census_manifold(name)
    for attempt in range(retries):
        try:
            return bool(mfd.is_isometric_to(target))
        except RuntimeError:
            mfd.randomize()
            target.randomize()
    return None
