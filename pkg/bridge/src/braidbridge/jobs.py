"""Manifold jobs: a link JSON plus a filling assignment.

The link JSON schema is the producing toolkit's export format: a braid
(strand count + letters), an axis flag, and named components with optional
``[b, a]`` surgery coefficients.  The bridge consumes only this schema and
never imports the producing package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path


class JobError(ValueError):
    pass


@dataclass(frozen=True)
class LinkData:
    strands: int
    letters: tuple[int, ...]
    axis: bool
    components: tuple[tuple[str, tuple[int, ...]], ...]
    fillings: dict[str, tuple[int, int] | None] = field(hash=False)

    @property
    def component_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.components)


def load_link(path: str | Path) -> LinkData:
    with open(path) as fh:
        data = json.load(fh)
    return link_from_dict(data)


def link_from_dict(data: dict) -> LinkData:
    try:
        strands = int(data["braid"]["strands"])
        letters = tuple(int(x) for x in data["braid"]["word"])
        axis = bool(data["axis"])
        comps = []
        fillings: dict[str, tuple[int, int] | None] = {}
        for comp in data["components"]:
            name = comp["name"]
            comps.append((name, tuple(int(s) for s in comp["strands"])))
            filling = comp.get("filling")
            fillings[name] = None if filling is None else (int(filling[0]), int(filling[1]))
    except (KeyError, TypeError, ValueError) as exc:
        raise JobError(f"malformed link JSON: {exc}")
    if strands < 1:
        raise JobError("strand count must be positive")
    if any(not letter or abs(letter) >= strands for letter in letters):
        raise JobError("braid letter out of range")
    seen = [name for name, _ in comps]
    if len(set(seen)) != len(seen):
        raise JobError("duplicate component names")
    return LinkData(strands, letters, axis, tuple(comps), fillings)


@dataclass(frozen=True)
class ManifoldJob:
    """A link JSON path with the fillings to apply and optional expectations."""

    link_path: str
    fillings: tuple[tuple[str, tuple[int, int]], ...] = ()
    expected_volume: float | None = None
    expected_census: str | None = None
    name: str | None = None

    def resolve(self) -> LinkData:
        link = load_link(self.link_path)
        names = set(link.component_names)
        for comp, (b, a) in self.fillings:
            if comp not in names:
                raise JobError(f"filling names unknown component {comp!r}")
            if gcd(b, a) != 1:
                raise JobError(f"filling ({b},{a}) on {comp!r} is not coprime")
        return link


def load_jobs(path: str | Path) -> list[ManifoldJob]:
    """Jobs file: a JSON list of {link, fillings, expected_volume?,
    expected_census?, name?}; fillings map component name to [b, a]."""
    with open(path) as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise JobError("jobs file must be a JSON list")
    base = Path(path).parent
    jobs = []
    for entry in raw:
        try:
            link_path = str(base / entry["link"])
            fillings = tuple(
                (comp, (int(pair[0]), int(pair[1])))
                for comp, pair in entry.get("fillings", {}).items()
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise JobError(f"malformed job entry: {exc}")
        jobs.append(
            ManifoldJob(
                link_path,
                fillings,
                entry.get("expected_volume"),
                entry.get("expected_census"),
                entry.get("name"),
            )
        )
    return jobs
