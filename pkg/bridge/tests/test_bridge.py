"""Job parsing, link schema validation, and closure combinatorics — all
runnable without the geometry engine."""

import json
from pathlib import Path

import pytest

from braidbridge import (
    JobError,
    ManifoldJob,
    augmented_letters,
    closure_cycles,
    cusp_index,
    link_from_dict,
    load_jobs,
    load_link,
)
from braidbridge.cli import run
from braidbridge.sweep import HEADER, write_sweep

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"


def make_link(strands=3, word=(1, 2), axis=True, components=None, fillings=None):
    components = components or [
        {"name": "closure", "strands": list(range(1, strands + 1)), "filling": None},
        {"name": "axis", "strands": [], "filling": None},
    ]
    if fillings:
        for comp in components:
            if comp["name"] in fillings:
                comp["filling"] = fillings[comp["name"]]
    return {
        "axis": axis,
        "braid": {"strands": strands, "word": list(word)},
        "components": components,
        "ledger": [],
    }


class TestSchema:
    def test_round_trip(self):
        link = link_from_dict(make_link())
        assert link.strands == 3 and link.letters == (1, 2)
        assert link.component_names == ("closure", "axis")

    def test_filling_pairs_parsed(self):
        link = link_from_dict(make_link(fillings={"closure": [1, 2]}))
        assert link.fillings["closure"] == (1, 2)

    def test_letter_out_of_range_rejected(self):
        with pytest.raises(JobError):
            link_from_dict(make_link(word=(3,)))

    def test_duplicate_names_rejected(self):
        comps = [
            {"name": "a", "strands": [1, 2, 3], "filling": None},
            {"name": "a", "strands": [], "filling": None},
        ]
        with pytest.raises(JobError):
            link_from_dict(make_link(components=comps))

    def test_missing_key_rejected(self):
        with pytest.raises(JobError):
            link_from_dict({"axis": True})


class TestJobs:
    def test_load_and_resolve(self, tmp_path):
        link_file = tmp_path / "link.json"
        link_file.write_text(json.dumps(make_link()))
        jobs_file = tmp_path / "jobs.json"
        jobs_file.write_text(
            json.dumps([{"name": "a", "link": "link.json",
                         "fillings": {"closure": [1, 2]}}])
        )
        jobs = load_jobs(jobs_file)
        assert len(jobs) == 1
        link = jobs[0].resolve()
        assert link.strands == 3

    def test_non_coprime_filling_rejected(self, tmp_path):
        link_file = tmp_path / "link.json"
        link_file.write_text(json.dumps(make_link()))
        job = ManifoldJob(str(link_file), (("closure", (2, 4)),))
        with pytest.raises(JobError):
            job.resolve()

    def test_unknown_component_rejected(self, tmp_path):
        link_file = tmp_path / "link.json"
        link_file.write_text(json.dumps(make_link()))
        job = ManifoldJob(str(link_file), (("nope", (1, 1)),))
        with pytest.raises(JobError):
            job.resolve()

    def test_example_jobs_resolve(self):
        for job in load_jobs(EXAMPLES / "jobs.json"):
            job.resolve()


class TestClosure:
    def test_axis_loop_appended(self):
        link = link_from_dict(make_link())
        letters = augmented_letters(link)
        assert letters == [1, 2, 3, 2, 1, 1, 2, 3]

    def test_cusp_counts_match_predictions(self):
        expected = {
            "mhat_0.json": 3,
            "m.json": 4,
            "magic.json": 3,
            "mq_1_4.json": 2,
        }
        for name, cusps in expected.items():
            link = load_link(EXAMPLES / name)
            assert len(closure_cycles(link)) == cusps, name

    def test_axis_cusp_is_the_extra_strand(self):
        link = load_link(EXAMPLES / "mhat_0.json")
        idx = cusp_index(link, "axis")
        assert link.strands + 1 in closure_cycles(link)[idx]

    def test_unknown_component_raises(self):
        link = link_from_dict(make_link())
        with pytest.raises(JobError):
            cusp_index(link, "nope")


class TestCliAndSweep:
    def test_missing_jobs_file_is_usage_error(self, capsys):
        assert run(["run", "--jobs-file", "/nonexistent.json"]) == 2
        capsys.readouterr()

    def test_run_without_engine_is_code_2(self, tmp_path, capsys):
        import braidbridge.engine as engine

        if engine.engine_available():
            pytest.skip("geometry engine installed")
        jobs_file = tmp_path / "jobs.json"
        jobs_file.write_text("[]")
        assert run(["run", "--jobs-file", str(jobs_file)]) == 2
        capsys.readouterr()

    def test_empty_sweep_writes_header_only(self, tmp_path):
        out = tmp_path / "volumes.csv"
        write_sweep([], str(out))
        assert out.read_text().strip() == ",".join(HEADER)
