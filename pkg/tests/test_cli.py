"""Exit codes, determinism, and the shape of each verb's output."""

import json

import pytest

from braidkit.cli import run


def capture(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFamily:
    def test_beta_text(self, capsys):
        code, out, _ = capture(capsys, ["family", "beta", "--q", "1/3"])
        assert code == 0
        assert out.startswith("B5:")

    def test_pi_images(self, capsys):
        code, out, _ = capture(capsys, ["family", "pi", "--q", "1/3"])
        assert code == 0
        assert out.split() == ["2", "4", "5", "3", "1"]

    def test_json_has_roles(self, capsys):
        code, out, _ = capture(
            capsys, ["family", "gamma", "--nu", "0/1", "--json"]
        )
        assert code == 0
        payload = json.loads(out)
        assert set(payload["roles"]) == {"fixed", "closure"}

    def test_missing_parameter_is_usage_error(self, capsys):
        code, _, err = capture(capsys, ["family", "beta"])
        assert code == 2
        assert "needs --q" in err

    def test_deterministic(self, capsys):
        _, first, _ = capture(capsys, ["family", "zeta", "--json"])
        _, second, _ = capture(capsys, ["family", "zeta", "--json"])
        assert first == second


class TestVerify:
    def test_magic_passes(self, capsys):
        code, out, _ = capture(capsys, ["verify", "magic"])
        assert code == 0
        assert "pass" in out

    def test_thm42_json(self, capsys):
        code, out, _ = capture(
            capsys, ["verify", "thm42", "--nu", "0/1", "--k", "1", "--json"]
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_hdst_pass_and_fail(self, capsys):
        code, _, _ = capture(
            capsys, ["verify", "hdst", "--coeffs", "1/1", "1/2", "1/3"]
        )
        assert code == 0
        code, _, _ = capture(
            capsys, ["verify", "hdst", "--coeffs", "1/1", "1/1"]
        )
        assert code == 1

    def test_missing_kappa_is_usage_error(self, capsys):
        code, _, _ = capture(capsys, ["verify", "thm53"])
        assert code == 2


class TestDynamics:
    def test_code(self, capsys):
        code, out, _ = capture(capsys, ["dynamics", "code", "--q", "1/3"])
        assert code == 0
        assert out.strip() == "10011"

    def test_tq_and_dilatation_agree(self, capsys):
        _, t_out, _ = capture(capsys, ["dynamics", "tq", "--q", "1/3"])
        _, lam_out, _ = capture(capsys, ["dynamics", "dilatation", "--q", "1/3"])
        assert abs(float(t_out) - float(lam_out)) < 1e-6

    def test_sweep_csv(self, capsys, tmp_path):
        out_file = tmp_path / "sweep.csv"
        code, _, _ = capture(
            capsys, ["dynamics", "sweep", "--max-den", "5", "--out", str(out_file)]
        )
        assert code == 0
        lines = out_file.read_text().strip().splitlines()
        assert lines[0] == "q,t,perron,diff"
        assert len(lines) > 1


class TestExport:
    def test_link_json(self, capsys):
        code, out, _ = capture(
            capsys, ["export", "link", "--manifold", "Mq", "--q", "1/3"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["axis"] is True
        assert [c["name"] for c in payload["components"]] == ["closure", "axis"]

    def test_snappy_script(self, capsys):
        code, out, _ = capture(
            capsys,
            ["export", "snappy-script", "--manifold", "Mhat", "--nu", "1/2"],
        )
        assert code == 0
        assert "import snappy" in out
        assert "braid_closure" in out

    def test_unknown_manifold_rejected(self, capsys):
        code, _, _ = capture(capsys, ["export", "link", "--manifold", "nope"])
        assert code == 2


class TestPlotData:
    def test_merge(self, capsys, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        a.write_text("param,vol\n1/3,5.0\n1/4,6.0\n")
        b.write_text("param,sys\n1/3,0.1\n1/5,0.2\n")
        out_file = tmp_path / "merged.csv"
        code, _, _ = capture(
            capsys,
            ["plot-data", "merge", str(a), str(b), "--out", str(out_file)],
        )
        assert code == 0
        lines = out_file.read_text().strip().splitlines()
        assert lines[0] == "param,vol,sys"
        row = dict(
            (line.split(",")[0], line.split(",")[1:]) for line in lines[1:]
        )
        assert row["1/3"] == ["5.0", "0.1"]
        assert row["1/5"] == ["", "0.2"]


class TestUsage:
    def test_no_verb_is_usage_error(self, capsys):
        assert run([]) == 2
        capsys.readouterr()

    def test_unknown_verb_is_usage_error(self, capsys):
        assert run(["frobnicate"]) == 2
        capsys.readouterr()
