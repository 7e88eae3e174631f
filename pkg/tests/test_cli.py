"""Command-line interface: subcommands, exit codes, deterministic output."""

import json

import pytest

from semitoric.cli import main

BASE = ["--R1", "1", "--R2", "2"]
FF = BASE + ["--s1", "0.5", "--s2", "0.5"]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_focus_focus(self, capsys):
        code, out, _ = run(capsys, ["classify"] + FF)
        assert code == 0
        assert "E = -8.0" in out
        assert "n_FF = 2" in out
        assert "semitoric: yes" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, ["classify", "--json"] + FF)
        payload = json.loads(out)
        assert code == 0
        assert payload["schema"] == "semitoric-invariants/1"
        assert payload["n_ff"] == 2
        kinds = {r["id"]: r["kind"] for r in payload["fixed_points"]}
        assert kinds["NS"] == "focus-focus"

    def test_degenerate_exit_code(self, capsys):
        # E = 0 to machine precision at this root of the discriminant.
        code, out, _ = run(capsys, [
            "classify"] + BASE + ["--s1", "0.14453829383418643",
                                  "--s2", "0.1"])
        assert code == 3
        assert "degenerate" in out

    def test_invalid_params_exit_code(self, capsys):
        code, _, err = run(capsys, ["classify"] + BASE
                           + ["--s1", "2.0", "--s2", "0.5"])
        assert code == 2
        assert "error" in err


class TestHeight:
    def test_both_methods_agree(self, capsys):
        args = ["height"] + BASE + ["--s1", "0.25", "--s2", "0.25", "--json"]
        code, out, _ = run(capsys, args)
        payload = json.loads(out)
        assert code == 0
        assert payload["method"] == "both"
        assert payload["discrepancy"] < 1e-7
        assert abs(payload["h1"] + payload["h2"] - 2.0) < 1e-9

    def test_closed_only(self, capsys):
        args = ["height", "--method", "closed"] + FF
        code, out, _ = run(capsys, args)
        assert code == 0
        assert "h1 = 1.0" in out and "h2 = 1.0" in out

    def test_no_focus_focus_is_degenerate_exit(self, capsys):
        code, _, err = run(capsys, ["height"] + BASE
                           + ["--s1", "0.0", "--s2", "0.0"])
        assert code == 3
        assert "degenerate" in err


class TestPolygon:
    def test_default_cuts(self, capsys):
        code, out, _ = run(capsys, ["polygon"] + FF)
        assert code == 0
        assert out.splitlines()[0] == "l_scaled,y_scaled,L,Y"
        assert "-2.0,0.0,-3.0,0.0" in out

    def test_cut_flag(self, capsys):
        code, out, _ = run(capsys, ["polygon", "--cuts=-+", "--json"] + FF)
        payload = json.loads(out)
        assert code == 0
        assert payload["cuts"] == [-1, 1]

    def test_bad_cut_string(self, capsys):
        code, _, err = run(capsys, ["polygon", "--cuts", "xx"] + FF)
        assert code == 2
        assert "cuts" in err


class TestImage:
    def test_markers_present(self, capsys):
        code, out, _ = run(capsys, ["image", "--samples", "16"] + FF)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "l,h_min,h_max,kind"
        kinds = [ln.rsplit(",", 1)[1] for ln in lines[1:]]
        assert kinds.count("sample") == 17
        assert kinds.count("ff") == 2
        assert kinds.count("corner") == 4

    def test_sample_minimum(self, capsys):
        code, _, err = run(capsys, ["image", "--samples", "4"] + FF)
        assert code == 2


class TestSweep:
    ARGS = ["sweep"] + BASE + ["--quantity", "nff",
                               "--s1-count", "5", "--s2-count", "5"]

    def test_deterministic_bytes(self, capsys):
        _, out1, _ = run(capsys, self.ARGS)
        _, out2, _ = run(capsys, self.ARGS)
        assert out1 == out2

    def test_parallel_matches_serial(self, capsys, monkeypatch):
        monkeypatch.setenv("SEMITORIC_THREADS", "4")
        _, serial, _ = run(capsys, self.ARGS)
        _, parallel, _ = run(capsys, self.ARGS + ["--parallel"])
        assert serial == parallel

    def test_height_sweep_flags(self, capsys):
        args = ["sweep"] + BASE + ["--quantity", "height",
                                   "--s1-count", "3", "--s2-count", "3"]
        code, out, _ = run(capsys, args)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "s1,s2,h1,h2,flag"
        # Corner rows carry the no-focus-focus flag with blank heights.
        assert any(ln.endswith("no-focus-focus") for ln in lines[1:])

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code = main(self.ARGS + ["--out", str(path)])
        capsys.readouterr()
        assert code == 0
        text = path.read_text()
        assert text.startswith("s1,s2,n_ff,flag\n")
        assert "\r" not in text

    def test_bad_axis(self, capsys):
        code, _, err = run(capsys, ["sweep"] + BASE
                           + ["--quantity", "E", "--s1-count", "1"])
        assert code == 2
