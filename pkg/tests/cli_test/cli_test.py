#! /usr/bin/env python3
#
# cli_test.py

import json
import os.path
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.realpath(os.path.join(os.path.dirname(__file__), "../../lib")))

from voxellate.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from voxellate.files import read_label_image, read_metrics, read_site_file


@pytest.fixture(autouse=True)
def clean_environ(monkeypatch):
    for name in list(os.environ):
        if name.startswith("VOXELLATE_"):
            monkeypatch.delenv(name)


def read_bytes(path):
    with open(path, "rb") as f:
        return f.read()


def test_run_outputs(tmp_path, capsys):
    prefix = str(tmp_path / "a")
    assert main(["voronoi", "--dims", "16,16", "--sites", "10", "--output", prefix]) == EXIT_OK

    for suffix in ["labels.bin", "labels.json", "distances.bin", "distances.json", "sites.txt", "metrics.csv"]:
        assert os.path.exists(f"{prefix}.{suffix}")

    labels = read_label_image(f"{prefix}.labels.bin")
    assert labels.grid.counts == (16, 16)
    assert labels.n_sites == 10
    assert labels.is_complete()

    rows = read_metrics(f"{prefix}.metrics.csv")
    assert len(rows) == 1
    assert rows[0]["kind"] == "voronoi"
    assert rows[0]["N_v"] == "256"
    assert rows[0]["param_name"] == "r0"

    out = capsys.readouterr().out
    assert "kind voronoi engine fast" in out
    assert "N_v 256 N_s 10" in out


@pytest.mark.parametrize(
    "args",
    [
        ["voronoi"],
        ["johnson-mehl", "--growth", "0.2"],
        ["laguerre", "--growth", "5", "--non-periodic"],
    ],
)
def test_engines_agree(tmp_path, args):
    common = ["--dims", "12,10,8", "--sites", "15", "--seed", "4"]
    assert main(args + common + ["--engine", "brute", "--output", str(tmp_path / "b")]) == EXIT_OK
    assert main(args + common + ["--engine", "fast", "--output", str(tmp_path / "f")]) == EXIT_OK
    assert main(args + common + ["--threads", "3", "--output", str(tmp_path / "t")]) == EXIT_OK

    for suffix in ["labels.bin", "distances.bin"]:
        brute = read_bytes(str(tmp_path / f"b.{suffix}"))
        assert read_bytes(str(tmp_path / f"f.{suffix}")) == brute
        assert read_bytes(str(tmp_path / f"t.{suffix}")) == brute


def test_run_command_kind(tmp_path):
    prefix = str(tmp_path / "r")
    assert main(["run", "--kind", "laguerre", "--growth", "1", "--dims", "8,8", "--sites", "5", "--output", prefix]) == EXIT_OK
    with open(f"{prefix}.labels.json") as f:
        assert json.load(f)["kind"] == "laguerre"


@pytest.mark.parametrize(
    "args",
    [
        ["johnson-mehl", "--dims", "8,8", "--sites", "5"],
        ["voronoi", "--dims", "8,0", "--sites", "5"],
        ["voronoi", "--dims", "8,x", "--sites", "5"],
        ["voronoi", "--dims", "8,8"],
        ["voronoi", "--dims", "8,8", "--sites", "5", "--t0", "0.5"],
        ["voronoi", "--dims", "8,8", "--sites", "5", "--lengths", "1,1,1"],
        ["voronoi", "--dims", "8,8", "--sites", "5", "--engine", "brute", "--sweep", "r0=0.1:0.2:2"],
        ["voronoi", "--dims", "8,8,8", "--sites", "5", "--slice", "3:0"],
    ],
)
def test_usage_errors(tmp_path, args):
    assert main(args + ["--output", str(tmp_path / "u")]) == EXIT_USAGE


def test_sweep(tmp_path):
    prefix = str(tmp_path / "s")
    assert main(["voronoi", "--dims", "16,16", "--sites", "20", "--sweep", "r0=0.1:0.3:3", "--output", prefix]) == EXIT_OK
    rows = read_metrics(f"{prefix}.metrics.csv")
    assert len(rows) == 3
    assert [float(row["param"]) for row in rows] == pytest.approx([0.1, 0.2, 0.3])
    assert len(set(row["run_id"] for row in rows)) == 1


def test_validate(tmp_path, capsys):
    prefix = str(tmp_path / "v")
    assert main(["johnson-mehl", "--growth", "0.5", "--dims", "10,10", "--sites", "8", "--output", prefix]) == EXIT_OK

    argv = ["validate", "--labels", f"{prefix}.labels.bin", "--site-file", f"{prefix}.sites.txt"]
    assert main(argv + ["--distances", f"{prefix}.distances.bin"]) == EXIT_OK
    assert main(argv + ["--sample", "20"]) == EXIT_OK
    assert "checked 20 violations 0" in capsys.readouterr().out

    payload = np.fromfile(f"{prefix}.labels.bin", dtype="<u4")
    payload[0] = (payload[0] + 1) % 8
    payload.tofile(f"{prefix}.labels.bin")
    assert main(argv) == EXIT_FAILURE
    assert "violations 1" in capsys.readouterr().out


def test_site_file(tmp_path):
    path = tmp_path / "sites.txt"
    path.write_text("# two sites\njohnson-mehl 2 2 1.0\n0.25 0.5 0.0\n0.75 0.5 0.1\n")
    prefix = str(tmp_path / "w")
    assert main(["voronoi", "--dims", "8,8", "--site-file", str(path), "--output", prefix]) == EXIT_OK

    labels = read_label_image(f"{prefix}.labels.bin")
    assert labels.kind == "johnson-mehl"
    assert read_site_file(f"{prefix}.sites.txt").equals(read_site_file(str(path)))

    path.write_text("voronoi 2 3\n0.25 0.5\n")
    assert main(["voronoi", "--dims", "8,8", "--site-file", str(path), "--output", prefix]) == EXIT_FAILURE
    assert main(["voronoi", "--dims", "8,8", "--site-file", str(tmp_path / "missing.txt"), "--output", prefix]) == EXIT_FAILURE

    path.write_bytes(b"voronoi 2 1\n0.5 0.5\xff\n")
    assert main(["voronoi", "--dims", "4,4", "--site-file", str(path), "--output", prefix]) == EXIT_FAILURE


def test_slice(tmp_path):
    prefix = str(tmp_path / "x")
    assert main(["voronoi", "--dims", "8,8", "--sites", "4", "--slice", "all", "--output", prefix]) == EXIT_OK
    assert os.path.exists(f"{prefix}.slice.ppm")
    assert os.path.exists(f"{prefix}.slice.pgm")

    prefix = str(tmp_path / "y")
    assert main(["voronoi", "--dims", "8,8,8", "--sites", "4", "--slice", "2:3", "--output", prefix]) == EXIT_OK
    assert os.path.exists(f"{prefix}.slice.ppm")


@pytest.mark.parametrize(
    "dims,plane",
    [
        ("8,8,8", "all"),
        ("8,8", "0:0"),
        ("8,8,8", "3:0"),
        ("8,8,8", "1:8"),
        ("8,8,8,8", "0:0"),
    ],
)
def test_slice_checked_before_writing(tmp_path, dims, plane):
    prefix = str(tmp_path / "z")
    assert main(["voronoi", "--dims", dims, "--sites", "4", "--slice", plane, "--output", prefix]) == EXIT_USAGE
    assert os.listdir(tmp_path) == []


def test_cost_curve(capsys):
    assert main(["cost-curve", "--kind", "voronoi", "--dims", "32,32", "--sites", "20", "--points", "5"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# optimal r0 ")
    assert float(lines[0].split()[-1]) > 0
    assert lines[1] == "r0,model_step12,model_per_voxel"
    assert len(lines) == 2 + 5

    assert main(["cost-curve", "--kind", "johnson-mehl", "--dims", "16,16", "--sites", "20", "--growth", "0.3", "--points", "4"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# optimal t0 ")
    assert lines[1] == "t0,model_step12,model_per_voxel"


def test_benchmark(tmp_path, capsys):
    prefix = str(tmp_path / "bench")
    argv = ["benchmark", "--kind", "laguerre", "--growth", "2", "--dims", "12,12", "--site-counts", "3,30"]
    assert main(argv + ["--output", prefix]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "N_s,brute_seconds,fast_seconds,speedup,labels"
    assert [line.split(",")[0] for line in lines[1:]] == ["3", "30"]
    assert all(line.endswith(",equal") for line in lines[1:])

    rows = read_metrics(f"{prefix}.metrics.csv")
    runs = [(row["engine"], row["N_s"]) for row in rows]
    assert runs == [("brute", "3"), ("fast", "3"), ("brute", "30"), ("fast", "30")]
    assert all(float(row["wall_seconds"]) >= 0 for row in rows)
    assert all(row["kind"] == "laguerre" and row["N_v"] == "144" for row in rows)
    assert rows[0]["step2_evals"] == str(144 * 3)
    assert rows[1]["param_name"] == "t0"

    assert main(["benchmark", "--dims", "8,8", "--kind", "johnson-mehl", "--output", prefix]) == EXIT_USAGE
    assert main(["benchmark", "--dims", "8,8", "--site-counts", "0,4", "--output", prefix]) == EXIT_USAGE


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
