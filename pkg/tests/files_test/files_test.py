#! /usr/bin/env python3
#
# files_test.py

import json
import os.path
import sys

import numpy as np
import pytest
from PIL import Image

sys.path.insert(0, os.path.realpath(os.path.join(os.path.dirname(__file__), "../../lib")))

from voxellate.files import (
    FormatError,
    ParsingError,
    SiteFileEditor,
    SliceError,
    emit_metrics,
    export_slice,
    metrics_row,
    read_distance_image,
    read_label_image,
    read_metrics,
    read_site_file,
    sidecar_path,
    write_distance_image,
    write_label_image,
    write_site_file,
)
from voxellate.files.metrics import METRICS_COLUMNS
from voxellate.geometry import KIND_JOHNSON_MEHL, KIND_LAGUERRE, KIND_VORONOI, NON_PERIODIC, Domain, VoxelGrid
from voxellate.sites import LaguerreSpheres, SiteSet, generate_uniform_sites
from voxellate.tessellate import DistanceImage, EvalCounters, LabelImage, tessellate_brute


SITE_TEXT = """# two johnson-mehl sites

johnson-mehl 2 2 0.5
0.1 0.2 0.0
# second
0.7 0.8 0.25
"""


def test_label_payload_bytes(tmp_path):
    grid = VoxelGrid((2, 2), Domain([1.0, 1.0]))
    image = LabelImage(grid, [[0, 1], [1, 0]], KIND_VORONOI, 2)
    path = str(tmp_path / "a.labels.bin")
    write_label_image(path, image, seed=3)

    with open(path, "rb") as f:
        assert f.read() == bytes.fromhex("00000000" "01000000" "01000000" "00000000")

    with open(sidecar_path(path)) as f:
        header = json.load(f)
    assert header["dims"] == [2, 2]
    assert header["dtype"] == "<u4"
    assert header["kind"] == KIND_VORONOI
    assert header["n_sites"] == 2
    assert header["seed"] == 3
    assert header["format_version"] == 1


def test_label_payload_axis_one_fastest(tmp_path):
    grid = VoxelGrid((2, 3), Domain([1.0, 1.0]))
    image = LabelImage(grid, np.arange(6).reshape(2, 3), KIND_VORONOI, 6)
    path = str(tmp_path / "b.labels.bin")
    write_label_image(path, image)
    payload = np.fromfile(path, dtype="<u4")
    assert payload.tolist() == [0, 3, 1, 4, 2, 5]


def test_sidecar_path():
    assert sidecar_path("run.labels.bin") == "run.labels.json"
    assert sidecar_path("run.img") == "run.img.json"


def test_image_round_trip(tmp_path):
    domain = Domain([1.0, 2.0, 0.5], NON_PERIODIC)
    grid = VoxelGrid((5, 4, 3), domain)
    sites = generate_uniform_sites(domain, 7, seed=1)
    labels, distances, _ = tessellate_brute(sites, grid)

    write_label_image(str(tmp_path / "c.labels.bin"), labels, seed=1)
    write_distance_image(str(tmp_path / "c.distances.bin"), distances, n_sites=7, seed=1)
    assert read_label_image(str(tmp_path / "c.labels.bin")) == labels
    assert read_distance_image(str(tmp_path / "c.distances.bin")) == distances


def test_image_header_mismatch(tmp_path):
    grid = VoxelGrid((2, 3), Domain([1.0, 1.0]))
    path = str(tmp_path / "d.labels.bin")
    write_label_image(path, LabelImage(grid, np.zeros((2, 3)), KIND_VORONOI, 1))

    with open(sidecar_path(path)) as f:
        header = json.load(f)
    header["dims"] = [2, 4]
    with open(sidecar_path(path), "w") as f:
        json.dump(header, f)
    with pytest.raises(FormatError):
        read_label_image(path)

    with pytest.raises(FormatError):
        read_distance_image(path)

    with open(sidecar_path(path), "wb") as f:
        f.write(b'{"dims": "\xff"}')
    with pytest.raises(FormatError):
        read_label_image(path)


def test_site_file_parse():
    editor = SiteFileEditor()
    editor.loads(SITE_TEXT)
    sites = editor.get_sites()
    assert sites.kind == KIND_JOHNSON_MEHL
    assert sites.growth == 0.5
    np.testing.assert_array_equal(sites.positions, [[0.1, 0.2], [0.7, 0.8]])
    np.testing.assert_array_equal(sites.births, [0.0, 0.25])
    assert editor.render() == SITE_TEXT


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "voronoi 2 3\n0.1 0.2\n0.3 0.4\n",
        "voronoi 2 1\n0.1 0.2 0.3\n",
        "voronoi 2 1\n0.1 abc\n",
        "voronoi 2 1\n0.1 nan\n",
        "johnson-mehl 2 1\n0.1 0.2 0.0\n",
        "laguerre 2 1 -1\n0.1 0.2 0.0\n",
        "delaunay 2 1\n0.1 0.2\n",
        "voronoi two 1\n0.1 0.2\n",
    ],
)
def test_site_file_malformed(text):
    with pytest.raises(ParsingError):
        SiteFileEditor().loads(text)


def test_site_file_not_utf8(tmp_path):
    path = str(tmp_path / "latin.txt")
    with open(path, "wb") as f:
        f.write(b"voronoi 2 1\n0.5 0.5\xff\n")
    with pytest.raises(ParsingError):
        read_site_file(path)


def test_spheres_file():
    editor = SiteFileEditor()
    editor.loads("spheres 2 2 4\n0.5 0.5 0\n0.2 0.2 2\n")
    spheres = editor.get_spheres()
    np.testing.assert_array_equal(spheres.radii, [0.0, 2.0])
    sites = editor.get_sites()
    assert sites.kind == KIND_LAGUERRE
    np.testing.assert_allclose(sites.births, [0.0, -1.0])


@pytest.mark.parametrize("kind", [KIND_VORONOI, KIND_JOHNSON_MEHL, KIND_LAGUERRE])
def test_site_file_round_trip(tmp_path, kind):
    domain = Domain([1.0, 1.0, 1.0])
    sites = generate_uniform_sites(domain, 25, kind=kind, growth=0.3, seed=2)
    path = str(tmp_path / "sites.txt")
    write_site_file(path, sites, comments=["seed 2"])
    assert read_site_file(path).equals(sites)


def test_spheres_round_trip(tmp_path):
    spheres = LaguerreSpheres([[0.1, 0.2], [0.3, 0.4]], [0.05, 0.5])
    path = str(tmp_path / "spheres.txt")
    write_site_file(path, spheres)
    editor = SiteFileEditor()
    editor.load(path)
    back = editor.get_spheres()
    np.testing.assert_array_equal(back.positions, spheres.positions)
    np.testing.assert_array_equal(back.radii, spheres.radii)


def test_export_slice_2d(tmp_path):
    grid = VoxelGrid((6, 4), Domain([1.0, 1.0]))
    image = LabelImage(grid, np.zeros((6, 4)), KIND_VORONOI, 3)
    path = str(tmp_path / "e.ppm")
    export_slice(image, None, None, path)
    with Image.open(path) as raster:
        assert raster.mode == "RGB"
        assert raster.size == (4, 6)
        pixels = np.asarray(raster)
    assert np.all(pixels == pixels[0, 0])


def test_export_slice_3d(tmp_path):
    domain = Domain([1.0, 1.0, 1.0])
    grid = VoxelGrid((16, 16, 16), domain)
    sites = generate_uniform_sites(domain, 10, seed=3)
    labels, distances, _ = tessellate_brute(sites, grid)

    paths = [str(tmp_path / f"{name}.ppm") for name in ["f", "g", "h"]]
    export_slice(labels, 2, 8, paths[0], palette_seed=1)
    export_slice(labels, 2, 8, paths[1], palette_seed=1)
    export_slice(labels, 2, 8, paths[2], palette_seed=2)
    contents = []
    for path in paths:
        with open(path, "rb") as f:
            contents.append(f.read())
    assert contents[0] == contents[1]
    assert contents[0] != contents[2]
    with Image.open(paths[0]) as raster:
        assert raster.size == (16, 16)

    path = str(tmp_path / "i.pgm")
    export_slice(distances, 0, 3, path)
    with Image.open(path) as raster:
        assert raster.mode == "L"

    with pytest.raises(SliceError):
        export_slice(labels, 3, 0, path)
    with pytest.raises(SliceError):
        export_slice(labels, 0, 16, path)
    with pytest.raises(SliceError):
        export_slice(labels, None, None, path)


def test_export_slice_4d(tmp_path):
    grid = VoxelGrid((2, 2, 2, 2), Domain([1.0] * 4))
    image = LabelImage(grid, np.zeros((2, 2, 2, 2)), KIND_VORONOI, 1)
    with pytest.raises(SliceError):
        export_slice(image, 0, 0, str(tmp_path / "j.ppm"))


def test_metrics(tmp_path):
    counters = EvalCounters(120, 30, "r0", 0.25, 140.0)
    assert counters.total == 150
    rows = [metrics_row("run-1", KIND_VORONOI, "fast", 64, 10, counters, counters.model_step12, 0.5)]
    path = str(tmp_path / "m.csv")
    emit_metrics(rows, path)

    back = read_metrics(path)
    assert len(back) == 1
    assert list(back[0].keys()) == METRICS_COLUMNS
    assert back[0]["engine"] == "fast"
    assert back[0]["step1_evals"] == "120"
    assert back[0]["param"] == "0.25"
    assert float(back[0]["model_step12"]) == 140.0


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
