#! /usr/bin/env python3
#
# config_test.py

import os.path
import sys

import pytest

sys.path.insert(0, os.path.realpath(os.path.join(os.path.dirname(__file__), "../../lib")))

from voxellate.config import CheckError, CodecError, Config, ConfigError, RunConfig
from voxellate.config import checker, codec
from voxellate.config.value import Boolean, Float, FloatList, Integer, PositiveInteger
from voxellate.misc import UsageError


class SampleConfig(Config):
    xboolean = Boolean(False)
    xfloat = Float(0.0)
    xfloatrange = Float(0.0, checker.FloatRange(-100.3, 20.93))
    xinteger = Integer(0)
    xintegerrange = Integer(0, checker.IntegerRange(100, 204))
    xpositive_integer = PositiveInteger(1)
    xfloats = FloatList()


def test_values():
    config = SampleConfig()
    assert config.xboolean is False
    assert config.xintegerrange == 0

    config.xboolean = True
    config.xfloat = 12.3
    config.xinteger = 123
    config.xfloats = [1, 2.5]
    assert config.xboolean is True
    assert config.xfloat == 12.3
    assert config.xinteger == 123
    assert config.xfloats == [1.0, 2.5]
    assert config._get("xinteger") == "123"

    config.xinteger = None
    assert config.xinteger == 0
    assert not config.is_set("xinteger")


def test_checkers():
    config = SampleConfig()
    with pytest.raises(CheckError):
        config.xintegerrange = 99
    with pytest.raises(CheckError):
        config.xfloatrange = 123.23
    with pytest.raises(CheckError):
        config.xpositive_integer = 0
    config.xfloatrange = -23.3
    assert config.xfloatrange == -23.3


def test_codecs():
    config = SampleConfig()
    with pytest.raises(CodecError):
        config.xinteger = "hello"
    with pytest.raises(CodecError):
        config.set_text("xinteger", "12.5")
    config.set_text("xboolean", "yes")
    assert config.xboolean is True
    assert codec.Boolean().decode("0") is False
    assert codec.IntegerList().decode("64,32") == [64, 32]
    assert codec.Float().encode(2) == "2.0"


def test_keys_and_items():
    config = SampleConfig()
    config.xinteger = 7
    assert "xfloat" in config
    assert "missing" not in config
    with pytest.raises(ConfigError):
        config.set_item("missing", 1)
    assert "xboolean" in config.get_keys()
    items = dict(config.get_items())
    assert items["xinteger"] == 7
    assert items["xfloats"] is None


def test_errors_are_usage_errors():
    for cls in [CheckError, CodecError, ConfigError]:
        assert issubclass(cls, UsageError)


def test_run_config_defaults():
    config = RunConfig.from_defaults(environ={})
    assert config.kind == "voronoi"
    assert config.dims == [64, 64, 64]
    assert config.lengths is None
    assert config.get_lengths() == [1.0, 1.0, 1.0]
    assert config.boundary == "periodic"
    assert config.engine == "fast"
    assert config.threads == 1
    assert config.prune is True
    assert config.n_sites is None
    assert config.horizon == 1.0


def test_run_config_precedence():
    config = RunConfig.from_defaults(environ={"VOXELLATE_THREADS": "4", "VOXELLATE_SEED": "9"})
    assert config.threads == 4
    assert config.seed == 9
    config.set_text("threads", "2")
    assert config.threads == 2

    with pytest.raises(CheckError):
        RunConfig.from_defaults(environ={"VOXELLATE_THREADS": "0"})


def make(**kwargs):
    config = RunConfig.from_defaults(environ={})
    config.update(kwargs)
    return config


def test_run_config_check():
    make(dims=[8, 8], n_sites=5).check()
    make(dims=[8, 8], n_sites=5, kind="laguerre", growth=1.0, t0=0.5).check()

    with pytest.raises(ConfigError):
        make(dims=[8, 8], n_sites=5, kind="johnson-mehl").check()
    with pytest.raises(ConfigError):
        make(dims=[8, 8]).check()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], n_sites=5, site_file="sites.txt").check()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], lengths=[1.0], n_sites=5).check()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], n_sites=5, t0=0.5).check()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], n_sites=5, kind="laguerre", growth=1.0, r0=0.5).check()
    with pytest.raises(CheckError):
        make(dims=[8, 0])
    with pytest.raises(CheckError):
        make(kind="delaunay")


def test_run_config_sweep_and_slice():
    config = make(dims=[8, 8], n_sites=5, sweep="r0=0.1:0.4:4", slice="2:16")
    name, values = config.get_sweep()
    assert name == "r0"
    assert values == pytest.approx([0.1, 0.2, 0.3, 0.4])
    assert config.get_slice() == (2, 16)
    assert make(slice="all").get_slice() == (None, None)
    assert make().get_slice() is None

    for sweep in ["r0=0.1:0.4", "x0=0.1:0.4:4", "r0=0.4:0.1:4"]:
        with pytest.raises(ConfigError):
            make(sweep=sweep).get_sweep()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], n_sites=5, sweep="t0=0:1:3").check()
    with pytest.raises(ConfigError):
        make(slice="2-16").get_slice()


def test_run_config_slice_fits_dims():
    make(dims=[8, 8], n_sites=5, slice="all").check()
    make(dims=[8, 6, 4], n_sites=5, slice="2:3").check()
    make(dims=[8, 6, 4], n_sites=5, slice="1:5").check()

    for dims, plane in [
        ([8, 8, 8], "all"),
        ([8], "all"),
        ([8, 8], "0:0"),
        ([8, 8, 8], "3:0"),
        ([8, 8, 8], "-1:0"),
        ([8, 6, 4], "2:4"),
        ([8, 8, 8], "0:-1"),
        ([8, 8, 8, 8], "0:0"),
    ]:
        with pytest.raises(ConfigError):
            make(dims=dims, n_sites=5, slice=plane).check()


def test_run_config_check_benchmark():
    config = make(dims=[8, 8])
    assert config.site_counts == [10, 100, 1000]
    config.check_benchmark()

    with pytest.raises(ConfigError):
        make(dims=[8, 8], kind="laguerre").check_benchmark()
    with pytest.raises(ConfigError):
        make(dims=[8, 8], lengths=[1.0]).check_benchmark()
    with pytest.raises(CheckError):
        make(site_counts=[10, 0])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
