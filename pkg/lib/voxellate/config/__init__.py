# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/config/__init__.py


"""Convience to make all items easily available.
"""


from .base import Config, ConfigError, NoValue, Value
from .checker import CheckError
from .codec import CodecError
from .runconfig import CONFIG_YAML, ENGINES, RunConfig
