# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/config/base.py


"""Base implementation of Config and Value.
"""


import logging
import os

import yaml

from ..misc import UsageError


logger = logging.getLogger(__name__)


class ConfigError(UsageError):
    pass


class NoValue:
    def __str__(self):
        return "no value"

    def __repr__(self):
        return "no value"


NoValue = NoValue()


class Value:
    """Base descriptor for use with configs. The config provides
    storage via its _get() and _set().

    The checker validates the value encoded and decoded.

    The codec encodes (to string) and decodes (from string).

    The default is returned when there is no value set.
    """

    checker = None
    codec = None
    default = NoValue

    def __init__(self, default=NoValue, checker=None, codec=None, **kwargs):
        self.checker = self.checker if checker == None else checker
        self.codec = self.codec if codec == None else codec
        self.default = self.default if default is NoValue else default
        self.__doc__ = kwargs.get("doc", self.__doc__)

    def __get__(self, owner, objtype=None):
        """Return value (from owner)."""
        if owner == None:
            return self

        value = owner._get(self.name, NoValue)
        if value is NoValue:
            return self.default

        value = self.codec.decode(value)
        if self.checker:
            self.checker.check(value)
        return value

    def __set__(self, owner, value):
        """Set value (in owner). None clears it."""

        if value is NoValue:
            return

        if value == None:
            owner._clear(self.name)
            return

        if self.checker:
            self.checker.check(value)

        owner._set(self.name, self.codec.encode(value))

    def __set_name__(self, owner, name):
        """Set name (mangle to put in owner)."""
        self.name = name


class Config:
    """Base config class providing standard functionality.

    A minimum number of methods, with specific names, are provided to
    avoid polluting the namespace. This allows clean integration with
    descriptors (from Value).
    """

    ENV_PREFIX = None

    def __init__(self):
        self._store = {}

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} keys ({self.get_keys()})>"

    def __contains__(self, key):
        return isinstance(getattr(self.__class__, key, None), Value)

    def _clear(self, key):
        self._store.pop(key, None)

    def _get(self, key, default=None):
        return self._store.get(key, default)

    def _set(self, key, value):
        self._store[key] = value

    def get_keys(self):
        """Get keys of all descriptors for this config."""

        return [k for k in dir(self.__class__) if isinstance(getattr(self.__class__, k), Value)]

    def get_items(self):
        """Get descriptor items."""

        return [(k, getattr(self, k)) for k in self.get_keys()]

    def is_set(self, key):
        """Return True if key holds a value (not its default)."""

        return key in self._store

    def set_item(self, key, value):
        """Update a single item by key."""

        if key not in self:
            raise ConfigError(f"unknown config key ({key})")
        setattr(self, key, value)

    def set_text(self, key, text):
        """Update a single item from its string form."""

        if key not in self:
            raise ConfigError(f"unknown config key ({key})")
        value = getattr(self.__class__, key).codec.decode(text)
        self.set_item(key, value)

    def update(self, d):
        """Update multiple items from a dict."""

        for k, v in d.items():
            self.set_item(k, v)

    def load_env(self, environ=None):
        """Update items from <ENV_PREFIX><KEY> environment variables."""

        if not self.ENV_PREFIX:
            return
        environ = os.environ if environ == None else environ
        for key in self.get_keys():
            name = f"{self.ENV_PREFIX}{key.upper()}"
            if name in environ:
                logger.debug(f"env name ({name}) value ({environ[name]})")
                self.set_text(key, environ[name])

    def load_options(self, path):
        """Update items from the defaults of an options YAML file:

            options:
              <key>:
                type: <type>
                description: <text>
                default: <value>
        """

        with open(path, "rt", encoding="utf-8") as f:
            doc = yaml.safe_load(f) or {}

        options = doc.get("options", {})
        if not isinstance(options, dict):
            raise ConfigError(f"bad options in ({path})")
        for key, option in options.items():
            default = (option or {}).get("default")
            if default != None:
                self.set_item(key.replace("-", "_"), default)
