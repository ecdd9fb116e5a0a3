# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/config/codec.py


"""Codecs perform the work of encoding and decoding according to an
encoding strategy. Codec validation must pass the test of
```value == decode(encode(value))```.
"""


import logging
from typing import Any, List

from ..misc import UsageError


logger = logging.getLogger(__name__)


class CodecError(UsageError):
    pass


class Codec:
    """Base class for codecs."""

    types = None

    def __init__(self, *args, **kwargs):
        self.params = {}

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__}>"

    def _decode(self, s: str) -> Any:
        """Low-level decode (from string) without checks."""

        return s

    def _encode(self, value: Any) -> str:
        """Low-level encode (to string) without checks."""

        return value

    def check_type(self, value, types, e=None):
        """Check value type against list of types.

        Args:
            value: Value to check.
            types: List of types to check value against.

        Raises:
            CodecError on error.
        """

        if types == None:
            return
        elif type(value) not in types:
            if not e:
                e = CodecError(f'value type "{type(value).__name__}" not one of "{[t.__name__ for t in types]}"')
            raise e

    def decode(self, value: str) -> Any:
        """Decode string value to typed result.

        Args:
            value: Encoded string to decode.
        Returns:
            Decoded (original) form of value.
        """

        self.check_type(value, [str])
        try:
            value = self._decode(value)
        except ValueError:
            raise CodecError(f"cannot decode ({value}) with {self}")
        self.check_type(value, self.types)
        return value

    def encode(self, value) -> str:
        """Encode typed value to a string.

        Args:
            value: Value to encode.
        Returns:
            Encoded form of value.
        """

        self.check_type(value, self.types)
        value = self._encode(value)
        self.check_type(value, [str])
        return value


class Boolean(Codec):
    """Boolean: True, False."""

    types = [bool]

    def _decode(self, value: str) -> bool:
        match value.strip().lower():
            case "1" | "true" | "yes" | "on":
                return True
            case "0" | "false" | "no" | "off":
                return False
        raise ValueError()

    def _encode(self, value: bool) -> str:
        return "1" if value else "0"


class Float(Codec):
    """Float. Integers are accepted on encode."""

    types = [float]

    def _decode(self, value: str) -> float:
        return float(value)

    def _encode(self, value: float) -> str:
        return repr(float(value))

    def encode(self, value: float) -> str:
        if type(value) == int:
            value = float(value)
        return super().encode(value)


class Integer(Codec):
    """Integer."""

    types = [int]

    def _decode(self, value: str) -> int:
        return int(value)

    def _encode(self, value: int) -> str:
        return str(value)


class String(Codec):
    """String codec (noop)."""

    types = [str]


class FloatList(Codec):
    """Comma separated floats: "1,1,0.5"."""

    types = [list]

    def _decode(self, value: str) -> List[float]:
        return [float(item) for item in value.split(",")]

    def _encode(self, value: List[float]) -> str:
        return ",".join(repr(float(item)) for item in value)

    def encode(self, value: List[float]) -> str:
        if type(value) == tuple:
            value = list(value)
        try:
            return super().encode(value)
        except (TypeError, ValueError):
            raise CodecError(f"cannot encode ({value}) with {self}")


class IntegerList(Codec):
    """Comma separated integers: "64,64,64"."""

    types = [list]

    def _decode(self, value: str) -> List[int]:
        return [int(item) for item in value.split(",")]

    def _encode(self, value: List[int]) -> str:
        for item in value:
            self.check_type(item, [int])
        return ",".join(str(item) for item in value)

    def encode(self, value: List[int]) -> str:
        if type(value) == tuple:
            value = list(value)
        return super().encode(value)
