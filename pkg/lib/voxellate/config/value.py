# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/config/value.py

"""Config value objects.
"""


from . import checker as _checker
from . import codec as _codec
from .base import Value


class Boolean(Value):
    codec = _codec.Boolean()
    default = False


class Float(Value):
    codec = _codec.Float()
    default = 0.0


class Integer(Value):
    codec = _codec.Integer()
    default = 0


class String(Value):
    codec = _codec.String()
    default = ""


class Choice(String):
    def __init__(self, values, **kwargs):
        super().__init__(checker=_checker.OneOf(values), **kwargs)


class FloatList(Value):
    codec = _codec.FloatList()
    default = None


class IntegerList(Value):
    codec = _codec.IntegerList()
    default = None


class NonNegativeInteger(Integer):
    checker = _checker.IntegerRange(0, None)


class PositiveFloat(Float):
    checker = _checker.FloatRange(0.0, None, open_lo=True)


class PositiveFloatList(FloatList):
    checker = _checker.EachOf(_checker.FloatRange(0.0, None, open_lo=True))


class PositiveInteger(Integer):
    checker = _checker.IntegerRange(1, None)


class PositiveIntegerList(IntegerList):
    checker = _checker.EachOf(_checker.IntegerRange(1, None))
