#! /usr/bin/env python3
#
# log_enter_exit_test.py

import logging
import os.path
import sys

import pytest

sys.path.insert(0, os.path.realpath(os.path.join(os.path.dirname(__file__), "../../lib")))

from voxellate.misc import get_run_id, log_enter_exit


messages = []


@log_enter_exit(logfn=messages.append)
def a_args_kwargs(x, y=2):
    return x + y


@log_enter_exit(msg="custom", logfn=messages.append)
def b_raises():
    raise ValueError("b")


class A:
    @log_enter_exit(logfn=messages.append)
    def aa(self):
        return "aa"


@log_enter_exit()
def c_default():
    return "c"


@pytest.fixture(autouse=True)
def clear_messages():
    messages.clear()


def test_enter_exit():
    assert a_args_kwargs(1, y=10) == 11
    assert len(messages) == 2
    assert messages[0] == "[a_args_kwargs] ENTER"
    assert messages[1].startswith("[a_args_kwargs] EXIT [telapsed=")


def test_method_and_wraps():
    assert A().aa() == "aa"
    assert messages[0] == "[A.aa] ENTER"
    assert A.aa.__name__ == "aa"
    assert a_args_kwargs.__name__ == "a_args_kwargs"


def test_exception_exits():
    with pytest.raises(ValueError):
        b_raises()
    assert messages[0] == "custom ENTER"
    assert messages[1].startswith("custom EXIT")


def test_default_logger(caplog):
    with caplog.at_level(logging.DEBUG, logger="voxellate.misc"):
        assert c_default() == "c"
    assert [r.getMessage().split()[1] for r in caplog.records] == ["ENTER", "EXIT"]


def test_run_id():
    first, second = get_run_id(), get_run_id()
    assert first != second
    assert len(first.split("-")) == 3


if __name__ == "__main__":
    sys.exit(pytest.main([__file__]))
