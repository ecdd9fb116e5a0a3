# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/misc/__init__.py


"""Collection of miscellaneous objects.
"""


import functools
import logging
import secrets
import time


_app_logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Caller supplied invalid arguments or an invalid combination."""

    pass


def get_nonce(nbytes=4):
    """Return a short nonce."""

    return secrets.token_hex(nbytes)


def get_run_id():
    """Return an identifier for a run: timestamp plus nonce."""

    return f"{get_timestamp()}-{get_nonce()}"


def get_timestamp():
    """Return a timestamp (string)."""

    return time.strftime("%Y%m%d-%H%M%S", time.gmtime())


def log_enter_exit(msg=None, logfn=None):
    """Decorator factory to report enter and exit messages via log
    function.

    Args:
        msg: Message to show in log entry.
        logfn: Alternate function to log message. Default is to
            logger.debug of the application logger.
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            qualname = getattr(func, "__qualname__", "na")
            _msg = msg or f"[{qualname}]"
            _logfn = logfn or _app_logger.debug

            tenter = time.perf_counter()
            try:
                _logfn(f"{_msg} ENTER")
            except Exception:
                pass

            try:
                return func(*args, **kwargs)
            finally:
                try:
                    telapsed = time.perf_counter() - tenter
                    _logfn(f"{_msg} EXIT [telapsed={telapsed:.6f}]")
                except Exception:
                    pass

        return wrapper

    return decorator
