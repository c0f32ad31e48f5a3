# -*- coding: utf-8 -*-
import logging
import os
import re
import sys
from contextlib import suppress

LONG_NUMBER_DIGITS = 32
_LONG_NUMBER = re.compile(r"\d{%d,}" % (LONG_NUMBER_DIGITS + 1))


class LargeNumberFormatter(logging.Formatter):
    """Formatter that abbreviates huge integers (tower heights, b-counts)."""

    @staticmethod
    def _shorten(match):
        digits = match.group(0)
        return f"{digits[:6]}…{digits[-6:]}<{len(digits)} digits>"

    @staticmethod
    def _filter(s):
        return _LONG_NUMBER.sub(LargeNumberFormatter._shorten, s)

    def format(self, record):
        return self._filter(super().format(record))


class suppressAndLog(suppress):
    """suppress() that leaves a traceback in the log for what it swallowed"""

    def __exit__(self, exctype, excinst, exctb):
        swallowed = super().__exit__(exctype, excinst, exctb)
        if swallowed:
            log.exception(exctype)
        return swallowed


def _handler(handler: logging.Handler, pattern: str, level: str = "DEBUG") -> logging.Handler:
    handler.setLevel(level.strip().upper() or "DEBUG")
    handler.setFormatter(LargeNumberFormatter(pattern))
    return handler


log = logging.getLogger("")
log.setLevel(logging.DEBUG)

# stdout carries reports
log.addHandler(
    _handler(
        logging.StreamHandler(sys.stderr),
        "%(asctime)s %(levelname)-10s - %(thread)d - %(message)s \t(%(pathname)s:%(lineno)d)",
        os.environ.get("SKEW_CONSOLE_LOG_LEVEL", "INFO"),
    )
)
log.addHandler(
    _handler(
        logging.FileHandler(filename=os.environ.get("SKEW_LOG_FILE", "").strip() or "skew_infra.log", delay=True),
        "%(asctime)s - %(name)s - %(levelname)s - %(thread)d - %(message)s",
    )
)
