#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the logging package: handler setup, JSON lines and search traces.
"""
from __future__ import annotations

import io
import json
import logging
import os
import unittest
from pathlib import Path
from unittest.mock import patch

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in os.sys.path:
    os.sys.path.insert(0, str(SRC))

from pretzelslice.constants import RECORD_SCHEMA_VERSION  # noqa: E402
from pretzelslice.logging.factory import DefaultLoggerFactory  # noqa: E402
from pretzelslice.logging.helpers import get_logger, setup_base_logger, trace_search  # noqa: E402


class LoggingBaseTest(unittest.TestCase):
    def setUp(self) -> None:
        self.stream = io.StringIO()

    def tearDown(self) -> None:
        setup_base_logger(level=logging.WARNING)

    def lines(self) -> list:
        return [ln for ln in self.stream.getvalue().splitlines() if ln.strip()]


# --------------------------------------------------------------------------- #
#  1. Names & levels                                                          #
# --------------------------------------------------------------------------- #
class NamingTests(LoggingBaseTest):
    def test_namespacing(self) -> None:
        self.assertEqual(get_logger().name, "pretzelslice")
        self.assertEqual(get_logger("census").name, "pretzelslice.census")
        self.assertEqual(get_logger("pretzelslice.cli").name, "pretzelslice.cli")

    def test_quiet_beats_verbose(self) -> None:
        f = DefaultLoggerFactory.from_flags(json_logs=False, verbose=True, quiet=True)
        self.assertEqual(f.level, logging.WARNING)
        self.assertEqual(DefaultLoggerFactory.from_flags(json_logs=False, verbose=True).level, logging.DEBUG)

    def test_text_format(self) -> None:
        DefaultLoggerFactory(stream=self.stream).get_logger("cli").info("census done")
        self.assertEqual(self.lines(), ["INFO: census done"])


# --------------------------------------------------------------------------- #
#  2. JSON lines & traces                                                     #
# --------------------------------------------------------------------------- #
class JsonAndTraceTests(LoggingBaseTest):
    def test_json_fields(self) -> None:
        log = DefaultLoggerFactory(json_logs=True, stream=self.stream).get_logger("census")
        log.warning("lemma exception")
        (payload,) = [json.loads(ln) for ln in self.lines()]
        self.assertEqual(payload["level"], "WARNING")
        self.assertEqual(payload["module"], "pretzelslice.census")
        self.assertEqual(payload["msg"], "lemma exception")
        self.assertEqual(payload["schema"], RECORD_SCHEMA_VERSION)
        self.assertTrue(payload["ts"].endswith("Z"))
        self.assertNotIn("ctx", payload)

    def test_trace_gated_by_env(self) -> None:
        log = DefaultLoggerFactory(json_logs=True, level=logging.DEBUG, stream=self.stream).get_logger("cosets")
        with patch.dict(os.environ, {"PRETZELSLICE_TRACE": "0"}):
            trace_search(log, "coset count", R=99)
        self.assertEqual(self.lines(), [])
        with patch.dict(os.environ, {"PRETZELSLICE_TRACE": "1"}):
            trace_search(log, "coset count", R=99, H_bar=81)
        (payload,) = [json.loads(ln) for ln in self.lines()]
        self.assertEqual(payload["ctx"], {"R": 99, "H_bar": 81})
        self.assertIn("R=99", payload["msg"])

    def test_trace_needs_debug_level(self) -> None:
        log = DefaultLoggerFactory(level=logging.INFO, stream=self.stream).get_logger("cosets")
        with patch.dict(os.environ, {"PRETZELSLICE_TRACE": "1"}):
            trace_search(log, "coset count", R=99)
        self.assertEqual(self.lines(), [])


if __name__ == "__main__":
    unittest.main()
