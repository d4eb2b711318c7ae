from __future__ import annotations

"""Logger naming, handler setup and search tracing for pretzelslice.

Every module asks `get_logger("<area>")` for a child of the `pretzelslice`
logger; only the CLI installs a handler. The searches (flype orbits,
embedding backtracking, coset counting) report their sizes through
`trace_search`, which stays silent unless PRETZELSLICE_TRACE=1.
"""

import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional, TextIO

from pretzelslice.constants import RECORD_SCHEMA_VERSION

_ROOT = "pretzelslice"
_TEXT_FORMAT = "%(levelname)s: %(message)s"


def _package_version() -> str:
    try:
        # Imported late: the package __init__ pulls in modules that log.
        from pretzelslice import __version__
    except ImportError:
        return "unknown"
    return str(__version__)


class JsonLogFormatter(logging.Formatter):
    """One JSON object per record.

    Keys: ts (UTC, milliseconds), level, module, msg, version, schema, and
    ctx when the record carries a non-empty `context` dict.
    """

    def __init__(self) -> None:
        super().__init__()
        self._static = {"version": _package_version(), "schema": RECORD_SCHEMA_VERSION}

    def format(self, record: logging.LogRecord) -> str:
        ts = datetime.fromtimestamp(record.created, tz=timezone.utc)
        payload: Dict[str, Any] = {
            "ts": ts.isoformat(timespec="milliseconds").replace("+00:00", "Z"),
            "level": record.levelname,
            "module": record.name,
            "msg": record.getMessage(),
            **self._static,
        }
        ctx = getattr(record, "context", None)
        if isinstance(ctx, dict) and ctx:
            payload["ctx"] = ctx
        return json.dumps(payload, ensure_ascii=False, default=str)


def setup_base_logger(
    *, json_logs: bool = False, level: int = logging.INFO, stream: Optional[TextIO] = None
) -> logging.Logger:
    """Install a single stream handler on the `pretzelslice` logger.

    A second call replaces the handler, so each CLI run (and each test that
    captures stderr) gets its own stream and format.
    """
    base = logging.getLogger(_ROOT)
    for h in list(base.handlers):
        base.removeHandler(h)
    base.setLevel(level)
    base.propagate = False

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(JsonLogFormatter() if json_logs else logging.Formatter(_TEXT_FORMAT))
    base.addHandler(handler)
    return base


def get_logger(name: str | None = None) -> logging.Logger:
    if not name or name == _ROOT:
        return logging.getLogger(_ROOT)
    if name.startswith(_ROOT + "."):
        return logging.getLogger(name)
    return logging.getLogger(f"{_ROOT}.{name}")


def is_trace_enabled() -> bool:
    return os.getenv("PRETZELSLICE_TRACE") == "1"


def trace_search(logger: logging.Logger, message: str, **ctx: Any) -> None:
    """DEBUG line with search sizes; `ctx` also goes to the JSON `ctx` field."""
    if not is_trace_enabled() or not logger.isEnabledFor(logging.DEBUG):
        return
    if ctx:
        detail = " ".join(f"{k}={v}" for k, v in ctx.items())
        logger.debug("%s: %s", message, detail, extra={"context": ctx})
    else:
        logger.debug("%s", message)
