from __future__ import annotations

import logging
from typing import Optional, TextIO

from pretzelslice.logging.helpers import get_logger, setup_base_logger


class DefaultLoggerFactory:
    """Configures the `pretzelslice` logger on first request, then hands out children."""

    def __init__(self, *, json_logs: bool = False, level: int = logging.INFO, stream: Optional[TextIO] = None) -> None:
        self.json_logs = bool(json_logs)
        self.level = int(level)
        self._stream = stream
        self._ready = False

    @classmethod
    def from_flags(
        cls, *, json_logs: bool, verbose: bool = False, quiet: bool = False, stream: Optional[TextIO] = None
    ) -> "DefaultLoggerFactory":
        # --quiet overrides --verbose.
        if quiet:
            level = logging.WARNING
        else:
            level = logging.DEBUG if verbose else logging.INFO
        return cls(json_logs=json_logs, level=level, stream=stream)

    def get_logger(self, name: str) -> logging.Logger:
        if not self._ready:
            setup_base_logger(json_logs=self.json_logs, level=self.level, stream=self._stream)
            self._ready = True
        return get_logger(name)
