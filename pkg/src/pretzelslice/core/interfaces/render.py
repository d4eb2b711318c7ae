from __future__ import annotations

from typing import Protocol, runtime_checkable

from pretzelslice.core.models import VerdictRecord


@runtime_checkable
class RecordWriterProtocol(Protocol):
    """Sink for verdict records (JSONL, CSV or human text)."""

    def write(self, record: VerdictRecord) -> None:
        """Serialize one record."""
        ...

    def close(self) -> None:
        """Flush pending output; the underlying stream stays open."""
        ...
