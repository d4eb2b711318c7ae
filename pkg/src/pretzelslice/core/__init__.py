from __future__ import annotations

"""Public surface for pretzelslice.core: value types, errors and protocols."""

from pretzelslice.core.interfaces import RecordWriterProtocol, VerdictEngineProtocol
from pretzelslice.core.models import (
    CosetReport,
    EmbeddingSolution,
    NormalizedQuintuple,
    ObstructionReason,
    ObstructionTrace,
    PretzelTuple,
    Verdict,
    VerdictKind,
    VerdictRecord,
)

__all__ = [
    "RecordWriterProtocol",
    "VerdictEngineProtocol",
    "CosetReport",
    "EmbeddingSolution",
    "NormalizedQuintuple",
    "ObstructionReason",
    "ObstructionTrace",
    "PretzelTuple",
    "Verdict",
    "VerdictKind",
    "VerdictRecord",
]
