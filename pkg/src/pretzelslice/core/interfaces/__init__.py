from .engine import VerdictEngineProtocol
from .render import RecordWriterProtocol

__all__ = [
    "VerdictEngineProtocol",
    "RecordWriterProtocol",
]
