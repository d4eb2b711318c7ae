from __future__ import annotations

"""pretzelslice: exact slice obstructions for odd pretzel knots.

    >>> from pretzelslice import evaluate
    >>> evaluate((-3, -7, -19, 3, 47)).kind
    <VerdictKind.NOT_SLICE: 'NOT_SLICE'>
"""

from pretzelslice.cli import PretzelSlice
from pretzelslice.core.errors import ConsistencyError, PretzelError
from pretzelslice.core.models import PretzelTuple, Verdict, VerdictKind, VerdictRecord
from pretzelslice.rendering.records import to_record
from pretzelslice.runtime.census import Census, CensusConfig
from pretzelslice.runtime.pipeline import VerdictEngine, evaluate

__version__ = "0.3.0"

__all__ = [
    "PretzelSlice",
    "PretzelError",
    "ConsistencyError",
    "PretzelTuple",
    "Verdict",
    "VerdictKind",
    "VerdictRecord",
    "VerdictEngine",
    "evaluate",
    "to_record",
    "Census",
    "CensusConfig",
    "__version__",
]
