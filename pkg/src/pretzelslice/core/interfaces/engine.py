from __future__ import annotations

"""
Protocols describing the evaluation surface used by the census and CLI.

The census only needs "something that turns a tuple into a verdict"; tests
and the selftest swap in recording doubles through this seam.
"""

from typing import Protocol, Sequence, runtime_checkable

from pretzelslice.core.models import Verdict


@runtime_checkable
class VerdictEngineProtocol(Protocol):
    def evaluate(self, params: Sequence[int]) -> Verdict:
        ...
