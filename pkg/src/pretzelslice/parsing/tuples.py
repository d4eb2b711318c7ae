from __future__ import annotations

"""Parsing of pretzel tuple literals given on the command line."""

import re
from typing import Sequence

from pretzelslice.core.errors import InvalidTupleError
from pretzelslice.core.models import PretzelTuple

_WRAPPER = re.compile(r"^\s*P?\s*[\(\[]?(?P<body>.*?)[\)\]]?\s*$", re.IGNORECASE)
_SPLIT = re.compile(r"[,\s]+")


def parse_tuple(tokens: Sequence[str] | str) -> PretzelTuple:
    """Parse "3,-5,7", "P(3, -5, 7)" or separate tokens into a PretzelTuple.

    Negative leading values must follow a `--` on the command line, since
    argparse would otherwise read them as options.
    """
    text = tokens if isinstance(tokens, str) else " ".join(tokens)
    match = _WRAPPER.match(text)
    body = match.group("body") if match else text
    parts = [p for p in _SPLIT.split(body.strip()) if p]
    if not parts:
        raise InvalidTupleError("empty tuple literal")
    values = []
    for part in parts:
        try:
            values.append(int(part))
        except ValueError:
            raise InvalidTupleError(f"not an integer twist parameter: {part!r}") from None
    return PretzelTuple(tuple(values))
