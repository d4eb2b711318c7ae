from __future__ import annotations

"""
Generic search for integer matrices B with BᵀB = Q.

This is an oracle for the block-form solver: it knows nothing about pretzel
knots and looks for any embedding of a positive definite form into Z^n of
the same rank. Columns are placed one at a time; each column is built
coordinate by coordinate with the remaining norm as budget.

Pruning:
    - a dot product with an earlier column is checked as soon as every
      coordinate in that column's support has a value;
    - before that, (target - partial)² ≤ budget · (norm left on the support);
    - coordinates no earlier column touches are interchangeable up to sign,
      so a new column fills them with nonnegative, nonincreasing values.
"""

from math import isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pretzelslice.constants import DEFAULT_ORACLE_MAX_DIM
from pretzelslice.core.errors import DimensionTooLargeError, NotPositiveDefiniteError
from pretzelslice.core.models import EmbeddingMatrix
from pretzelslice.logging.helpers import get_logger, trace_search
from pretzelslice.plumbing.forms import IntSymMatrix, is_positive_definite

logger = get_logger("embedding.oracle")


def _value_order(limit: int) -> List[int]:
    out = [0]
    for v in range(1, limit + 1):
        out.extend((v, -v))
    return out


def _square_partitions(total: int, slots: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Nonincreasing positive (v1, v2, …) with Σ v² = total, at most `slots` parts, v1 ≤ cap."""
    if total == 0:
        yield ()
        return
    if slots == 0:
        return
    for v in range(min(cap, isqrt(total)), 0, -1):
        for tail in _square_partitions(total - v * v, slots - 1, v):
            yield (v,) + tail


def placement_order(q: IntSymMatrix) -> List[int]:
    """Start at a vertex of maximal degree, then grow the placed set by cheapest neighbour.

    The next column is the unplaced neighbour of the placed set with the
    smallest (norm, index); a disconnected form restarts at the remaining
    vertex of maximal degree.
    """
    n = q.dimension
    adj = [[j for j in range(n) if j != i and q.entry(i, j) != 0] for i in range(n)]
    placed: List[int] = []
    done = [False] * n
    while len(placed) < n:
        frontier = {j for i in placed for j in adj[i] if not done[j]}
        if frontier:
            nxt = min(frontier, key=lambda j: (q.entry(j, j), j))
        else:
            nxt = max((j for j in range(n) if not done[j]), key=lambda j: (len(adj[j]), -j))
        placed.append(nxt)
        done[nxt] = True
    return placed


class _ColumnSearch:
    def __init__(self, q: IntSymMatrix, order: Sequence[int]) -> None:
        self._q = q
        self._n = q.dimension
        self._order = list(order)
        self._columns: Dict[int, List[int]] = {}
        self._touched: List[int] = []
        self._touched_set: set = set()
        self.nodes = 0

    def run(self) -> Optional[Dict[int, List[int]]]:
        return self._place(0)

    def _place(self, pos: int) -> Optional[Dict[int, List[int]]]:
        if pos == len(self._order):
            return dict(self._columns)
        i = self._order[pos]
        for vec in self._candidates(i):
            self.nodes += 1
            fresh = [k for k, v in enumerate(vec) if v and k not in self._touched_set]
            self._columns[i] = vec
            self._touched.extend(fresh)
            self._touched_set.update(fresh)
            found = self._place(pos + 1)
            if found is not None:
                return found
            del self._columns[i]
            for k in fresh:
                self._touched_set.discard(k)
            del self._touched[len(self._touched) - len(fresh):]
        return None

    def _candidates(self, i: int) -> Iterator[List[int]]:
        n = self._n
        q = self._q
        placed = list(self._columns.items())
        targets = [q.entry(i, j) for j, _ in placed]
        partial = [0] * len(placed)
        remaining = [q.entry(j, j) for j, _ in placed]
        # coordinate -> [(constraint index, entry of that earlier column)]
        hits: Dict[int, List[Tuple[int, int]]] = {}
        for idx, (_, col) in enumerate(placed):
            for k, v in enumerate(col):
                if v:
                    hits.setdefault(k, []).append((idx, v))

        touched = list(self._touched)
        fresh = [k for k in range(n) if k not in self._touched_set]
        vec = [0] * n

        def fill_fresh(budget: int) -> Iterator[List[int]]:
            for parts in _square_partitions(budget, len(fresh), isqrt(budget)):
                for k, v in zip(fresh, parts):
                    vec[k] = v
                yield list(vec)
                for k in fresh[: len(parts)]:
                    vec[k] = 0

        def walk(p: int, budget: int) -> Iterator[List[int]]:
            if p == len(touched):
                yield from fill_fresh(budget)
                return
            coord = touched[p]
            links = hits.get(coord, ())
            for x in _value_order(isqrt(budget)):
                left = budget - x * x
                ok = True
                for idx, w in links:
                    partial[idx] += x * w
                    remaining[idx] -= w * w
                for idx, _ in links:
                    gap = targets[idx] - partial[idx]
                    if remaining[idx] == 0:
                        if gap != 0:
                            ok = False
                            break
                    elif gap * gap > left * remaining[idx]:
                        ok = False
                        break
                if ok:
                    vec[coord] = x
                    yield from walk(p + 1, left)
                    vec[coord] = 0
                for idx, w in links:
                    partial[idx] -= x * w
                    remaining[idx] += w * w

        yield from walk(0, q.entry(i, i))


def generic_embedding_search(
    q_form: IntSymMatrix, max_dim: int = DEFAULT_ORACLE_MAX_DIM
) -> Optional[EmbeddingMatrix]:
    """Find some integer B with BᵀB = q_form, or return None if none exists.

    Raises:
        DimensionTooLargeError: the form has more than `max_dim` rows.
        NotPositiveDefiniteError: the form is not positive definite.
    """
    n = q_form.dimension
    if n > max_dim:
        raise DimensionTooLargeError(f"dimension {n} exceeds the oracle cap {max_dim}")
    if not is_positive_definite(q_form):
        raise NotPositiveDefiniteError("the embedding oracle needs a positive definite form")

    order = placement_order(q_form)
    search = _ColumnSearch(q_form, order)
    columns = search.run()
    trace_search(logger, "generic embedding search", dimension=n, nodes=search.nodes, found=columns is not None)
    if columns is None:
        return None
    rows = tuple(tuple(columns[j][r] for j in range(n)) for r in range(n))
    return EmbeddingMatrix(rows=rows, labels=tuple(f"b{j}" for j in range(n)))
