from __future__ import annotations

"""
Combinatorics of pretzel tuples.

Classification (odd knot / even knot / link), mirroring, mutation keys,
isotopy moves (rotation, reflection, single-twist flypes), cancelling-pair
structure and simple-ribbon detection.

Conventions:
    - Tuples are cyclic: strand k is adjacent to strand 1.
    - A flype transposes two adjacent strands when at least one of them has
      a single half-twist (±1).
    - Everything here is exhaustive search over tiny orbits; callers keep k
      at desk scale (MAX_SEARCH_STRANDS).
"""

from collections import Counter, deque
from functools import lru_cache
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from pretzelslice.constants import MAX_SEARCH_STRANDS
from pretzelslice.core.errors import InvalidTupleError, NotAKnotError
from pretzelslice.core.models import (
    KnotClass,
    PairProfile,
    PretzelTuple,
    RibbonMove,
    RibbonReduction,
    multiset_key,
)
from pretzelslice.logging.helpers import get_logger, trace_search

logger = get_logger("knots")

TupleLike = Union[PretzelTuple, Sequence[int]]
Params = Tuple[int, ...]


def as_pretzel(value: TupleLike) -> PretzelTuple:
    """Coerce a plain sequence into a validated PretzelTuple."""
    if isinstance(value, PretzelTuple):
        return value
    return PretzelTuple(tuple(value))


def classify(value: TupleLike) -> KnotClass:
    """Odd knot iff k odd and every p_i odd; even knot iff exactly one p_i even."""
    pt = as_pretzel(value)
    evens = sum(1 for p in pt if p % 2 == 0)
    if evens == 1:
        return KnotClass.EVEN_KNOT
    if evens == 0 and pt.k % 2 == 1:
        return KnotClass.ODD_KNOT
    return KnotClass.LINK


def mirror(value: TupleLike) -> PretzelTuple:
    return PretzelTuple(tuple(-p for p in as_pretzel(value)))


def mutation_key(value: TupleLike) -> Params:
    return multiset_key(as_pretzel(value))


# --------------------------------------------------------------------------- #
#  Isotopy moves                                                              #
# --------------------------------------------------------------------------- #
def _dihedral(params: Params) -> List[Params]:
    k = len(params)
    out = []
    for shift in range(k):
        rot = params[shift:] + params[:shift]
        out.append(rot)
        out.append(tuple(reversed(rot)))
    return out


def canonical_form(value: TupleLike) -> Params:
    """Lexicographically least rotation or reflection of the tuple."""
    return min(_dihedral(tuple(as_pretzel(value))))


def _flype_neighbours(params: Params) -> Iterable[Params]:
    k = len(params)
    if k < 2:
        return
    for i in range(k - 1):
        if abs(params[i]) == 1 or abs(params[i + 1]) == 1:
            lst = list(params)
            lst[i], lst[i + 1] = lst[i + 1], lst[i]
            yield tuple(lst)
    # Strands k and 1 are adjacent as well.
    if k > 2 and (abs(params[-1]) == 1 or abs(params[0]) == 1):
        lst = list(params)
        lst[0], lst[-1] = lst[-1], lst[0]
        yield tuple(lst)


@lru_cache(maxsize=4096)
def _orbit(params: Params) -> frozenset:
    if len(params) > MAX_SEARCH_STRANDS:
        raise InvalidTupleError(
            f"isotopy orbits are only searched up to {MAX_SEARCH_STRANDS} strands (got {len(params)})"
        )
    seen: Set[Params] = set()
    queue = deque([params])
    while queue:
        cur = queue.popleft()
        if cur in seen:
            continue
        seen.add(cur)
        for nxt in _dihedral(cur):
            if nxt not in seen:
                queue.append(nxt)
        for nxt in _flype_neighbours(cur):
            if nxt not in seen:
                queue.append(nxt)
    trace_search(logger, "isotopy orbit", start=params, size=len(seen))
    return frozenset(seen)


def isotopy_orbit(value: TupleLike) -> frozenset:
    """All ordered tuples reachable by rotation, reflection and flypes."""
    return _orbit(tuple(as_pretzel(value)))


def _require_knot(pt: PretzelTuple) -> KnotClass:
    kc = classify(pt)
    if not kc.is_knot:
        raise NotAKnotError(f"{pt} is a link, not a knot")
    return kc


def isotopy_equivalent(t1: TupleLike, t2: TupleLike) -> bool:
    p1, p2 = as_pretzel(t1), as_pretzel(t2)
    _require_knot(p1)
    _require_knot(p2)
    if p1.k != p2.k or mutation_key(p1) != mutation_key(p2):
        return False
    return tuple(p2) in isotopy_orbit(p1)


# --------------------------------------------------------------------------- #
#  Cancelling pairs                                                           #
# --------------------------------------------------------------------------- #
def pair_profile(value: TupleLike) -> PairProfile:
    """Maximal number of disjoint {p, -p} pairs in the parameter multiset."""
    pt = as_pretzel(value)
    counts = Counter(pt)
    pairs: List[Tuple[int, int]] = []
    for v in sorted(c for c in counts if c > 0):
        pairs.extend([(-v, v)] * min(counts[v], counts.get(-v, 0)))
    return PairProfile(
        t=len(pairs),
        removable_pairs=tuple(pairs),
        has_single_twists=any(abs(p) == 1 for p in pt),
        contains_unit_pair=counts.get(1, 0) > 0 and counts.get(-1, 0) > 0,
    )


def _is_ribbon_target(params: Params, odd: bool) -> bool:
    if odd:
        return len(params) == 1
    return len(params) == 2 and params[0] + params[1] == -1


def _cancelling_positions(params: Params) -> Iterable[int]:
    k = len(params)
    if k < 2:
        return
    last = k if k > 2 else 1
    for i in range(last):
        if params[i] == -params[(i + 1) % k]:
            yield i


def _remove_at(params: Params, i: int) -> Params:
    k = len(params)
    j = (i + 1) % k
    return tuple(p for idx, p in enumerate(params) if idx not in (i, j))


def _ribbon_search(start: Params, odd: bool) -> Optional[Tuple[RibbonMove, ...]]:
    failed: Set[Params] = set()

    def _dfs(params: Params) -> Optional[Tuple[RibbonMove, ...]]:
        if _is_ribbon_target(params, odd):
            return ()
        key = canonical_form(params) if len(params) > 0 else params
        if key in failed:
            return None
        # Removals commute with rotation/reflection, so only flype variants matter.
        arrangements = sorted(_orbit(params)) if any(abs(p) == 1 for p in params) else [params]
        for arranged in arrangements:
            for i in _cancelling_positions(arranged):
                rest = _remove_at(arranged, i)
                tail = _dfs(rest)
                if tail is not None:
                    j = (i + 1) % len(arranged)
                    move = RibbonMove(arranged=arranged, index=i, removed=(arranged[i], arranged[j]), result=rest)
                    return (move,) + tail
        failed.add(key)
        return None

    return _dfs(start)


def simple_ribbon_reduction(value: TupleLike) -> Optional[RibbonReduction]:
    """Return a removal sequence reaching the simple-ribbon target, or None."""
    pt = as_pretzel(value)
    kc = _require_knot(pt)
    params = tuple(pt)
    odd = kc is KnotClass.ODD_KNOT
    target_len = 1 if odd else 2
    if (pt.k - target_len) % 2 != 0 or pt.k < target_len:
        return None
    # Every move deletes a {p, -p} pair from the multiset.
    if pair_profile(pt).t < (pt.k - target_len) // 2:
        return None
    moves = _ribbon_search(params, odd)
    if moves is None:
        return None
    return RibbonReduction(start=params, moves=moves)


def is_simple_ribbon(value: TupleLike) -> bool:
    return simple_ribbon_reduction(value) is not None


def mutant_ribbon_witness(value: TupleLike) -> Optional[RibbonReduction]:
    """Simple-ribbon reduction of some reordering of the multiset, if any."""
    pt = as_pretzel(value)
    kc = _require_knot(pt)
    target_len = 1 if kc is KnotClass.ODD_KNOT else 2
    if pt.k < target_len or pair_profile(pt).t < (pt.k - target_len) // 2:
        return None
    direct = simple_ribbon_reduction(pt)
    if direct is not None:
        return direct
    seen: Set[Params] = set()
    for perm in permutations(pt.params):
        key = canonical_form(perm)
        if key in seen:
            continue
        seen.add(key)
        witness = simple_ribbon_reduction(PretzelTuple(perm))
        if witness is not None:
            return witness
    return None


def mutant_ribbon(value: TupleLike) -> bool:
    return mutant_ribbon_witness(value) is not None


def unit_pair_reduced(value: TupleLike) -> Optional[Params]:
    """Drop one 1 and one -1, keeping the order of the other strands."""
    params = list(as_pretzel(value))
    if 1 not in params or -1 not in params:
        return None
    params.remove(1)
    params.remove(-1)
    return tuple(params)
