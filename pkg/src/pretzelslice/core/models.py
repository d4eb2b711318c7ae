from __future__ import annotations

"""
Value types shared across pretzelslice.

Everything here is a frozen dataclass or an Enum: verdicts, traces and
search results are immutable once produced, so they can be handed across
process boundaries and compared in tests without copying.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Optional, Tuple

from pretzelslice.constants import (
    REASON_COSET_COVERAGE,
    REASON_LATTICE_EMBEDDING,
    REASON_SIGNATURE,
    VERDICT_INCONCLUSIVE,
    VERDICT_NOT_A_KNOT,
    VERDICT_NOT_SLICE,
    VERDICT_SLICE,
)
from pretzelslice.core.errors import InvalidTupleError

IntVec2 = Tuple[int, int]


@dataclass(frozen=True)
class PretzelTuple:
    """Ordered twist parameters p1 … pk of P(p1, …, pk)."""

    params: Tuple[int, ...]

    def __post_init__(self) -> None:
        raw = tuple(self.params)
        if not raw:
            raise InvalidTupleError("a pretzel tuple needs at least one strand")
        for p in raw:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InvalidTupleError(f"twist parameter {p!r} is not an integer")
            if p == 0:
                raise InvalidTupleError("twist parameters must be nonzero")
        object.__setattr__(self, "params", raw)

    @classmethod
    def of(cls, *params: int) -> "PretzelTuple":
        return cls(tuple(params))

    @property
    def k(self) -> int:
        return len(self.params)

    def __iter__(self) -> Iterator[int]:
        return iter(self.params)

    def __len__(self) -> int:
        return len(self.params)

    def __getitem__(self, idx: int) -> int:
        return self.params[idx]

    def __str__(self) -> str:
        return "P(" + ", ".join(str(p) for p in self.params) + ")"


class KnotClass(Enum):
    ODD_KNOT = "odd_knot"
    EVEN_KNOT = "even_knot"
    LINK = "link"

    @property
    def is_knot(self) -> bool:
        return self is not KnotClass.LINK


@dataclass(frozen=True)
class PairProfile:
    t: int
    removable_pairs: Tuple[Tuple[int, int], ...]
    has_single_twists: bool
    contains_unit_pair: bool


@dataclass(frozen=True)
class RibbonMove:
    """One simple-ribbon move.

    `arranged` is the tuple after any single-twist flypes, `index` the
    position of the first strand of the cyclically adjacent cancelling pair,
    and `result` the tuple left after deleting the pair.
    """

    arranged: Tuple[int, ...]
    index: int
    removed: Tuple[int, int]
    result: Tuple[int, ...]


@dataclass(frozen=True)
class RibbonReduction:
    start: Tuple[int, ...]
    moves: Tuple[RibbonMove, ...]

    @property
    def final(self) -> Tuple[int, ...]:
        return self.moves[-1].result if self.moves else self.start


@dataclass(frozen=True)
class SignatureReport:
    s: int
    e_hat: Fraction
    sigma: int

    @property
    def infinite_order(self) -> bool:
        return self.sigma != 0


@dataclass(frozen=True)
class WeightedStarGraph:
    """Star-shaped plumbing graph.

    Each arm lists its vertex weights starting from the vertex adjacent to
    the centre.
    """

    central_weight: int
    arms: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple(tuple(arm) for arm in self.arms))

    @property
    def vertex_count(self) -> int:
        return 1 + sum(len(arm) for arm in self.arms)

    @property
    def weights(self) -> Tuple[int, ...]:
        return (self.central_weight,) + tuple(w for arm in self.arms for w in arm)


@dataclass(frozen=True)
class NormalizedQuintuple:
    """P(-a, -b, -c, d, e) with a ≤ b ≤ c and d ≤ e, all odd and positive."""

    a: int
    b: int
    c: int
    d: int
    e: int
    mirrored: bool = False

    @property
    def negatives(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def rank(self) -> int:
        return self.a + self.b + self.c

    def as_tuple(self) -> Tuple[int, ...]:
        return (-self.a, -self.b, -self.c, self.d, self.e)


@dataclass(frozen=True, order=True)
class EmbeddingSolution:
    alpha: int
    beta: int
    gamma: int
    x: int
    y: int
    z: int

    def as_tuple(self) -> Tuple[int, int, int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.x, self.y, self.z)


@dataclass(frozen=True)
class EmbeddingMatrix:
    """Integer matrix A, row-major, whose columns are labelled basis vectors."""

    rows: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    def column(self, idx: int) -> Tuple[int, ...]:
        return tuple(row[idx] for row in self.rows)

    def column_by_label(self, label: str) -> Tuple[int, ...]:
        return self.column(self.labels.index(label))


@dataclass(frozen=True)
class QuotientLattice:
    v1_tilde: IntVec2
    v2_tilde: IntVec2
    det_abs: int
    # Columns of the Hermite normal form basis, as (first, second).
    reduced_basis: Tuple[IntVec2, IntVec2]


@dataclass(frozen=True)
class HexRegion:
    points: frozenset
    a: int
    b: int
    c: int

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> Tuple[IntVec2, ...]:
        return tuple(sorted(self.points))


@dataclass(frozen=True)
class CosetReport:
    solution: EmbeddingSolution
    v1_tilde: IntVec2
    v2_tilde: IntVec2
    R: int
    H: int
    H_bar: int
    cond_I: bool
    cond_II: bool
    full_coverage: bool
    # Classes of ℋ modulo the one generator the case analysis collapses by.
    H_bar_single: int = 0
    case: Optional[int] = None
    case_bound: Optional[int] = None
    case_identity_holds: Optional[bool] = None


class VerdictKind(Enum):
    NOT_A_KNOT = VERDICT_NOT_A_KNOT
    NOT_SLICE = VERDICT_NOT_SLICE
    SLICE = VERDICT_SLICE
    INCONCLUSIVE = VERDICT_INCONCLUSIVE


class ObstructionReason(Enum):
    SIGNATURE = REASON_SIGNATURE
    LATTICE_EMBEDDING = REASON_LATTICE_EMBEDDING
    COSET_COVERAGE = REASON_COSET_COVERAGE


@dataclass(frozen=True)
class ObstructionTrace:
    """How far the pipeline got, and what each stage found."""

    params: Tuple[int, ...]
    knot_class: KnotClass
    pair_profile: Optional[PairProfile] = None
    signature: Optional[SignatureReport] = None
    determinant: Optional[int] = None
    normalized: Optional[NormalizedQuintuple] = None
    embedding_solutions: Tuple[EmbeddingSolution, ...] = ()
    coset_reports: Tuple[CosetReport, ...] = ()
    simple_ribbon: bool = False
    mutant_ribbon: bool = False
    single_twist_case: Optional[int] = None

    @property
    def single_twists(self) -> bool:
        return bool(self.pair_profile and self.pair_profile.has_single_twists)

    @property
    def any_full_coverage(self) -> bool:
        return any(r.full_coverage for r in self.coset_reports)


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    trace: ObstructionTrace
    reason: Optional[ObstructionReason] = None
    witness: Optional[RibbonReduction] = None
    mutant_ribbon: bool = False
    unit_pair_reduced: Optional[Tuple[int, ...]] = None

    @property
    def is_not_slice(self) -> bool:
        return self.kind is VerdictKind.NOT_SLICE


@dataclass(frozen=True)
class VerdictRecord:
    """Flat, serialisable view of a verdict. Field order is the wire order."""

    tuple: Tuple[int, ...]
    multiset: Tuple[int, ...]
    verdict: str
    reason: Optional[str]
    sigma: Optional[int]
    det: Optional[int]
    num_embedding_solutions: int
    solutions: Tuple[Dict[str, Any], ...] = ()
    flags: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tuple": list(self.tuple),
            "multiset": list(self.multiset),
            "verdict": self.verdict,
            "reason": self.reason,
            "sigma": self.sigma,
            "det": self.det,
            "num_embedding_solutions": self.num_embedding_solutions,
            "solutions": [dict(s) for s in self.solutions],
            "flags": dict(self.flags),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "VerdictRecord":
        return cls(
            tuple=tuple(data["tuple"]),
            multiset=tuple(data["multiset"]),
            verdict=data["verdict"],
            reason=data.get("reason"),
            sigma=data.get("sigma"),
            det=data.get("det"),
            num_embedding_solutions=int(data.get("num_embedding_solutions", 0)),
            solutions=tuple(_solution_from_dict(s) for s in data.get("solutions", ())),
            flags=dict(data.get("flags", {})),
        )


def _solution_from_dict(raw: Dict[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for key, val in raw.items():
        # JSON turns 2-vectors and 6-tuples into lists; keep tuples in memory.
        out[key] = tuple(val) if isinstance(val, list) else val
    return out


def multiset_key(params: Iterable[int]) -> Tuple[int, ...]:
    return tuple(sorted(params))
