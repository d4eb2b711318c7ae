from __future__ import annotations

"""
Lattice embeddings of Q_{P₊} for odd five-stranded knots.

A signature-zero knot is first brought to the form P(-a, -b, -c, d, e) with
a ≤ b ≤ c and d ≤ e. An embedding of the Γ₊ form into the diagonal lattice
Z^{a+b+c} can then be written, after a change of basis, as a block matrix
fixed by six integers (α, β, γ, x, y, z) subject to

    α + β + γ = 1            x + y + z = 1
    aα² + bβ² + cγ² = d      ax² + by² + cz² = e
    aαx + bβy + cγz = 0

`solve_embedding` lists every integer solution by bounded search;
`build_embedding_matrix` writes out the matching matrix A and checks
AᵀA = Q_{P₊} exactly.
"""

from math import isqrt
from typing import Iterator, List, Optional, Sequence, Tuple

from pretzelslice.core.errors import (
    ConsistencyError,
    InvalidSolutionError,
    NotFiveStrandedError,
    SignatureNonzeroError,
)
from pretzelslice.core.models import EmbeddingMatrix, EmbeddingSolution, NormalizedQuintuple
from pretzelslice.invariants.knot_invariants import require_odd_knot, signature_formula
from pretzelslice.knots.pretzel_core import TupleLike, mirror, pair_profile
from pretzelslice.logging.helpers import get_logger, trace_search
from pretzelslice.plumbing.forms import gram_matrix
from pretzelslice.plumbing.graphs import build_gamma0, expand_to_gamma_plus, incidence_matrix

logger = get_logger("embedding")

Triple = Tuple[int, int, int]


def normalize(value: TupleLike) -> NormalizedQuintuple:
    """Mirror to s = -1 if needed and sort the strands into (a, b, c, d, e)."""
    pt = require_odd_knot(value)
    if pt.k != 5:
        raise NotFiveStrandedError(f"{pt} has {pt.k} strands, expected 5")
    report = signature_formula(pt)
    if report.sigma != 0:
        raise SignatureNonzeroError(f"{pt} has σ = {report.sigma}")
    mirrored = report.s > 0
    if mirrored:
        pt = mirror(pt)
    negatives = sorted(-p for p in pt if p < 0)
    positives = sorted(p for p in pt if p > 0)
    if len(negatives) != 3 or len(positives) != 2:
        raise ConsistencyError(f"signature-zero quintuple {pt} does not split 3 + 2")
    a, b, c = negatives
    d, e = positives
    return NormalizedQuintuple(a=a, b=b, c=c, d=d, e=e, mirrored=mirrored)


def _weighted_triples(a: int, b: int, c: int, target: int) -> Iterator[Triple]:
    """Integer (u, v, w) with u + v + w = 1 and a·u² + b·v² + c·w² = target."""
    lim_u = isqrt(target // a)
    lim_v = isqrt(target // b)
    for u in range(-lim_u, lim_u + 1):
        rest = target - a * u * u
        for v in range(-lim_v, lim_v + 1):
            w = 1 - u - v
            if b * v * v + c * w * w == rest:
                yield (u, v, w)


def solve_embedding(q: NormalizedQuintuple) -> List[EmbeddingSolution]:
    """Every integer solution of the five embedding conditions, sorted."""
    a, b, c = q.negatives
    firsts = list(_weighted_triples(a, b, c, q.d))
    seconds = list(_weighted_triples(a, b, c, q.e)) if firsts else []
    solutions = [
        EmbeddingSolution(alpha, beta, gamma, x, y, z)
        for (alpha, beta, gamma) in firsts
        for (x, y, z) in seconds
        if a * alpha * x + b * beta * y + c * gamma * z == 0
    ]
    solutions.sort()
    trace_search(
        logger,
        "embedding search",
        quintuple=q.as_tuple(),
        first_column=len(firsts),
        second_column=len(seconds),
        solutions=len(solutions),
    )
    return solutions


def check_solution(q: NormalizedQuintuple, sol: EmbeddingSolution) -> None:
    """Raise InvalidSolutionError naming the first embedding condition that fails."""
    a, b, c = q.negatives
    al, be, ga, x, y, z = sol.as_tuple()
    checks = (
        ("α + β + γ = 1", al + be + ga == 1),
        ("x + y + z = 1", x + y + z == 1),
        ("aαx + bβy + cγz = 0", a * al * x + b * be * y + c * ga * z == 0),
        ("aα² + bβ² + cγ² = d", a * al * al + b * be * be + c * ga * ga == q.d),
        ("ax² + by² + cz² = e", a * x * x + b * y * y + c * z * z == q.e),
    )
    for label, ok in checks:
        if not ok:
            raise InvalidSolutionError(f"{sol.as_tuple()} violates {label} for {q.as_tuple()}")


def _block_column(sizes: Sequence[int], values: Sequence[int]) -> List[int]:
    col: List[int] = []
    for size, val in zip(sizes, values):
        col.extend([val] * size)
    return col


def build_embedding_matrix(q: NormalizedQuintuple, sol: EmbeddingSolution) -> EmbeddingMatrix:
    """Block matrix A for one solution, checked against the Γ₊ form.

    Rows come in blocks of size a, b, c. Column order and labels follow Γ₊:
    v0, v1 (arm d), v2 (arm e), then v{j},{r} along the chain of block j.
    """
    check_solution(q, sol)
    sizes = q.negatives
    m = q.rank
    offsets = (0, sizes[0], sizes[0] + sizes[1])

    columns: List[List[int]] = []
    labels: List[str] = []

    v0 = [0] * m
    for off in offsets:
        v0[off] = 1
    columns.append(v0)
    labels.append("v0")
    columns.append(_block_column(sizes, (sol.alpha, sol.beta, sol.gamma)))
    labels.append("v1")
    columns.append(_block_column(sizes, (sol.x, sol.y, sol.z)))
    labels.append("v2")

    for j, (off, size) in enumerate(zip(offsets, sizes), start=1):
        for r in range(1, size):
            sign = 1 if r % 2 == 1 else -1
            col = [0] * m
            col[off + r - 1] = sign
            col[off + r] = -sign
            columns.append(col)
            labels.append(f"v{j},{r}")

    rows = tuple(tuple(col[i] for col in columns) for i in range(m))
    matrix = EmbeddingMatrix(rows=rows, labels=tuple(labels))

    expected = incidence_matrix(expand_to_gamma_plus(build_gamma0(q.as_tuple()), allow_unit_arms=True))
    if gram_matrix(columns) != expected:
        raise ConsistencyError(f"AᵀA differs from Q_P+ for {q.as_tuple()} with {sol.as_tuple()}")
    return matrix


# --------------------------------------------------------------------------- #
#  Structural lemmas on 0-pair quintuples                                     #
# --------------------------------------------------------------------------- #
def is_zero_pair(q: NormalizedQuintuple) -> bool:
    return pair_profile(q.as_tuple()).t == 0


def lemma_two_zeros(q: NormalizedQuintuple, sol: EmbeddingSolution) -> bool:
    """Two zeros among (α, β, γ) force d into {a, b, c}; likewise (x, y, z) and e."""
    ok = True
    if sum(1 for v in (sol.alpha, sol.beta, sol.gamma) if v == 0) >= 2:
        ok = ok and q.d in q.negatives
    if sum(1 for v in (sol.x, sol.y, sol.z) if v == 0) >= 2:
        ok = ok and q.e in q.negatives
    return ok


def lemma_lower_bounds(q: NormalizedQuintuple, solutions: Sequence[EmbeddingSolution]) -> bool:
    """A 0-pair quintuple with solutions has d ≥ 4a+b, e ≥ a+b+c (up to d ↔ e) or d, e ≥ a+b+c."""
    if not solutions or not is_zero_pair(q):
        return True
    a, b, c = q.negatives
    rank = a + b + c
    low = 4 * a + b
    d, e = q.d, q.e
    return (d >= rank and e >= rank) or (d >= low and e >= rank) or (e >= low and d >= rank)


def lemma_tight_d(q: NormalizedQuintuple, solutions: Sequence[EmbeddingSolution]) -> bool:
    """If d sits on one of its lower bounds then e ≥ 4a + 4b + c."""
    if not solutions or not is_zero_pair(q):
        return True
    a, b, c = q.negatives
    if q.d in (4 * a + b, a + b + c):
        return q.e >= 4 * a + 4 * b + c
    return True


def single_twist_case(q: NormalizedQuintuple) -> Optional[int]:
    """Shape of a 0-pair quintuple with single twists: 1 (a=b=c=1), 2 (a=b=1<c), 3 (a=1<b)."""
    a, b, c = q.negatives
    if a != 1 or not is_zero_pair(q):
        return None
    if b == 1:
        return 1 if c == 1 else 2
    return 3
