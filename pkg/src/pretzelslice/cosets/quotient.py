from __future__ import annotations

"""
Coset counting in Z² for one embedding solution.

The B-map sends a ±1-vector of Z^{a+b+c} to (q - s, r - s), where q, r, s
are its coordinate sums over the three row blocks. The columns v1, v2 of A
go to ṽ₁ = (aα - cγ, bβ - cγ) and ṽ₂ = (ax - cz, by - cz), and the index of
⟨ṽ₁, ṽ₂⟩ in Z² must equal √det(K). A slice knot needs the image ℋ of the
±1-vectors to meet every coset of that sublattice.

Residues use the Hermite normal form of [ṽ₁ ṽ₂] (sympy), so two points
share a coset iff their residues are equal.
"""

from math import gcd
from typing import Optional, Set, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from pretzelslice.core.errors import ConsistencyError, DegenerateLatticeError, PretzelError
from pretzelslice.core.models import (
    CosetReport,
    EmbeddingSolution,
    HexRegion,
    IntVec2,
    NormalizedQuintuple,
    QuotientLattice,
)
from pretzelslice.invariants.knot_invariants import determinant
from pretzelslice.logging.helpers import get_logger, trace_search

logger = get_logger("cosets")


def _odd_steps(n: int) -> range:
    return range(-n, n + 1, 2)


def enumerate_H(a: int, b: int, c: int) -> HexRegion:
    """Image of all ±1-vectors under the B-map for blocks of size a, b, c."""
    for v in (a, b, c):
        if v <= 0 or v % 2 == 0:
            raise PretzelError(f"block sizes must be odd and positive, got {(a, b, c)}")
    points: Set[IntVec2] = {
        (q - s, r - s) for q in _odd_steps(a) for r in _odd_steps(b) for s in _odd_steps(c)
    }
    return HexRegion(points=frozenset(points), a=a, b=b, c=c)


def hex_size(a: int, b: int, c: int) -> int:
    return a * b + a * c + b * c + a + b + c + 1


def b_map_images(q: NormalizedQuintuple, sol: EmbeddingSolution) -> Tuple[IntVec2, IntVec2]:
    a, b, c = q.negatives
    v1 = (a * sol.alpha - c * sol.gamma, b * sol.beta - c * sol.gamma)
    v2 = (a * sol.x - c * sol.z, b * sol.y - c * sol.z)
    return v1, v2


def _positive_column(col: IntVec2, axis: int) -> IntVec2:
    return col if col[axis] > 0 else (-col[0], -col[1])


def _reduced_basis(v1: IntVec2, v2: IntVec2) -> Tuple[IntVec2, IntVec2]:
    dm = DomainMatrix([[ZZ(v1[0]), ZZ(v2[0])], [ZZ(v1[1]), ZZ(v2[1])]], (2, 2), ZZ)
    w = [[int(x) for x in row] for row in hermite_normal_form(dm).to_list()]
    first, second = (w[0][0], w[1][0]), (w[0][1], w[1][1])
    if first[1] == 0:
        # Upper triangular: (h11, 0) and (h12, h22).
        first, second = _positive_column(first, 0), _positive_column(second, 1)
        return first, (second[0] % first[0], second[1])
    if second[0] == 0:
        # Lower triangular: (h11, h21) and (0, h22); keep the axis-aligned column first.
        first, second = _positive_column(first, 0), _positive_column(second, 1)
        return (0, second[1]), (first[0], first[1] % second[1])
    raise ConsistencyError(f"Hermite normal form of {v1}, {v2} is not triangular: {w}")


def quotient_from_solution(q: NormalizedQuintuple, sol: EmbeddingSolution) -> QuotientLattice:
    v1, v2 = b_map_images(q, sol)
    det = v1[0] * v2[1] - v1[1] * v2[0]
    if det == 0:
        raise DegenerateLatticeError(f"ṽ₁ = {v1} and ṽ₂ = {v2} are linearly dependent")
    return QuotientLattice(v1_tilde=v1, v2_tilde=v2, det_abs=abs(det), reduced_basis=_reduced_basis(v1, v2))


def residue(point: IntVec2, lat: QuotientLattice) -> IntVec2:
    """Canonical representative of point + ⟨ṽ₁, ṽ₂⟩.

    One reduced basis vector lies on a coordinate axis; the point is first
    brought into range along the other vector, then along the axis one.
    """
    axis_vec, other = lat.reduced_basis
    u, w = point
    if axis_vec[1] == 0:
        # axis_vec = (h11, 0), other = (h12, h22)
        k = w // other[1]
        u, w = u - k * other[0], w - k * other[1]
        return (u % axis_vec[0], w)
    # axis_vec = (0, h22), other = (h11, h21)
    k = u // other[0]
    u, w = u - k * other[0], w - k * other[1]
    return (u, w % axis_vec[1])


def r_equals_sqrt_det(q: NormalizedQuintuple, lat: QuotientLattice) -> bool:
    return lat.det_abs * lat.det_abs == determinant(q.as_tuple())


def _line_classes(region: HexRegion, g: IntVec2) -> int:
    """Number of classes of the region modulo the cyclic group generated by g."""
    step = gcd(abs(g[0]), abs(g[1]))
    p = (g[0] // step, g[1] // step)
    norm = p[0] * p[0] + p[1] * p[1]
    keys = {
        (u * p[1] - w * p[0], (u * p[0] + w * p[1]) % (step * norm))
        for (u, w) in region.points
    }
    return len(keys)


def solution_case(sol: EmbeddingSolution) -> Optional[int]:
    """1: α=1, β=γ=x=0.  2: β=1, α=γ=y=0.  3: γ=1, α=β=z=0."""
    al, be, ga, x, y, z = sol.as_tuple()
    if (al, be, ga, x) == (1, 0, 0, 0):
        return 1
    if (al, be, ga, y) == (0, 1, 0, 0):
        return 2
    if (al, be, ga, z) == (0, 0, 1, 0):
        return 3
    return None


def _case_formula(q: NormalizedQuintuple, sol: EmbeddingSolution, case: int) -> Tuple[int, int]:
    """(closed form for R, bound for the classes after collapsing by ṽ₁)."""
    a, b, c = q.negatives
    if case == 1:
        return a * abs(b * sol.y - c * sol.z), a * (b + c + 1)
    if case == 2:
        return b * abs(a * sol.x - c * sol.z), b * (a + c + 1)
    return c * abs(a * sol.x - b * sol.y), hex_size(a, b, c) - (a + 1) * (b + 1)


def _collapse_generator(sol: EmbeddingSolution, lat: QuotientLattice) -> IntVec2:
    if sum(1 for v in (sol.alpha, sol.beta, sol.gamma) if v == 0) >= 2:
        return lat.v1_tilde
    if sum(1 for v in (sol.x, sol.y, sol.z) if v == 0) >= 2:
        return lat.v2_tilde
    n1 = lat.v1_tilde[0] ** 2 + lat.v1_tilde[1] ** 2
    n2 = lat.v2_tilde[0] ** 2 + lat.v2_tilde[1] ** 2
    return lat.v1_tilde if n1 <= n2 else lat.v2_tilde


def coset_conditions(
    q: NormalizedQuintuple, sol: EmbeddingSolution, region: Optional[HexRegion] = None
) -> CosetReport:
    """Count the cosets of ⟨ṽ₁, ṽ₂⟩ met by ℋ and evaluate both coset conditions.

    `region` may be passed in when several solutions share (a, b, c).
    """
    lat = quotient_from_solution(q, sol)
    region = region or enumerate_H(*q.negatives)
    residues = {residue(p, lat) for p in region.points}
    r_count, h_count, h_bar = lat.det_abs, len(region), len(residues)

    case = solution_case(sol)
    case_bound = None
    identity = None
    if case is not None:
        closed_r, case_bound = _case_formula(q, sol, case)
        identity = closed_r == r_count

    report = CosetReport(
        solution=sol,
        v1_tilde=lat.v1_tilde,
        v2_tilde=lat.v2_tilde,
        R=r_count,
        H=h_count,
        H_bar=h_bar,
        cond_I=r_count <= h_count,
        cond_II=r_count <= h_bar,
        full_coverage=h_bar == r_count,
        H_bar_single=_line_classes(region, _collapse_generator(sol, lat)),
        case=case,
        case_bound=case_bound,
        case_identity_holds=identity,
    )
    trace_search(logger, "coset count", quintuple=q.as_tuple(), R=r_count, H=h_count, H_bar=h_bar)
    return report
