from __future__ import annotations

"""
Star-shaped plumbing graphs and their intersection forms.

Γ₀ has a weight-0 centre and one single-vertex arm of weight p_i per strand.
Γ₊ trades every negative arm -b for a chain of b-1 vertices of weight 2 and
raises the centre weight by one for each arm it trades; positive arms are
untouched. Only the net effect of the blow-downs is modelled here, never a
diagram.

Basis order of every incidence matrix: centre, then arms in the order the
graph lists them, each arm starting next to the centre. `expand_to_gamma_plus`
lists positive arms first, so Γ₊ follows the v0, v1..vp, v_{j,r} labelling.
"""

from typing import List, Tuple

from pretzelslice.core.errors import NotOddKnotError, SignatureNonzeroError, UnitArmError
from pretzelslice.core.models import KnotClass, WeightedStarGraph
from pretzelslice.knots.pretzel_core import TupleLike, as_pretzel, classify, mirror
from pretzelslice.logging.helpers import get_logger
from pretzelslice.plumbing.forms import IntSymMatrix, signature_and_rank

logger = get_logger("plumbing")


def build_gamma0(value: TupleLike) -> WeightedStarGraph:
    pt = as_pretzel(value)
    if classify(pt) is not KnotClass.ODD_KNOT:
        raise NotOddKnotError(f"Γ₀ is only built for odd pretzel knots, got {pt}")
    return WeightedStarGraph(central_weight=0, arms=tuple((p,) for p in pt))


def _require_gamma0(g0: WeightedStarGraph) -> None:
    if g0.central_weight != 0 or any(len(arm) != 1 for arm in g0.arms):
        raise ValueError("expected a Γ₀ graph: centre weight 0 and single-vertex arms")


def expand_to_gamma_plus(g0: WeightedStarGraph, *, allow_unit_arms: bool = False) -> WeightedStarGraph:
    """Replace each negative arm -b by a chain of b-1 weight-2 vertices.

    A weight -1 arm would leave an empty chain. It is rejected unless
    `allow_unit_arms` is set, in which case it only raises the centre weight.
    """
    _require_gamma0(g0)
    weights = [arm[0] for arm in g0.arms]
    negatives = [w for w in weights if w < 0]
    if not negatives:
        raise ValueError("Γ₊ needs at least one negative arm")
    if -1 in negatives and not allow_unit_arms:
        raise UnitArmError("a -1 arm has no weight-2 chain; reduce single twists first")

    positive_arms: List[Tuple[int, ...]] = [(w,) for w in weights if w > 0]
    chains: List[Tuple[int, ...]] = [(2,) * (-w - 1) for w in negatives if w < -1]
    return WeightedStarGraph(
        central_weight=len(negatives),
        arms=tuple(positive_arms + chains),
    )


def incidence_matrix(g: WeightedStarGraph) -> IntSymMatrix:
    """Vertex weights on the diagonal, 1 for each edge of the star."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = g.central_weight
    idx = 1
    for arm in g.arms:
        prev = 0
        for w in arm:
            rows[idx][idx] = w
            rows[prev][idx] = rows[idx][prev] = 1
            prev = idx
            idx += 1
    return IntSymMatrix(rows)


def kirby_signature_delta(value: TupleLike, *, verify: bool = True) -> int:
    """σ(Q_{P₊}) - σ(Q_{P₀}) for a signature-zero odd knot, mirrored to s = -1.

    Both signatures come from exact diagonalisation of the two incidence
    matrices; the result should equal the sum of the |p_i| over the
    negative strands.
    """
    pt = as_pretzel(value)
    q0 = incidence_matrix(build_gamma0(pt))
    sigma0, _ = signature_and_rank(q0, verify=verify)
    if sigma0 != 0:
        raise SignatureNonzeroError(f"{pt} has σ = {sigma0}; Γ₊ is only used for signature-zero knots")

    s = sum(1 if p > 0 else -1 for p in pt)
    if s > 0:
        pt = mirror(pt)
        logger.debug("mirrored %s to reach s = -1", pt)
    # Q_{P₀} of the mirror is -Q_{P₀}, so its signature is still zero.
    g_plus = expand_to_gamma_plus(build_gamma0(pt), allow_unit_arms=True)
    sigma_plus, _ = signature_and_rank(incidence_matrix(g_plus), verify=verify)
    return sigma_plus - sigma0
