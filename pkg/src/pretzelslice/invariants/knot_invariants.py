from __future__ import annotations

"""
Classical invariants of odd pretzel knots.

Two independent routes are kept for each quantity: a closed form and an
oracle through the Γ₀ intersection form. Callers that want a cross-check
compare the two; the pipeline only uses the closed forms.
"""

from fractions import Fraction
from math import prod

from pretzelslice.core.errors import ConsistencyError, EulerZeroError, NotOddKnotError
from pretzelslice.core.models import KnotClass, PretzelTuple, SignatureReport
from pretzelslice.knots.pretzel_core import TupleLike, as_pretzel, classify
from pretzelslice.plumbing.forms import signature_and_rank
from pretzelslice.plumbing.graphs import build_gamma0, incidence_matrix


def require_odd_knot(value: TupleLike) -> PretzelTuple:
    pt = as_pretzel(value)
    if classify(pt) is not KnotClass.ODD_KNOT:
        raise NotOddKnotError(f"{pt} is not an odd pretzel knot")
    return pt


def euler_sum(value: TupleLike) -> Fraction:
    """ê = Σ 1/p_i, exactly."""
    return sum((Fraction(1, p) for p in as_pretzel(value)), Fraction(0))


def signature_formula(value: TupleLike) -> SignatureReport:
    """σ = s - sgn(ê), where s counts positive minus negative strands."""
    pt = require_odd_knot(value)
    s = sum(1 if p > 0 else -1 for p in pt)
    e_hat = euler_sum(pt)
    if e_hat == 0:
        raise EulerZeroError(f"ê vanishes for {pt}")
    sigma = s - (1 if e_hat > 0 else -1)
    if sigma % 2 != 0:
        raise ConsistencyError(f"odd signature {sigma} computed for {pt}")
    return SignatureReport(s=s, e_hat=e_hat, sigma=sigma)


def signature_oracle(value: TupleLike, *, verify: bool = True) -> int:
    pt = require_odd_knot(value)
    sigma, _ = signature_and_rank(incidence_matrix(build_gamma0(pt)), verify=verify)
    return sigma


def determinant(value: TupleLike) -> int:
    """|Σ_i Π_{j≠i} p_j|; a single strand gives 1."""
    params = require_odd_knot(value).params
    total = sum(prod(params[:i] + params[i + 1:]) for i in range(len(params)))
    return abs(total)


def determinant_oracle(value: TupleLike) -> int:
    pt = require_odd_knot(value)
    return abs(incidence_matrix(build_gamma0(pt)).determinant())
