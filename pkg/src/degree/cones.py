"""
Complementary cones of (I, -A) and non-degeneracy of q.

C_α takes column i of -A for i in α and column i of I otherwise, so
q = C_α x with x >= 0 is exactly a solution of LCP(q, A) with z_α = x_α
and w_ᾱ = x_ᾱ.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import check_enumeration_cap
from ..constants import CONE_BOUNDARY, CONE_INTERIOR, CONE_OUTSIDE, CONE_SINGULAR, REL_EQ
from ..errors import DimensionMismatch
from ..linalg import IndexSet, LinearConstraint, Matrix, det, lp_feasible, solve_linear, subsets


def cone_matrix(A: Matrix, alpha: IndexSet) -> List[List[Fraction]]:
    return [
        [-A[i, j] if j in alpha else Fraction(int(i == j)) for j in range(A.n)]
        for i in range(A.n)
    ]


def _check(A: Matrix, q: Sequence[Fraction]) -> None:
    if len(q) != A.n:
        raise DimensionMismatch(f"q has {len(q)} entries for a matrix of order {A.n}")


def cone_coordinates(A: Matrix, q: Sequence[Fraction], alpha: IndexSet) -> Optional[Tuple[Fraction, ...]]:
    """x with C_α x = q, or None when C_α is singular."""
    cone = cone_matrix(A, alpha)
    if det(cone) == 0:
        return None
    return solve_linear(cone, q).particular


def cone_membership(A: Matrix, q: Sequence[Fraction], alpha: IndexSet) -> str:
    """
    Position of q relative to the complementary cone pos(C_α).

    Returns:
        str: 'singular' when det C_α = 0, else 'interior' (x > 0),
        'boundary' (x >= 0 with a zero entry) or 'outside'.
    """
    _check(A, q)
    x = cone_coordinates(A, q, alpha)
    if x is None:
        return CONE_SINGULAR
    if all(v > 0 for v in x):
        return CONE_INTERIOR
    if all(v >= 0 for v in x):
        return CONE_BOUNDARY
    return CONE_OUTSIDE


def degeneracy_witness(A: Matrix, q: Sequence[Fraction]) -> Optional[Tuple[IndexSet, str]]:
    """
    First cone showing q is degenerate with respect to A.

    q is degenerate when it lies on the boundary of a nonsingular cone or in
    a singular cone at all ({C_α x = q, x >= 0} feasible).

    Returns:
        (alpha, membership) for the first offending cone, or None.
    """
    _check(A, q)
    check_enumeration_cap(A.n)
    for alpha in subsets(A.n, include_empty=True):
        membership = cone_membership(A, q, alpha)
        if membership == CONE_BOUNDARY:
            return alpha, membership
        if membership == CONE_SINGULAR:
            system = [LinearConstraint(tuple(row), REL_EQ, Fraction(qi)) for row, qi in zip(cone_matrix(A, alpha), q)]
            if lp_feasible(system, A.n, nonnegative=True).feasible:
                return alpha, membership
    return None


def is_q_nondegenerate(A: Matrix, q: Sequence[Fraction]) -> bool:
    return degeneracy_witness(A, q) is None
