"""
Local degree of f_A at a non-degenerate q and its behaviour under principal pivoting.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import check_enumeration_cap
from ..constants import CONE_INTERIOR
from ..errors import DegenerateQ, DimensionMismatch
from ..linalg import IndexSet, Matrix, Vector, det, inverse, mat_vec, ppt, subsets
from .cones import cone_membership, degeneracy_witness


@dataclass(frozen=True)
class DegreeResult:
    """value = sum of the indices sgn(det A_αα) over cones holding q in their interior."""
    value: int
    contributions: List[Tuple[IndexSet, int]]
    q_nondegenerate: bool = True


@dataclass(frozen=True)
class PPTDegreeReport:
    beta: IndexSet
    pivot_sign: Optional[int] = None
    q_prime: Optional[Vector] = None
    original: Optional[DegreeResult] = None
    transformed: Optional[DegreeResult] = None
    failed_preconditions: List[str] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return not self.failed_preconditions

    @property
    def holds(self) -> Optional[bool]:
        if not self.applicable:
            return None
        return self.transformed.value == self.pivot_sign * self.original.value


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def local_degree(A: Matrix, q: Sequence[Fraction]) -> DegreeResult:
    """
    deg_A(q) for q non-degenerate with respect to A.

    Args:
        A (Matrix): The matrix.
        q (Sequence[Fraction]): The constant vector.

    Returns:
        DegreeResult: The degree and one (α, ±1) contribution per solution of
        LCP(q, A), in support enumeration order. α = ∅ contributes +1.

    Raises:
        DegenerateQ: If q is degenerate with respect to A.
    """
    check_enumeration_cap(A.n)
    witness = degeneracy_witness(A, q)
    if witness is not None:
        alpha, membership = witness
        raise DegenerateQ(f"q is degenerate with respect to A ({membership} cone {alpha.label()})")

    contributions = [
        (alpha, _sign(det(A.principal(alpha))))
        for alpha in subsets(A.n, include_empty=True)
        if cone_membership(A, q, alpha) == CONE_INTERIOR
    ]
    value = sum(index for _, index in contributions)
    logging.info(f"Local degree {value} from {len(contributions)} interior cone(s)")
    return DegreeResult(value, contributions)


def ppt_image(A: Matrix, q: Sequence[Fraction], beta: IndexSet) -> Vector:
    """
    The constant vector of the pivoted problem LCP(q', ppt(A, β)).

    q'_β = -A_ββ^-1 q_β and q'_β̄ = q_β̄ - A_β̄β A_ββ^-1 q_β.

    Raises:
        SingularPivot: If A_ββ is singular.
    """
    if len(q) != A.n:
        raise DimensionMismatch(f"q has {len(q)} entries for a matrix of order {A.n}")
    if not beta:
        return tuple(Fraction(x) for x in q)
    solved = mat_vec(inverse(A.principal(beta)), [q[i] for i in beta])
    image = [Fraction(x) for x in q]
    for position, i in enumerate(beta):
        image[i] = -solved[position]
    coupling = mat_vec(A.block(beta.complement(), beta), solved)
    for position, j in enumerate(beta.complement()):
        image[j] = q[j] - coupling[position]
    return tuple(image)


def verify_ppt_degree_relation(A: Matrix, q: Sequence[Fraction], beta: IndexSet) -> PPTDegreeReport:
    """
    Compares deg_{A'}(q') with sgn(det A_ββ) deg_A(q) for A' = ppt(A, β).

    Each unmet precondition (A_ββ singular, q degenerate for A, q' degenerate
    for A') is listed in the report instead of raising.
    """
    pivot_det = det(A.principal(beta))
    if pivot_det == 0:
        return PPTDegreeReport(beta, failed_preconditions=[f"det A_{beta.label()} = 0"])

    failed = []
    transformed = ppt(A, beta).transformed
    q_prime = ppt_image(A, q, beta)
    if degeneracy_witness(A, q) is not None:
        failed.append('q is degenerate with respect to A')
    if degeneracy_witness(transformed, q_prime) is not None:
        failed.append("q' is degenerate with respect to A'")
    if failed:
        return PPTDegreeReport(beta, _sign(pivot_det), q_prime, failed_preconditions=failed)

    report = PPTDegreeReport(
        beta,
        _sign(pivot_det),
        q_prime,
        original=local_degree(A, q),
        transformed=local_degree(transformed, q_prime),
    )
    if not report.holds:
        logging.warning(
            f"Pivoted degree {report.transformed.value} != {report.pivot_sign} * {report.original.value} "
            f"for beta = {beta.label()}"
        )
    return report
