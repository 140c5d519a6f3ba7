"""
Local w-uniqueness certificates for a given solution (w*, z*).

With α = {i : w*_i > 0} and β = {i : w*_i = 0}, the certificate pivots A on
α and asks whether the homogeneous system

    A'_αα w_α + A'_αβ z_β = 0,   A'_βα w_α + A'_ββ z_β = 0,   w_α > 0, z_β > 0

has only the trivial solution. The converse check asks whether z = 0 is the
only solution of A_ββ z_β = 0; complementarity already forces z_α = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from ..constants import REL_EQ, REL_GT
from ..errors import SingularPivot
from ..linalg import IndexSet, LinearConstraint, Vector, det, embed, lp_feasible, null_space_basis, ppt, restrict
from ..linalg.types import primitive
from .instance import LCPInstance, Solution, verify_solution


@dataclass(frozen=True)
class WUniquenessVerdict:
    alpha: IndexSet
    beta: IndexSet
    certificate_holds: bool
    violating_pair: Optional[Tuple[Vector, Vector]] = None


@dataclass(frozen=True)
class ConverseVerdict:
    beta: IndexSet
    holds: bool
    witness: Optional[Vector] = None


def _split(solution: Solution, n: int) -> Tuple[IndexSet, IndexSet]:
    alpha = IndexSet.of((i for i in range(n) if solution.w[i] > 0), n)
    return alpha, alpha.complement()


def check_local_w_uniqueness(inst: LCPInstance, solution: Solution) -> WUniquenessVerdict:
    """
    Runs the local w-uniqueness certificate on a solution.

    Args:
        inst (LCPInstance): The instance.
        solution (Solution): A solution of inst; re-verified first.

    Returns:
        WUniquenessVerdict: certificate_holds when the system above is infeasible,
        otherwise the violating (w_α, z_β) as primitive integer vectors.

    Raises:
        InvalidSolution: If solution does not solve inst.
        SingularPivot: If A_αα is singular, so the certificate does not apply.
    """
    verify_solution(inst, solution.w, solution.z)
    n = inst.n
    alpha, beta = _split(solution, n)
    if alpha and det(inst.A.principal(alpha)) == 0:
        logging.warning(f"Certificate not applicable: A_{alpha.label()} is singular")
        raise SingularPivot(f"det A_{alpha.label()} = 0; the w-uniqueness certificate needs it nonsingular", alpha)

    # x_i stands for w_i on alpha and z_i on beta, in the original positions
    transformed = ppt(inst.A, alpha).transformed
    system = [LinearConstraint(row, REL_EQ) for row in transformed.rows]
    system += [LinearConstraint(tuple(Fraction(int(k == i)) for k in range(n)), REL_GT) for i in range(n)]
    result = lp_feasible(system, n)
    if not result.feasible:
        logging.info(f"w-uniqueness certificate holds (alpha = {alpha.label()})")
        return WUniquenessVerdict(alpha, beta, True)

    x = primitive(result.witness)
    logging.info(f"w-uniqueness certificate fails (alpha = {alpha.label()})")
    return WUniquenessVerdict(alpha, beta, False, (restrict(x, alpha), restrict(x, beta)))


def check_w_uniqueness_converse(inst: LCPInstance, solution: Solution) -> ConverseVerdict:
    """
    Decides whether z = 0 is the only solution of A_ββ z_β = 0.

    Returns:
        ConverseVerdict: holds, or a kernel vector embedded on β. β = ∅ holds vacuously.
    """
    verify_solution(inst, solution.w, solution.z)
    _, beta = _split(solution, inst.n)
    if not beta:
        return ConverseVerdict(beta, True)
    kernel = null_space_basis(inst.A.principal(beta))
    if not kernel:
        return ConverseVerdict(beta, True)
    return ConverseVerdict(beta, False, embed(kernel[0], beta))
