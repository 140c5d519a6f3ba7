"""
Z, E0 (semimonotone), R0 and R (regular) matrices.

E0, R0 and R are decided support by support with homogeneous strict
systems handed to lp_feasible in margin form.
"""

from fractions import Fraction
from typing import Callable, List, Optional

from ..config import check_enumeration_cap
from ..constants import CLASS_E0, CLASS_R, CLASS_R0, CLASS_Z, REL_EQ, REL_GE, REL_GT, REL_LT
from ..linalg import IndexSet, LinearConstraint, Matrix, Vector, det, embed, lp_feasible, subsets
from ..linalg.types import primitive
from .verdict import ClassVerdict

SupportSystem = Callable[[Matrix, IndexSet], Optional[List[LinearConstraint]]]


def is_Z(matrix: Matrix) -> ClassVerdict:
    """Z iff every off-diagonal entry is <= 0; the witness is the first positive off-diagonal position."""
    for i in range(matrix.n):
        for j in range(matrix.n):
            if i != j and matrix[i, j] > 0:
                return ClassVerdict(
                    CLASS_Z,
                    False,
                    witness_set=IndexSet.of({i, j}, matrix.n),
                    certificate_note=f"a_{i + 1}{j + 1} = {matrix[i, j]} > 0",
                )
    return ClassVerdict(CLASS_Z, True, certificate_note='all off-diagonal entries <= 0')


def _positive(size: int, extra: int = 0) -> List[LinearConstraint]:
    return [
        LinearConstraint(tuple(Fraction(int(k == i)) for k in range(size + extra)), REL_GT)
        for i in range(size)
    ]


def _e0_system(matrix: Matrix, sigma: IndexSet) -> List[LinearConstraint]:
    """z_σ > 0 and A_σσ z_σ < 0."""
    rows = matrix.principal(sigma)
    return _positive(len(sigma)) + [LinearConstraint(tuple(row), REL_LT) for row in rows]


def _r0_system(matrix: Matrix, sigma: IndexSet) -> Optional[List[LinearConstraint]]:
    """z_σ > 0, A_σσ z_σ = 0, A_σ̄σ z_σ >= 0; skipped when A_σσ is nonsingular."""
    principal = matrix.principal(sigma)
    if det(principal) != 0:
        return None
    off = matrix.block(sigma.complement(), sigma)
    return (
        _positive(len(sigma))
        + [LinearConstraint(tuple(row), REL_EQ) for row in principal]
        + [LinearConstraint(tuple(row), REL_GE) for row in off]
    )


def _r_system(matrix: Matrix, sigma: IndexSet) -> List[LinearConstraint]:
    """Over (z_σ, t): z_σ > 0, t >= 0, A_σσ z_σ + t e = 0, A_σ̄σ z_σ + t e >= 0."""
    size = len(sigma)
    t_unit = tuple(Fraction(int(k == size)) for k in range(size + 1))
    system = _positive(size, extra=1) + [LinearConstraint(t_unit, REL_GE)]
    for row in matrix.principal(sigma):
        system.append(LinearConstraint(tuple(row) + (Fraction(1),), REL_EQ))
    for row in matrix.block(sigma.complement(), sigma):
        system.append(LinearConstraint(tuple(row) + (Fraction(1),), REL_GE))
    return system


def _support_search(matrix: Matrix, build: SupportSystem, width_extra: int = 0) -> Optional[Vector]:
    """First support whose system is feasible; returns its z embedded by zeros."""
    check_enumeration_cap(matrix.n)
    for sigma in subsets(matrix.n):
        system = build(matrix, sigma)
        if system is None:
            continue
        result = lp_feasible(system, len(sigma) + width_extra)
        if result.feasible:
            z_sigma = primitive(result.witness[:len(sigma)])
            return embed(z_sigma, sigma)
    return None


def is_E0(matrix: Matrix) -> ClassVerdict:
    """E0 iff no support σ admits z_σ > 0 with A_σσ z_σ < 0."""
    note = 'no σ with z_σ > 0, A_σσ z_σ < 0'
    witness = _support_search(matrix, _e0_system)
    if witness is None:
        return ClassVerdict(CLASS_E0, True, certificate_note=note)
    return ClassVerdict(CLASS_E0, False, witness_vector=witness, certificate_note=note)


def is_R0(matrix: Matrix) -> ClassVerdict:
    """R0 iff LCP(0, A) has only z = 0; the witness is a nonzero solution."""
    note = 'LCP(0,A) has only the zero solution'
    witness = _support_search(matrix, _r0_system)
    if witness is None:
        return ClassVerdict(CLASS_R0, True, certificate_note=note)
    return ClassVerdict(CLASS_R0, False, witness_vector=witness, certificate_note=note)


def is_R(matrix: Matrix) -> ClassVerdict:
    """R iff z = 0 is the only solution of z >= 0, Az + te >= 0, z∘(Az + te) = 0 for every t >= 0."""
    note = 'no σ, t >= 0 with z_σ > 0, A_σσ z_σ + t = 0, A_σ̄σ z_σ + t >= 0'
    witness = _support_search(matrix, _r_system, width_extra=1)
    if witness is None:
        return ClassVerdict(CLASS_R, True, certificate_note=note)
    return ClassVerdict(CLASS_R, False, witness_vector=witness, certificate_note=note)
