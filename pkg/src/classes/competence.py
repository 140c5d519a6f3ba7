"""
Column competence and column adequacy.

A is column competent iff, for every support σ, rank A[:, σ] = rank A_σσ:
a vector z supported on σ has z∘Az = 0 exactly when A_σσ z_σ = 0, and then
Az = A[:, σ] z_σ, so competence asks that null(A_σσ) lie in null(A[:, σ]).
"""

import logging
from itertools import product
from typing import List, Optional, Tuple

from ..config import check_enumeration_cap
from ..constants import ADEQUACY_MODE_DIRECT, ADEQUACY_MODE_THEOREM, CLASS_COLUMN_ADEQUATE, CLASS_COLUMN_COMPETENT, REL_EQ, REL_GE, REL_GT, REL_LE, REL_LT
from ..errors import ModeDisagreement
from ..linalg import (
    IndexSet,
    LinearConstraint,
    Matrix,
    Vector,
    constraint,
    embed,
    lp_feasible,
    mat_vec,
    null_space_basis,
    rank,
    subsets,
)
from ..linalg.types import is_zero_vector, primitive
from .minors import is_P0
from .verdict import ClassVerdict


def competence_failure(matrix: Matrix) -> Optional[Tuple[IndexSet, Vector]]:
    """
    First support σ (by size, then lexicographic) where the rank test fails.

    Returns:
        (σ, z) with z supported on σ, z∘Az = 0 and Az != 0; None when A is column competent.
    """
    check_enumeration_cap(matrix.n)
    for sigma in subsets(matrix.n):
        principal = matrix.principal(sigma)
        columns = matrix.columns(sigma)
        if rank(columns) == rank(principal):
            continue
        for v in null_space_basis(principal):
            if not is_zero_vector(mat_vec(columns, v)):
                return sigma, embed(v, sigma)
    return None


def is_column_competent(matrix: Matrix) -> ClassVerdict:
    """
    Decides column competence by the support rank test.

    Args:
        matrix (Matrix): The matrix A.

    Returns:
        ClassVerdict: On failure the witness z has z_i(Az)_i = 0 for all i and Az != 0.
    """
    failure = competence_failure(matrix)
    note = 'rank A[:,σ] = rank A_σσ for every support σ'
    if failure is None:
        return ClassVerdict(CLASS_COLUMN_COMPETENT, True, certificate_note=note)
    sigma, z = failure
    return ClassVerdict(
        CLASS_COLUMN_COMPETENT,
        False,
        witness_vector=z,
        witness_set=sigma,
        certificate_note=f"{note}; fails on {sigma.label()}",
    )


def _unit(n: int, i: int) -> List[int]:
    return [int(k == i) for k in range(n)]


def _sign_pattern_system(matrix: Matrix, pattern: Tuple[int, ...]) -> List[LinearConstraint]:
    """{sign(z) = pattern, z_i(Az)_i <= 0} written as homogeneous linear relations."""
    n = matrix.n
    system = []
    for i, s in enumerate(pattern):
        row = matrix.rows[i]
        if s > 0:
            system.append(constraint(_unit(n, i), REL_GT))
            system.append(LinearConstraint(row, REL_LE))
        elif s < 0:
            system.append(constraint(_unit(n, i), REL_LT))
            system.append(LinearConstraint(row, REL_GE))
        else:
            system.append(constraint(_unit(n, i), REL_EQ))
    return system


def adequacy_violation(matrix: Matrix) -> Optional[Vector]:
    """
    Direct search for z with z_i(Az)_i <= 0 for all i and Az != 0.

    Sign orthants are scanned with the first nonzero sign fixed to +, since
    z and -z are violations together. Inside an orthant the sign-feasible
    point found first is tried; if it lies in ker A, each (Az)_j > 0 and
    (Az)_j < 0 is tested separately.
    """
    check_enumeration_cap(matrix.n)
    n = matrix.n
    for pattern in product((1, -1, 0), repeat=n):
        leading = next((s for s in pattern if s != 0), 0)
        if leading <= 0:
            continue
        system = _sign_pattern_system(matrix, pattern)
        probe = lp_feasible(system, n)
        if not probe.feasible:
            continue
        if not matrix.is_zero_on(probe.witness):
            return primitive(probe.witness)
        for j in range(n):
            for relation in (REL_GT, REL_LT):
                attempt = lp_feasible(system + [LinearConstraint(matrix.rows[j], relation)], n)
                if attempt.feasible:
                    return primitive(attempt.witness)
    return None


def _adequate_by_theorem(matrix: Matrix) -> ClassVerdict:
    competent = is_column_competent(matrix)
    p0 = is_P0(matrix)
    note = 'column competent and P0'
    if competent.member and p0.member:
        return ClassVerdict(CLASS_COLUMN_ADEQUATE, True, certificate_note=note)
    failing = competent if not competent.member else p0
    return ClassVerdict(
        CLASS_COLUMN_ADEQUATE,
        False,
        witness_vector=failing.witness_vector,
        witness_set=failing.witness_set,
        certificate_note=f"{note}; {failing.class_name} fails",
    )


def _adequate_directly(matrix: Matrix) -> ClassVerdict:
    note = 'no z with z_i(Az)_i <= 0 for all i and Az != 0 (sign-orthant LP search)'
    violation = adequacy_violation(matrix)
    if violation is None:
        return ClassVerdict(CLASS_COLUMN_ADEQUATE, True, certificate_note=note)
    return ClassVerdict(CLASS_COLUMN_ADEQUATE, False, witness_vector=violation, certificate_note=note)


def is_column_adequate(matrix: Matrix, mode: str = ADEQUACY_MODE_THEOREM, cross_check: bool = True) -> ClassVerdict:
    """
    Decides column adequacy.

    Args:
        matrix (Matrix): The matrix A.
        mode (str): 'theorem' (competent and P0) or 'direct' (sign-orthant search).
        cross_check (bool): Also run the other mode and compare.

    Returns:
        ClassVerdict: The verdict of the requested mode.

    Raises:
        ModeDisagreement: If cross_check is on and the two modes differ.
        ValueError: On an unknown mode.
    """
    procedures = {
        ADEQUACY_MODE_THEOREM: _adequate_by_theorem,
        ADEQUACY_MODE_DIRECT: _adequate_directly,
    }
    if mode not in procedures:
        raise ValueError(f"unknown adequacy mode {mode!r}; expected one of {sorted(procedures)}")
    verdict = procedures[mode](matrix)
    if cross_check:
        other_mode = ADEQUACY_MODE_DIRECT if mode == ADEQUACY_MODE_THEOREM else ADEQUACY_MODE_THEOREM
        other = procedures[other_mode](matrix)
        if other.member != verdict.member:
            logging.error(f"Adequacy modes disagree on {matrix.rows}: {mode}={verdict.member}, {other_mode}={other.member}")
            raise ModeDisagreement(
                f"column adequacy: {mode} mode says {verdict.member}, {other_mode} mode says {other.member}"
            )
    return verdict
