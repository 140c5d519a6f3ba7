"""
Full classification of one matrix.

classify() runs every class decision procedure and then cross-checks the
verdicts against the implications that hold between the classes. A failed
cross-check means a bug in one of the procedures, so it is raised rather
than reported.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..config import check_enumeration_cap
from ..constants import (
    ADEQUACY_MODE_THEOREM,
    CLASS_COLUMN_ADEQUATE,
    CLASS_COLUMN_COMPETENT,
    CLASS_E0,
    CLASS_NAMES,
    CLASS_NONDEGENERATE,
    CLASS_P,
    CLASS_P0,
    CLASS_R,
    CLASS_R0,
)
from ..errors import InconsistentReport
from ..linalg import IndexSet, Matrix, Vector, null_space_basis, principal_minors
from .competence import is_column_adequate, is_column_competent
from .minors import has_trivial_principal_kernels, is_P, is_P0, is_principally_nondegenerate
from .semimonotone import is_E0, is_R, is_R0, is_Z
from .verdict import ClassVerdict

FLAG_ADEQUACY_MODES_AGREE = 'adequacy_modes_agree'
FLAG_E0_R0_IFF_R = 'e0_implies_r0_iff_r'
FLAG_NONDEGENERATE_IFF_TRIVIAL_KERNELS = 'nondegenerate_iff_trivial_principal_kernels'
FLAG_NONDEGENERATE_IMPLIES_COMPETENT = 'nondegenerate_implies_competent'
FLAG_COMPETENT_NONDEGENERATE_IMPLIES_R0 = 'competent_and_nondegenerate_implies_r0'
FLAG_R_IMPLIES_R0 = 'r_implies_r0'
FLAG_P_IMPLIES_P0 = 'p_implies_p0'
FLAG_P_IMPLIES_NONDEGENERATE = 'p_implies_nondegenerate'
FLAG_ADEQUATE_IMPLIES_P0 = 'adequate_implies_p0'


@dataclass(frozen=True)
class ClassificationReport:
    matrix: Matrix
    verdicts: Dict[str, ClassVerdict]
    consistency_flags: Dict[str, bool]
    minors: List[Tuple[IndexSet, Fraction]] = field(default_factory=list)
    kernel_basis: List[Vector] = field(default_factory=list)
    zero_minor_support: Optional[IndexSet] = None

    def member(self, class_name: str) -> bool:
        return self.verdicts[class_name].member


def _implies(a: bool, b: bool) -> bool:
    return (not a) or b


def _consistency_flags(verdicts: Dict[str, ClassVerdict], trivial_kernels: bool) -> Dict[str, bool]:
    m = {name: verdict.member for name, verdict in verdicts.items()}
    return {
        # is_column_adequate raises on disagreement before we get here
        FLAG_ADEQUACY_MODES_AGREE: True,
        FLAG_E0_R0_IFF_R: _implies(m[CLASS_E0], m[CLASS_R0] == m[CLASS_R]),
        FLAG_NONDEGENERATE_IFF_TRIVIAL_KERNELS: m[CLASS_NONDEGENERATE] == trivial_kernels,
        FLAG_NONDEGENERATE_IMPLIES_COMPETENT: _implies(m[CLASS_NONDEGENERATE], m[CLASS_COLUMN_COMPETENT]),
        FLAG_COMPETENT_NONDEGENERATE_IMPLIES_R0: _implies(
            m[CLASS_COLUMN_COMPETENT] and m[CLASS_NONDEGENERATE], m[CLASS_R0]
        ),
        FLAG_R_IMPLIES_R0: _implies(m[CLASS_R], m[CLASS_R0]),
        FLAG_P_IMPLIES_P0: _implies(m[CLASS_P], m[CLASS_P0]),
        FLAG_P_IMPLIES_NONDEGENERATE: _implies(m[CLASS_P], m[CLASS_NONDEGENERATE]),
        FLAG_ADEQUATE_IMPLIES_P0: _implies(m[CLASS_COLUMN_ADEQUATE], m[CLASS_P0]),
    }


def classify(matrix: Matrix, adequacy_mode: str = ADEQUACY_MODE_THEOREM) -> ClassificationReport:
    """
    Decides every matrix class for A and cross-checks the results.

    Args:
        matrix (Matrix): The matrix A.
        adequacy_mode (str): Which adequacy procedure supplies the verdict; the
            other one is always run as a cross-check.

    Returns:
        ClassificationReport: Verdicts in report order, consistency flags,
        principal minors and a basis of ker A.

    Raises:
        CapExceeded: If n is above the enumeration cap.
        ModeDisagreement: If the two adequacy procedures disagree.
        InconsistentReport: If any other cross-check fails.
    """
    check_enumeration_cap(matrix.n)
    logging.info(f"Classifying {matrix.n}x{matrix.n} matrix over {2 ** matrix.n - 1} supports")

    minors = principal_minors(matrix)
    decided = [
        is_column_competent(matrix),
        is_column_adequate(matrix, mode=adequacy_mode, cross_check=True),
        is_P0(matrix, minors),
        is_P(matrix, minors),
        is_principally_nondegenerate(matrix, minors),
        is_Z(matrix),
        is_E0(matrix),
        is_R0(matrix),
        is_R(matrix),
    ]
    by_name = {verdict.class_name: verdict for verdict in decided}
    verdicts = {name: by_name[name] for name in CLASS_NAMES}

    trivial_kernels, zero_minor_support = has_trivial_principal_kernels(matrix)
    flags = _consistency_flags(verdicts, trivial_kernels)
    broken = [name for name, ok in flags.items() if not ok]
    if broken:
        logging.error(f"Classification of {matrix.rows} fails cross-checks: {broken}")
        raise InconsistentReport(f"classification fails cross-checks: {', '.join(broken)}")

    members = [name for name in CLASS_NAMES if verdicts[name].member]
    logging.info(f"Classification complete; member of {members or 'no class'}")
    return ClassificationReport(
        matrix=matrix,
        verdicts=verdicts,
        consistency_flags=flags,
        minors=minors,
        kernel_basis=null_space_basis(matrix),
        zero_minor_support=zero_minor_support,
    )

