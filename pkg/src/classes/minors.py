"""
Principal-minor classes: P0, P and principally non-degenerate.
"""

from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from ..config import check_enumeration_cap
from ..constants import CLASS_NONDEGENERATE, CLASS_P, CLASS_P0
from ..linalg import IndexSet, Matrix, null_space_basis, principal_minors, subsets
from .verdict import ClassVerdict

Minors = List[Tuple[IndexSet, Fraction]]


def _minor_test(
    matrix: Matrix,
    class_name: str,
    accept: Callable[[Fraction], bool],
    note: str,
    minors: Optional[Minors] = None,
) -> ClassVerdict:
    check_enumeration_cap(matrix.n)
    for sigma, value in (minors if minors is not None else principal_minors(matrix)):
        if not accept(value):
            return ClassVerdict(
                class_name,
                False,
                witness_set=sigma,
                certificate_note=f"{note}; det A_{sigma.label()} = {value}",
            )
    return ClassVerdict(class_name, True, certificate_note=note)


def is_P0(matrix: Matrix, minors: Optional[Minors] = None) -> ClassVerdict:
    """P0 iff every nonempty principal minor is >= 0; the witness is a negative minor."""
    return _minor_test(matrix, CLASS_P0, lambda d: d >= 0, 'all principal minors >= 0', minors)


def is_P(matrix: Matrix, minors: Optional[Minors] = None) -> ClassVerdict:
    """P iff every nonempty principal minor is > 0; the witness is a non-positive minor."""
    return _minor_test(matrix, CLASS_P, lambda d: d > 0, 'all principal minors > 0', minors)


def is_principally_nondegenerate(matrix: Matrix, minors: Optional[Minors] = None) -> ClassVerdict:
    return _minor_test(matrix, CLASS_NONDEGENERATE, lambda d: d != 0, 'all principal minors != 0', minors)


def has_trivial_principal_kernels(matrix: Matrix) -> Tuple[bool, Optional[IndexSet]]:
    """
    Second route to non-degeneracy: every null(A_σσ) is {0}.

    Kept independent of the determinant route so the two can be compared.
    """
    check_enumeration_cap(matrix.n)
    for sigma in subsets(matrix.n):
        if null_space_basis(matrix.principal(sigma)):
            return False, sigma
    return True, None
