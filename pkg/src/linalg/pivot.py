"""
Principal pivot transform and Schur complement.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from ..errors import SingularPivot
from .elimination import det, inverse
from .types import IndexSet, Matrix, mat_mul


@dataclass(frozen=True)
class PPTResult:
    pivot_set: IndexSet
    transformed: Matrix
    pivot_det_sign: int


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def ppt(matrix: Matrix, alpha: IndexSet) -> PPTResult:
    """
    Principal pivot transform of A on alpha, kept in the original index positions.

    Blocks: A'_aa = A_aa^-1, A'_ab = -A_aa^-1 A_ab, A'_ba = A_ba A_aa^-1,
    A'_bb = A_bb - A_ba A_aa^-1 A_ab, with b the complement of alpha.

    Args:
        matrix (Matrix): The matrix A.
        alpha (IndexSet): The pivot set; the empty set returns A unchanged.

    Returns:
        PPTResult: The transformed matrix and the sign of det A_aa.

    Raises:
        SingularPivot: If det A_aa = 0.
    """
    if alpha.ambient != matrix.n:
        raise ValueError(f"index set over {alpha.ambient} indices for a matrix of order {matrix.n}")
    if not alpha:
        return PPTResult(alpha, matrix, 1)

    pivot_det = det(matrix.principal(alpha))
    if pivot_det == 0:
        raise SingularPivot(f"det A_{alpha.label()} = 0; no principal pivot transform", alpha)

    beta = alpha.complement()
    a_inv = inverse(matrix.principal(alpha))
    a_ab = matrix.block(alpha, beta)
    a_ba = matrix.block(beta, alpha)
    a_bb = matrix.block(beta, beta)

    top_right = [[-x for x in row] for row in mat_mul(a_inv, a_ab, len(beta))]
    bottom_left = mat_mul(a_ba, a_inv, len(alpha))
    correction = mat_mul(bottom_left, a_ab, len(beta))
    bottom_right = [[a - c for a, c in zip(row, crow)] for row, crow in zip(a_bb, correction)]

    rows: List[List[Fraction]] = [[Fraction(0)] * matrix.n for _ in range(matrix.n)]
    for r, i in enumerate(alpha):
        for c, j in enumerate(alpha):
            rows[i][j] = a_inv[r][c]
        for c, j in enumerate(beta):
            rows[i][j] = top_right[r][c]
    for r, i in enumerate(beta):
        for c, j in enumerate(alpha):
            rows[i][j] = bottom_left[r][c]
        for c, j in enumerate(beta):
            rows[i][j] = bottom_right[r][c]

    return PPTResult(alpha, Matrix.from_rows(rows), _sign(pivot_det))


def schur_complement(matrix: Matrix, alpha: IndexSet) -> List[List[Fraction]]:
    """
    A / A_aa = A_bb - A_ba A_aa^-1 A_ab, as a |b| x |b| list of rows.

    Raises:
        SingularPivot: If det A_aa = 0.
    """
    beta = alpha.complement()
    if not alpha:
        return matrix.block(beta, beta)
    if det(matrix.principal(alpha)) == 0:
        raise SingularPivot(f"det A_{alpha.label()} = 0; no Schur complement", alpha)
    a_inv = inverse(matrix.principal(alpha))
    correction = mat_mul(mat_mul(matrix.block(beta, alpha), a_inv, len(alpha)), matrix.block(alpha, beta), len(beta))
    return [[a - c for a, c in zip(row, crow)] for row, crow in zip(matrix.block(beta, beta), correction)]
