"""
Exact Gaussian elimination.

Rank and determinants use fraction-free (Bareiss) elimination on rows scaled
to integers; kernels, linear solves and inverses use Gauss-Jordan reduction
over Fractions. Pivots are chosen as the first nonzero entry of the column.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from ..errors import DimensionMismatch, SingularPivot
from .types import IndexSet, Matrix, Rows, Vector, orient, subsets

Block = Union[Matrix, Sequence[Sequence[Fraction]]]


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of solve_linear.

    consistent systems carry a particular solution and a kernel basis (empty
    when the solution is unique); inconsistent ones carry a certificate y with
    y^T M = 0 and y^T b != 0.
    """
    consistent: bool
    particular: Optional[Vector] = None
    null_basis: List[Vector] = field(default_factory=list)
    certificate: Optional[Vector] = None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.null_basis


def _as_rows(block: Block, ncols: Optional[int] = None) -> Tuple[Rows, int]:
    rows = [list(row) for row in (block.rows if isinstance(block, Matrix) else block)]
    if rows:
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch(f"ragged block with row lengths {[len(r) for r in rows]}")
        if ncols is not None and ncols != width:
            raise DimensionMismatch(f"block has {width} columns, expected {ncols}")
        return rows, width
    return rows, (ncols or 0)


def _integer_rows(rows: Rows) -> Tuple[List[List[int]], Fraction]:
    """Scales each row to integers; returns the rows and the product of the scale factors."""
    scaled = []
    total = Fraction(1)
    for row in rows:
        factor = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scaled.append([int(Fraction(x) * factor) for x in row])
        total *= factor
    return scaled, total


def _bareiss(matrix: List[List[int]], ncols: int) -> Tuple[List[int], int, List[List[int]]]:
    """
    Fraction-free row echelon form.

    Returns the pivot columns, the sign of the row permutation and the reduced rows.
    Every intermediate entry is a minor of the input, so the divisions are exact.
    """
    m = len(matrix)
    previous = 1
    sign = 1
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == m:
            break
        candidate = next((i for i in range(pivot_row, m) if matrix[i][col] != 0), None)
        if candidate is None:
            continue
        if candidate != pivot_row:
            matrix[pivot_row], matrix[candidate] = matrix[candidate], matrix[pivot_row]
            sign = -sign
        head = matrix[pivot_row][col]
        for i in range(pivot_row + 1, m):
            lead = matrix[i][col]
            for j in range(col + 1, ncols):
                matrix[i][j] = (head * matrix[i][j] - lead * matrix[pivot_row][j]) // previous
            matrix[i][col] = 0
        previous = head
        pivots.append(col)
        pivot_row += 1
    return pivots, sign, matrix


def rank(block: Block, ncols: Optional[int] = None) -> int:
    """
    Exact rank of a (possibly rectangular) block.

    Args:
        block: A Matrix or a list of rows.
        ncols: Column count, needed only when the block has no rows.

    Returns:
        int: The rank.
    """
    rows, width = _as_rows(block, ncols)
    if not rows or width == 0:
        return 0
    integer_rows, _ = _integer_rows(rows)
    pivots, _, _ = _bareiss(integer_rows, width)
    return len(pivots)


def det(block: Block) -> Fraction:
    """
    Exact determinant; the empty 0x0 block has determinant 1.

    Raises:
        DimensionMismatch: If the block is not square.
    """
    rows, width = _as_rows(block)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if width != n:
        raise DimensionMismatch(f"determinant of a {n}x{width} block")
    integer_rows, scale = _integer_rows(rows)
    pivots, sign, reduced = _bareiss(integer_rows, n)
    if len(pivots) < n:
        return Fraction(0)
    return Fraction(sign * reduced[n - 1][n - 1]) / scale


def _reduce(rows: Rows, ncols: int) -> Tuple[Rows, List[int]]:
    """
    In-place reduced row echelon form over the first ncols columns.

    Columns beyond ncols (augmented right-hand sides, tracking identity) are
    carried along but never chosen as pivots.
    """
    m = len(rows)
    pivots = []
    r = 0
    for col in range(ncols):
        if r == m:
            break
        candidate = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if candidate is None:
            continue
        rows[r], rows[candidate] = rows[candidate], rows[r]
        head = rows[r][col]
        rows[r] = [x / head for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return rows, pivots


def _kernel_from_rref(rows: Rows, pivots: List[int], ncols: int) -> List[Vector]:
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(orient(v))
    return basis


def null_space_basis(block: Block, ncols: Optional[int] = None) -> List[Vector]:
    """
    Basis of the exact kernel {v : M v = 0}.

    One vector per free column of the reduced echelon form, scaled to a
    primitive integer vector with positive leading entry.

    Returns:
        list: Empty exactly when the kernel is trivial.
    """
    rows, width = _as_rows(block, ncols)
    if width == 0:
        return []
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(width)) for j in range(width)]
    reduced, pivots = _reduce([[Fraction(x) for x in row] for row in rows], width)
    return _kernel_from_rref(reduced, pivots, width)


def solve_linear(block: Block, b: Sequence[Fraction]) -> SolveResult:
    """
    Solves M x = b exactly.

    Args:
        block: A Matrix or list of rows.
        b: Right-hand side with one entry per row.

    Returns:
        SolveResult: particular solution plus kernel basis, or an inconsistency certificate.

    Raises:
        DimensionMismatch: If b does not have one entry per row.
    """
    rows, width = _as_rows(block)
    m = len(rows)
    if len(b) != m:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m} rows")
    # [M | b | I] so that the I part records the row combination of every reduced row
    augmented = [
        [Fraction(x) for x in row] + [Fraction(b[i])] + [Fraction(int(i == k)) for k in range(m)]
        for i, row in enumerate(rows)
    ]
    reduced, pivots = _reduce(augmented, width)
    for row in reduced[len(pivots):]:
        if row[width] != 0:
            return SolveResult(consistent=False, certificate=tuple(row[width + 1:]))
    particular = [Fraction(0)] * width
    for r, p in enumerate(pivots):
        particular[p] = reduced[r][width]
    trimmed = [row[:width] for row in reduced]
    return SolveResult(
        consistent=True,
        particular=tuple(particular),
        null_basis=_kernel_from_rref(trimmed, pivots, width),
    )


def inverse(block: Block) -> Rows:
    """
    Exact inverse by Gauss-Jordan reduction of [M | I].

    Raises:
        SingularPivot: If the block is singular.
        DimensionMismatch: If the block is not square.
    """
    rows, width = _as_rows(block)
    n = len(rows)
    if width != n:
        raise DimensionMismatch(f"inverse of a {n}x{width} block")
    augmented = [
        [Fraction(x) for x in row] + [Fraction(int(i == k)) for k in range(n)]
        for i, row in enumerate(rows)
    ]
    reduced, pivots = _reduce(augmented, n)
    if len(pivots) < n:
        raise SingularPivot(f"singular {n}x{n} block has no inverse")
    return [row[n:] for row in reduced]


def principal_minors(matrix: Matrix, include_empty: bool = False) -> List[Tuple[IndexSet, Fraction]]:
    """Every principal minor det A_σσ, in subset enumeration order."""
    return [(sigma, det(matrix.principal(sigma))) for sigma in subsets(matrix.n, include_empty)]

