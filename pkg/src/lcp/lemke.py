"""
Lemke's complementary pivoting method in exact arithmetic.

The tableau is [I, -A, -e | q] over the columns w_1..w_n, z_1..z_n, z_0.
Ratio ties are broken lexicographically on the rows of the basis inverse,
which the first n columns hold at every step, so no basis repeats.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from ..config import get_settings
from .instance import LCPInstance, Solution, verify_solution


@dataclass(frozen=True)
class RayTermination:
    """Lemke stopped on a secondary ray; LCP(q, A) may still have solutions."""
    iterations: int
    entering: str
    z0: Fraction


LemkeOutcome = Union[Solution, RayTermination]


def _label(column: int, n: int) -> str:
    if column < n:
        return f"w{column + 1}"
    if column < 2 * n:
        return f"z{column - n + 1}"
    return 'z0'


def _pivot(rows: List[List[Fraction]], r: int, c: int) -> None:
    head = rows[r][c]
    rows[r] = [x / head for x in rows[r]]
    for i in range(len(rows)):
        if i != r and rows[i][c] != 0:
            factor = rows[i][c]
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]


def _lex_key(row: List[Fraction], n: int, divisor: Fraction) -> Tuple[Fraction, ...]:
    """(rhs, B^-1 row) / divisor, compared lexicographically."""
    return tuple(x / divisor for x in [row[-1]] + row[:n])


def _leaving_row(rows: List[List[Fraction]], column: int, n: int) -> Optional[int]:
    best = None
    for i, row in enumerate(rows):
        if row[column] > 0:
            key = _lex_key(row, n, row[column])
            if best is None or key < best[0]:
                best = (key, i)
    return None if best is None else best[1]


def lemke_solve(inst: LCPInstance, max_iterations: Optional[int] = None) -> LemkeOutcome:
    """
    Solves LCP(q, A) by Lemke's method with covering vector e.

    Args:
        inst (LCPInstance): The instance.
        max_iterations (int): Pivot limit; defaults to the configured lemke_max_iterations.

    Returns:
        Solution | RayTermination: A verified solution, or the ray-termination signal.

    Raises:
        RuntimeError: If the pivot limit is reached.
    """
    n = inst.n
    if all(qi >= 0 for qi in inst.q):
        return verify_solution(inst, inst.q, tuple(Fraction(0) for _ in range(n)))

    limit = max_iterations if max_iterations is not None else get_settings().lemke_max_iterations
    z0 = 2 * n
    rows = [
        [Fraction(int(i == k)) for k in range(n)]
        + [-inst.A[i, j] for j in range(n)]
        + [Fraction(-1), inst.q[i]]
        for i in range(n)
    ]
    basis = list(range(n))

    # z0 enters at the lexicographically smallest (q_i, e_i): min q_i, largest index on ties
    first = min(range(n), key=lambda i: (inst.q[i], -i))
    _pivot(rows, first, z0)
    leaving = basis[first]
    basis[first] = z0
    entering = leaving + n

    iterations = 1
    while True:
        if iterations >= limit:
            raise RuntimeError(f"Lemke's method exceeded {limit} pivots")
        r = _leaving_row(rows, entering, n)
        if r is None:
            z0_value = next((rows[i][-1] for i, b in enumerate(basis) if b == z0), Fraction(0))
            logging.warning(
                f"Lemke's method ended on a secondary ray after {iterations} pivots "
                f"({_label(entering, n)} entering, z0 = {z0_value})"
            )
            return RayTermination(iterations, _label(entering, n), z0_value)
        _pivot(rows, r, entering)
        leaving = basis[r]
        basis[r] = entering
        iterations += 1
        if leaving == z0:
            break
        entering = leaving + n if leaving < n else leaving - n

    values = [Fraction(0)] * (2 * n + 1)
    for i, b in enumerate(basis):
        values[b] = rows[i][-1]
    logging.info(f"Lemke's method found a solution after {iterations} pivots")
    return verify_solution(inst, tuple(values[:n]), tuple(values[n:2 * n]))
