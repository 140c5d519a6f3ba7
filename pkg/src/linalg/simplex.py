"""
Exact phase-1 / phase-2 simplex over Fractions with Bland's rule.

Strict inequalities are accepted only in homogeneous systems (every
right-hand side 0). Such a system describes a cone, so it has a strictly
feasible point exactly when it has one whose strict rows clear a margin of 1;
lp_feasible rewrites "a.x > 0" as "a.x >= 1" and "a.x < 0" as "a.x <= -1".
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from ..constants import (
    REL_EQ,
    REL_GE,
    REL_GT,
    REL_LE,
    REL_LT,
    RELATIONS,
    STRICT_RELATIONS,
)
from ..errors import DimensionMismatch, UnsupportedStrictSystem
from .types import Scalar, Vector, dot, to_rational

STATUS_OPTIMAL = 'optimal'
STATUS_UNBOUNDED = 'unbounded'
STATUS_INFEASIBLE = 'infeasible'


@dataclass(frozen=True)
class LinearConstraint:
    """coefficients . x  (relation)  rhs"""
    coefficients: Vector
    relation: str
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}; expected one of {RELATIONS}")

    @property
    def strict(self) -> bool:
        return self.relation in STRICT_RELATIONS

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = dot(self.coefficients, x)
        return {
            REL_EQ: lhs == self.rhs,
            REL_LE: lhs <= self.rhs,
            REL_LT: lhs < self.rhs,
            REL_GE: lhs >= self.rhs,
            REL_GT: lhs > self.rhs,
        }[self.relation]


def constraint(coefficients: Sequence[Union[Scalar, str]], relation: str, rhs: Union[Scalar, str] = 0) -> LinearConstraint:
    """Builds a LinearConstraint from plain numbers."""
    return LinearConstraint(tuple(to_rational(c) for c in coefficients), relation, to_rational(rhs))


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    witness: Optional[Vector] = None


@dataclass(frozen=True)
class LPOptimum:
    status: str
    value: Optional[Fraction] = None
    point: Optional[Vector] = None


class _Tableau:
    """
    Dense simplex tableau T x = b, b >= 0, with one artificial column per row.

    Columns [0, structural) are the real columns; artificials follow.
    """

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], structural: int):
        m = len(rows)
        self.structural = structural
        self.rows = [row + [Fraction(int(k == i)) for k in range(m)] for i, row in enumerate(rows)]
        self.rhs = list(rhs)
        self.basis = [structural + i for i in range(m)]
        self.width = structural + m

    def pivot(self, r: int, c: int) -> None:
        head = self.rows[r][c]
        self.rows[r] = [x / head for x in self.rows[r]]
        self.rhs[r] = self.rhs[r] / head
        for i in range(len(self.rows)):
            if i == r:
                continue
            factor = self.rows[i][c]
            if factor != 0:
                self.rows[i] = [a - factor * p for a, p in zip(self.rows[i], self.rows[r])]
                self.rhs[i] -= factor * self.rhs[r]
        self.basis[r] = c

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), Fraction(0))

    def optimize(self, cost: Sequence[Fraction], eligible: int) -> str:
        """Maximizes cost . x; columns at or beyond eligible never enter."""
        while True:
            entering = None
            for j in range(eligible):
                if j in self.basis:
                    continue
                reduced = cost[j] - sum(
                    (cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0)
                )
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return STATUS_OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (self.rhs[i] / row[entering], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return STATUS_UNBOUNDED
            self.pivot(best[1], entering)

    def drive_out_artificials(self) -> None:
        """After a zero-cost phase 1: pivot artificials out or drop their redundant rows."""
        redundant = []
        for i in range(len(self.rows)):
            if self.basis[i] < self.structural:
                continue
            column = next((j for j in range(self.structural) if self.rows[i][j] != 0), None)
            if column is None:
                redundant.append(i)
            else:
                self.pivot(i, column)
        for i in reversed(redundant):
            del self.rows[i]
            del self.rhs[i]
            del self.basis[i]

    def column_values(self) -> List[Fraction]:
        values = [Fraction(0)] * self.width
        for b, v in zip(self.basis, self.rhs):
            values[b] = v
        return values


def _margin_form(constraints: Sequence[LinearConstraint]) -> List[LinearConstraint]:
    if not any(c.strict for c in constraints):
        return list(constraints)
    if any(c.rhs != 0 for c in constraints):
        raise UnsupportedStrictSystem(
            "strict inequalities are only supported when every right-hand side is 0"
        )
    converted = []
    for c in constraints:
        if c.relation == REL_GT:
            converted.append(LinearConstraint(c.coefficients, REL_GE, Fraction(1)))
        elif c.relation == REL_LT:
            converted.append(LinearConstraint(c.coefficients, REL_LE, Fraction(-1)))
        else:
            converted.append(c)
    return converted


def _num_variables(constraints: Sequence[LinearConstraint], num_variables: Optional[int]) -> int:
    widths = {len(c.coefficients) for c in constraints}
    if num_variables is not None:
        widths.add(num_variables)
    if len(widths) > 1:
        raise DimensionMismatch(f"constraints disagree on the number of variables: {sorted(widths)}")
    return widths.pop() if widths else 0


def _build(constraints: Sequence[LinearConstraint], n: int, nonnegative: bool) -> Tuple[_Tableau, int]:
    """Standard form: split free variables, add one slack per inequality, make b >= 0."""
    inequalities = [c for c in constraints if c.relation != REL_EQ]
    split = 1 if nonnegative else 2
    structural = split * n + len(inequalities)
    rows, rhs = [], []
    slack = split * n
    for c in constraints:
        row = list(c.coefficients)
        if not nonnegative:
            row += [-a for a in c.coefficients]
        row += [Fraction(0)] * len(inequalities)
        if c.relation in (REL_LE, REL_LT):
            row[slack] = Fraction(1)
            slack += 1
        elif c.relation in (REL_GE, REL_GT):
            row[slack] = Fraction(-1)
            slack += 1
        b = c.rhs
        if b < 0:
            row = [-a for a in row]
            b = -b
        rows.append(row)
        rhs.append(b)
    return _Tableau(rows, rhs, structural), split


def _recover(tableau: _Tableau, n: int, split: int) -> Vector:
    values = tableau.column_values()
    if split == 1:
        return tuple(values[:n])
    return tuple(values[j] - values[n + j] for j in range(n))


def _phase_one(tableau: _Tableau) -> bool:
    cost = [Fraction(0)] * tableau.structural + [Fraction(-1)] * (tableau.width - tableau.structural)
    tableau.optimize(cost, tableau.width)
    if tableau.value(cost) < 0:
        return False
    tableau.drive_out_artificials()
    return True


def _check_witness(constraints: Sequence[LinearConstraint], x: Vector) -> None:
    broken = [c for c in constraints if not c.holds(x)]
    if broken:
        raise ArithmeticError(f"simplex witness {x} violates {len(broken)} constraint(s)")


def lp_feasible(
    constraints: Sequence[LinearConstraint],
    num_variables: Optional[int] = None,
    nonnegative: bool = False,
) -> LPResult:
    """
    Decides whether a finite system of linear relations has a rational solution.

    Args:
        constraints: Relations over the same variables (=, <=, <, >=, >).
        num_variables: Number of variables; needed only when constraints is empty.
        nonnegative: Treat every variable as nonnegative instead of free.

    Returns:
        LPResult: feasible with a witness satisfying every constraint exactly, or infeasible.

    Raises:
        UnsupportedStrictSystem: If strict relations appear with a nonzero right-hand side.
    """
    n = _num_variables(constraints, num_variables)
    working = _margin_form(constraints)
    tableau, split = _build(working, n, nonnegative)
    if not _phase_one(tableau):
        return LPResult(feasible=False)
    witness = _recover(tableau, n, split)
    _check_witness(constraints, witness)
    return LPResult(feasible=True, witness=witness)


def lp_maximize(
    constraints: Sequence[LinearConstraint],
    objective: Sequence[Fraction],
    nonnegative: bool = False,
) -> LPOptimum:
    """
    Maximizes objective . x over a non-strict system.

    Returns:
        LPOptimum: optimal with value and maximizer, unbounded with a feasible
        point, or infeasible.

    Raises:
        UnsupportedStrictSystem: If any relation is strict.
    """
    if any(c.strict for c in constraints):
        raise UnsupportedStrictSystem("lp_maximize accepts non-strict relations only")
    n = _num_variables(constraints, len(objective))
    tableau, split = _build(constraints, n, nonnegative)
    if not _phase_one(tableau):
        return LPOptimum(status=STATUS_INFEASIBLE)
    cost = [Fraction(x) for x in objective]
    if split == 2:
        cost += [-x for x in cost]
    cost += [Fraction(0)] * (tableau.width - len(cost))
    status = tableau.optimize(cost, tableau.structural)
    point = _recover(tableau, n, split)
    _check_witness(constraints, point)
    if status == STATUS_UNBOUNDED:
        return LPOptimum(status=STATUS_UNBOUNDED, point=point)
    return LPOptimum(status=STATUS_OPTIMAL, value=dot(objective, point), point=point)
