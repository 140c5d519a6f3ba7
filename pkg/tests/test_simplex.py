from fractions import Fraction

import pytest

from src.constants import REL_EQ, REL_GE, REL_GT, REL_LE
from src.errors import UnsupportedStrictSystem
from src.linalg import constraint, lp_feasible, lp_maximize
from src.linalg.simplex import STATUS_INFEASIBLE, STATUS_OPTIMAL, STATUS_UNBOUNDED


def test_feasible_system_returns_exact_witness():
    system = [constraint([1, 1], REL_EQ, 1), constraint([1, -1], REL_GE, "1/3")]
    result = lp_feasible(system, nonnegative=True)
    assert result.feasible
    assert all(c.holds(result.witness) for c in system)
    assert all(x >= 0 for x in result.witness)


def test_infeasible_system():
    system = [constraint([1], REL_GE, 1), constraint([1], REL_LE, 0)]
    assert not lp_feasible(system).feasible


def test_free_variables_may_go_negative():
    system = [constraint([1, 0], REL_LE, -2), constraint([0, 1], REL_EQ, 5)]
    result = lp_feasible(system)
    assert result.feasible
    assert result.witness[0] <= -2
    assert not lp_feasible(system, nonnegative=True).feasible


def test_homogeneous_strict_system():
    # x - y = 0, x > 0, y > 0
    feasible = [constraint([1, -1], REL_EQ), constraint([1, 0], REL_GT), constraint([0, 1], REL_GT)]
    result = lp_feasible(feasible)
    assert result.feasible
    assert result.witness[0] > 0 and result.witness[0] == result.witness[1]

    # x + y = 0, x > 0, y > 0
    infeasible = [constraint([1, 1], REL_EQ), constraint([1, 0], REL_GT), constraint([0, 1], REL_GT)]
    assert not lp_feasible(infeasible).feasible


def test_strict_with_nonzero_rhs_is_rejected():
    with pytest.raises(UnsupportedStrictSystem):
        lp_feasible([constraint([1], REL_GT, 1)])


def test_empty_system_needs_variable_count():
    assert lp_feasible([], num_variables=2).feasible


def test_maximize_optimal():
    system = [constraint([1, 0], REL_LE, 1), constraint([0, 1], REL_LE, "5/2")]
    optimum = lp_maximize(system, [Fraction(1), Fraction(1)], nonnegative=True)
    assert optimum.status == STATUS_OPTIMAL
    assert optimum.value == Fraction(7, 2)
    assert optimum.point == (Fraction(1), Fraction(5, 2))


def test_maximize_unbounded_and_infeasible():
    unbounded = lp_maximize([constraint([1, -1], REL_LE, 0)], [Fraction(1), Fraction(0)], nonnegative=True)
    assert unbounded.status == STATUS_UNBOUNDED

    infeasible = lp_maximize(
        [constraint([1], REL_GE, 2), constraint([1], REL_LE, 1)], [Fraction(1)], nonnegative=True
    )
    assert infeasible.status == STATUS_INFEASIBLE


def test_maximize_rejects_strict():
    with pytest.raises(UnsupportedStrictSystem):
        lp_maximize([constraint([1], REL_GT)], [Fraction(1)])
