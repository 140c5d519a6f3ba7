import pytest

from src.constants import CONE_BOUNDARY, CONE_INTERIOR, CONE_OUTSIDE, CONE_SINGULAR
from src.degree import (
    cone_membership,
    degeneracy_witness,
    is_q_nondegenerate,
    local_degree,
    ppt_image,
    verify_ppt_degree_relation,
)
from src.errors import DegenerateQ
from src.linalg import IndexSet, Matrix, vector
from tests.conftest import matrix


def test_negative_identity_degree_zero():
    result = local_degree(matrix([-1, 0], [0, -1]), vector([1, 1]))
    assert result.value == 0
    assert [(alpha.label(), index) for alpha, index in result.contributions] == [
        ("{}", 1), ("{1}", -1), ("{2}", -1), ("{1,2}", 1),
    ]


def test_identity_degree_one():
    result = local_degree(Matrix.identity(2), vector([-1, 3]))
    assert result.value == 1
    assert [alpha.label() for alpha, _ in result.contributions] == ["{1}"]


def test_p_matrix_degree_one():
    assert local_degree(matrix([2, 1], [1, 2]), vector([-1, -1])).value == 1


def test_degenerate_q_is_rejected():
    A = Matrix.identity(2)
    assert not is_q_nondegenerate(A, vector([0, 1]))
    with pytest.raises(DegenerateQ):
        local_degree(A, vector([0, 1]))


def test_degeneracy_witness_is_first_offending_cone():
    # q = (-1,-1) spans the singular cone {1,2} and sits on the boundary of cone {1}
    A = matrix([1, 0], [1, 0])
    alpha, membership = degeneracy_witness(A, vector([-1, -1]))
    assert (alpha.label(), membership) == ("{1}", CONE_BOUNDARY)
    assert is_q_nondegenerate(A, vector([-1, -2]))


def test_cone_membership():
    A = Matrix.identity(2)
    empty = IndexSet.empty(2)
    assert cone_membership(A, vector([1, 1]), empty) == CONE_INTERIOR
    assert cone_membership(A, vector([1, 0]), empty) == CONE_BOUNDARY
    assert cone_membership(A, vector([-1, 1]), empty) == CONE_OUTSIDE
    assert cone_membership(matrix([1, 0], [1, 0]), vector([1, 1]), IndexSet.of([1], 2)) == CONE_SINGULAR


def test_ppt_image():
    A = matrix([2, 1], [1, 1])
    q = vector([4, 1])
    # q'_1 = -q_1 / 2, q'_2 = q_2 - 1 * q_1 / 2
    assert ppt_image(A, q, IndexSet.of([0], 2)) == vector([-2, -1])
    assert ppt_image(A, q, IndexSet.empty(2)) == q


def test_ppt_degree_relation_holds():
    report = verify_ppt_degree_relation(Matrix.identity(2), vector([1, 1]), IndexSet.of([0], 2))
    assert report.applicable
    assert report.pivot_sign == 1
    assert report.q_prime == vector([-1, 1])
    assert report.original.value == report.transformed.value == 1
    assert report.holds


def test_ppt_degree_relation_with_negative_pivot():
    A = matrix([-1, 0], [0, 1])
    report = verify_ppt_degree_relation(A, vector([1, 2]), IndexSet.of([0], 2))
    assert report.applicable
    assert report.pivot_sign == -1
    assert report.transformed.value == -report.original.value
    assert report.holds


def test_ppt_degree_relation_preconditions():
    singular = verify_ppt_degree_relation(matrix([0, 1], [1, 0]), vector([1, 1]), IndexSet.of([0], 2))
    assert not singular.applicable
    assert singular.holds is None

    degenerate = verify_ppt_degree_relation(Matrix.identity(2), vector([0, 1]), IndexSet.of([0], 2))
    assert "q is degenerate with respect to A" in degenerate.failed_preconditions
    assert degenerate.holds is None
