from fractions import Fraction

import pytest

from src.constants import METHOD_AUTO, METHOD_ENUMERATE, METHOD_LEMKE
from src.errors import InvalidSolution, SingularPivot
from src.lcp import (
    LCPInstance,
    RayTermination,
    Solution,
    check_local_w_uniqueness,
    check_w_uniqueness_converse,
    enumerate_solutions,
    f_map,
    inversion_vector,
    lemke_solve,
    psi,
    solution_from_z,
    solve,
    verify_solution,
    w_solution_set,
)
from src.linalg import Matrix, vector
from tests.conftest import matrix


def instance(A, q) -> LCPInstance:
    return LCPInstance(A, vector(q))


def test_lemke_trivial_when_q_nonnegative():
    result = lemke_solve(instance(Matrix.identity(2), [1, 1]))
    assert isinstance(result, Solution)
    assert result.z == vector([0, 0])
    assert result.w == vector([1, 1])


def test_lemke_identity():
    result = lemke_solve(instance(Matrix.identity(2), [-1, -2]))
    assert result.z == vector([1, 2])
    assert result.w == vector([0, 0])


def test_lemke_p_matrix_exact_fractions():
    result = lemke_solve(instance(matrix([2, 1], [1, 2]), [-1, -1]))
    assert result.z == (Fraction(1, 3), Fraction(1, 3))
    assert result.w == vector([0, 0])


def test_lemke_ray_termination_then_auto_fallback(fixture_document):
    document = fixture_document('lcp_instance_2x2')
    inst = LCPInstance(document.A, document.q)
    assert isinstance(lemke_solve(inst), RayTermination)
    outcome = solve(inst, METHOD_AUTO)
    assert outcome.method == METHOD_ENUMERATE
    assert outcome.ray_termination is not None
    assert outcome.solvable


def test_solve_lemke_only_reports_ray(fixture_document):
    document = fixture_document('lcp_instance_2x2')
    outcome = solve(LCPInstance(document.A, document.q), METHOD_LEMKE)
    assert not outcome.solvable
    assert outcome.ray_termination is not None


def test_solve_unknown_method():
    with pytest.raises(ValueError):
        solve(instance(Matrix.identity(1), [1]), 'newton')


def test_enumeration_of_2x2_instance(fixture_document):
    document = fixture_document('lcp_instance_2x2')
    inst = LCPInstance(document.A, document.q)
    pieces = enumerate_solutions(inst)
    assert len(pieces) == 1
    piece = pieces[0]
    assert piece.support.label() == "{1,2}"
    assert piece.particular.z == vector([1, 0])
    assert piece.particular.w == vector([0, 0])
    assert piece.ray_basis == [vector([3, 1])]
    assert piece.dimension == 1
    assert piece.w_constant
    assert piece.contains(vector([1, 0]))
    assert piece.contains(vector([4, 1]))
    assert not piece.contains(vector([0, 0]))
    assert not piece.contains(vector([0, 1]))
    w_set = w_solution_set(inst, pieces)
    assert w_set.is_finite and w_set.finite == [vector([0, 0])]


def test_segment_piece_starts_at_its_smallest_vertex():
    # z1 + z2 = 1 with z >= 0: the segment from (0,1) to (1,0)
    pieces = enumerate_solutions(instance(matrix([1, 1], [1, 1]), [-1, -1]))
    assert len(pieces) == 1
    piece = pieces[0]
    assert piece.particular.z == vector([0, 1])
    assert piece.ray_basis == [vector([1, -1])]
    assert piece.dimension == 1
    assert piece.w_constant
    assert piece.contains(vector(["1/2", "1/2"]))
    assert piece.contains(vector([1, 0]))
    assert not piece.contains(vector([2, -1]))


def test_enumeration_of_3x3_instance(fixture_document):
    document = fixture_document('lcp_instance_3x3')
    inst = LCPInstance(document.A, document.q)
    pieces = enumerate_solutions(inst)
    assert any(piece.contains(vector([4, 4, 1])) for piece in pieces)
    w_set = w_solution_set(inst, pieces)
    assert not w_set.is_finite
    assert w_set.infinite_witness.support.label() == "{1,2}"


def test_unsolvable_instance_has_no_pieces():
    # w = -1 - z has no nonnegative solution
    assert enumerate_solutions(instance(matrix([-1]), [-1])) == []


def test_every_piece_point_is_a_solution():
    inst = instance(matrix([0, 1], [1, 0]), [-1, -1])
    pieces = enumerate_solutions(inst)
    assert pieces
    for piece in pieces:
        verify_solution(inst, piece.particular.w, piece.particular.z)


def test_verify_solution_lists_problems():
    inst = instance(Matrix.identity(2), [-1, -2])
    with pytest.raises(InvalidSolution) as info:
        verify_solution(inst, vector([0, 0]), vector([1, 1]))
    assert "w_2" in str(info.value)


def test_psi_and_f_map():
    A = matrix([-1, 3], [2, -6])
    assert psi(A, vector([3, 1])) == vector([0, 0])
    assert f_map(A, vector([-4, -1])) == vector([1, -2])


def test_inversion_vector_inverts_f_map(fixture_document):
    document = fixture_document('lcp_instance_2x2')
    inst = LCPInstance(document.A, document.q)
    solution = solution_from_z(inst, vector([4, 1]))
    u = inversion_vector(solution)
    assert u == vector([-4, -1])
    assert f_map(inst.A, u) == inst.q


def test_w_uniqueness_certificate_fails_on_kernel_ray(fixture_document):
    document = fixture_document('lcp_instance_2x2')
    inst = LCPInstance(document.A, document.q)
    solution = solution_from_z(inst, vector([4, 1]))
    verdict = check_local_w_uniqueness(inst, solution)
    assert not verdict.alpha
    assert not verdict.certificate_holds
    assert verdict.violating_pair == ((), vector([3, 1]))
    converse = check_w_uniqueness_converse(inst, solution)
    assert not converse.holds and converse.witness == vector([3, 1])


def test_w_uniqueness_certificate_holds():
    inst = instance(Matrix.identity(2), [1, 1])
    solution = solution_from_z(inst, vector([0, 0]))
    verdict = check_local_w_uniqueness(inst, solution)
    assert verdict.certificate_holds
    assert verdict.alpha.label() == "{1,2}"
    assert check_w_uniqueness_converse(inst, solution).holds


def test_w_uniqueness_needs_nonsingular_pivot():
    inst = instance(matrix([0, 0], [0, 0]), [1, 1])
    with pytest.raises(SingularPivot):
        check_local_w_uniqueness(inst, solution_from_z(inst, vector([0, 0])))


def test_w_uniqueness_rejects_non_solution():
    inst = instance(Matrix.identity(2), [1, 1])
    with pytest.raises(InvalidSolution):
        check_local_w_uniqueness(inst, Solution(vector([0, 0]), vector([0, 0])))
