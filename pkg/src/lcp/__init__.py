"""Linear complementarity problems: solving, enumeration and w-uniqueness checks."""

from .instance import LCPInstance, Solution, f_map, inversion_vector, psi, solution_from_z, verify_solution
from .lemke import RayTermination, lemke_solve
from .enumeration import SolutionPiece, SolveOutcome, WSolutionSet, enumerate_solutions, solve, w_solution_set
from .uniqueness import ConverseVerdict, WUniquenessVerdict, check_local_w_uniqueness, check_w_uniqueness_converse

__all__ = [
    'LCPInstance',
    'Solution',
    'f_map',
    'inversion_vector',
    'psi',
    'solution_from_z',
    'verify_solution',
    'RayTermination',
    'lemke_solve',
    'SolutionPiece',
    'SolveOutcome',
    'WSolutionSet',
    'enumerate_solutions',
    'solve',
    'w_solution_set',
    'ConverseVerdict',
    'WUniquenessVerdict',
    'check_local_w_uniqueness',
    'check_w_uniqueness_converse',
]
