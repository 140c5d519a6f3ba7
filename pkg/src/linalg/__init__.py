"""Exact rational linear algebra: elimination, LP feasibility and principal pivoting."""

from .types import (
    IndexSet,
    Matrix,
    Rational,
    Vector,
    embed,
    mat_vec,
    orient,
    restrict,
    subsets,
    vector,
)
from .elimination import (
    SolveResult,
    det,
    inverse,
    null_space_basis,
    principal_minors,
    rank,
    solve_linear,
)
from .simplex import LinearConstraint, LPOptimum, LPResult, constraint, lp_feasible, lp_maximize
from .pivot import PPTResult, ppt, schur_complement

__all__ = [
    'IndexSet',
    'Matrix',
    'Rational',
    'Vector',
    'embed',
    'mat_vec',
    'orient',
    'restrict',
    'subsets',
    'vector',
    'SolveResult',
    'det',
    'inverse',
    'null_space_basis',
    'principal_minors',
    'rank',
    'solve_linear',
    'LinearConstraint',
    'LPOptimum',
    'LPResult',
    'constraint',
    'lp_feasible',
    'lp_maximize',
    'PPTResult',
    'ppt',
    'schur_complement',
]
